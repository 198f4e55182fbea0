// Acceptance suite: runs every release criterion at full scale and prints
// one PASS/FAIL line per criterion. Exit code is the number of failures.

#include <cstdio>
#include <functional>
#include <string>

#include "waringlab/json_io.hpp"
#include "waringlab/numsearch.hpp"
#include "waringlab/rng.hpp"
#include "waringlab/suites.hpp"
#include "waringlab/terracini.hpp"

using namespace waringlab;

namespace {

int failures = 0;

void report(int index, const std::string& label, bool ok, const std::string& detail = "") {
  std::printf("%s %2d. %s%s%s\n", ok ? "PASS" : "FAIL", index, label.c_str(),
              detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

bool conic8_h_vectors() {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const Witness w = gen_conic8(seed);
    const PointSet z = set_union(w.decomps[0].pts, w.decomps[1].pts);
    if (h_vector(z).values != std::vector<int>{1, 2, 2, 2, 1}) return false;
    if (hilbert_function(z, 2) != 5) return false;
  }
  return true;
}

bool two_lines_h_vectors() {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const Witness w = gen_two_lines(seed);
    const PointSet z = set_union(w.decomps[0].pts, w.decomps[1].pts);
    if (h_vector(z).values != std::vector<int>{1, 3, 2, 2, 2}) return false;
  }
  return true;
}

// Criteria 3 and 4 share the generated witnesses: the structural checks of
// the main theorem, and the nonempty-intersection requirement for n >= 4.
bool main_structure_ok = true;
bool intersections_nonempty = true;

void run_main_theorem_sweep() {
  for (int n = 4; n <= 8; ++n) {
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
      const Witness w2 = gen_case_ii(n, seed);
      const PairReport r2 = pair_report(w2.decomps[0].pts, w2.decomps[1].pts);
      main_structure_ok = main_structure_ok && r2.intersection >= n - 3 && r2.diff_two_lines &&
                          r2.kruskal_a == 2 && r2.kruskal_b == 2;
      intersections_nonempty = intersections_nonempty && r2.intersection >= 1;

      const Witness w3 = gen_case_iii(n, seed);
      const PairReport r3 = pair_report(w3.decomps[0].pts, w3.decomps[1].pts);
      main_structure_ok = main_structure_ok && r3.intersection >= n - 2 && r3.diff_two_planes &&
                          r3.kruskal_a == 3 && r3.kruskal_b == 3;
      intersections_nonempty = intersections_nonempty && r3.intersection >= 1;
    }
  }
}

bool sylvester_bound() {
  for (int n = 1; n <= 6; ++n) {
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
      {
        // Extended binary family: the bound is attained.
        const Witness w = gen_fermat_plus(n, seed);
        const SumBound b = check_sum_bound(w.form, w.decomps[0], w.decomps[1]);
        if (!b.holds || b.slack != 0) return false;
      }
      if (n >= 2) {
        const Witness w = gen_case_iii(n, seed);
        const SumBound b = check_sum_bound(w.form, w.decomps[0], w.decomps[1]);
        if (!b.holds || b.slack <= 0) return false;
      }
      if (n >= 3) {
        const Witness w = gen_case_ii(n, seed);
        const SumBound b = check_sum_bound(w.form, w.decomps[0], w.decomps[1]);
        if (!b.holds || b.slack <= 0) return false;
      }
      if (n == 3) {
        const Witness w = gen_pentahedral_nonunique(seed);
        const SumBound b = check_sum_bound(w.form, w.decomps[0], w.decomps[1]);
        if (!b.holds || b.slack <= 0) return false;
      }
    }
  }
  return true;
}

bool cayley_bacharach() {
  const auto union_ok = [](const Witness& w) {
    const PointSet z = set_union(w.decomps[0].pts, w.decomps[1].pts);
    return cb_check(z, 3) && cb_hf_inequality(z, 3);
  };
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    if (!union_ok(gen_binary_pair(seed))) return false;
    if (!union_ok(gen_conic8(seed))) return false;
    if (!union_ok(gen_two_lines(seed))) return false;
  }
  return true;
}

bool terracini_equivalence() {
  for (int n = 3; n <= 6; ++n)
    for (int r = 2; r <= n + 1; ++r)
      for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        const PointSet a = random_kruskal_set(n, r, seed);
        if ((terracini_defect(a, 3) > 0) != (r <= 3)) return false;
      }
  return true;
}

bool orbit_roundtrip() {
  for (int n = 2; n <= 8; ++n)
    for (int r = 2; r <= n + 1; ++r)
      for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        const PointSet a = random_kruskal_set(n, r, seed);
        const OrbitNormalization norm = normalize_orbit(a);
        if (norm.r != r) return false;
        const PointSet image = apply_linear(norm.g, a);
        const PointSet target = canonical_orbit_set(n, r);
        for (const auto& p : target.points())
          if (!image.contains(p)) return false;
      }
  return true;
}

bool orbit_dimensions() {
  for (int n = 2; n <= 5; ++n)
    for (int r = 2; r <= n + 1; ++r)
      for (std::uint64_t seed = 1; seed <= 20; ++seed)
        if (orbit_dimension_estimate(n, r, seed) != n * (n + 1) + r - 1) return false;
  return true;
}

bool fermat_plus_structure() {
  for (int n = 2; n <= 8; ++n)
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
      const Witness w = gen_fermat_plus(n, seed);
      if (!verify_fermat_plus_one(w.form, w.decomps[0], w.decomps[1])) return false;
    }
  return true;
}

bool numerical_corroboration(std::string& detail) {
  // Case I: the LGP normal form with generic coefficients is identifiable;
  // every converged restart must land on the one exact decomposition.
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Rng rng(sub_seed(seed, 999));
    std::vector<Rat> coeffs;
    for (int i = 0; i < 5; ++i) coeffs.emplace_back(rng.uniform_int(1, 3));
    const Decomposition exact(canonical_orbit_set(3, 4), coeffs, 3);
    const Form f = exact.combined();

    const SearchReport rep = decompose_numeric(f, 5, 50, 1e-18, seed);
    if (rep.converged < 30) {
      detail = "case-I seed " + std::to_string(seed) + ": converged " + std::to_string(rep.converged) + "/50";
      return false;
    }
    if (rep.classes.size() != 1) {
      detail = "case-I seed " + std::to_string(seed) + ": " + std::to_string(rep.classes.size()) + " classes";
      return false;
    }
    if (matching_distance(rep.classes[0], numdecomp_from_exact(exact, f)) >= 1e-6) {
      detail = "case-I seed " + std::to_string(seed) + ": class does not match the exact witness";
      return false;
    }
  }

  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Witness w = gen_pentahedral_nonunique(seed);
    const SearchReport rep = decompose_numeric(w.form, 5, 50, 1e-18, seed);
    if (rep.converged < 30) {
      detail = "penta seed " + std::to_string(seed) + ": converged " + std::to_string(rep.converged) + "/50";
      return false;
    }
    if (rep.classes.size() < 2) {
      detail = "penta seed " + std::to_string(seed) + ": only " + std::to_string(rep.classes.size()) + " class";
      return false;
    }
  }
  return true;
}

bool gradient_check() {
  Rng seeds(20250523);
  Form f(3, 3);
  {
    Rng rng(77);
    for (const auto& a : monomial_basis(3, 3)) f.set_coeff(a, Rat(rng.uniform_int(-5, 5)));
  }
  const CubeFitProblem problem(f, 4);
  const double h = 1e-5;
  for (int point = 0; point < 100; ++point) {
    Rng rng(seeds.next_u64());
    Eigen::VectorXcd x(problem.params());
    for (Eigen::Index i = 0; i < x.size(); ++i) x(i) = rng.complex_gaussian();
    const Eigen::MatrixXcd jac = problem.jacobian(x);
    // One random real and one random imaginary coordinate direction per point.
    const Eigen::Index k = static_cast<Eigen::Index>(rng.uniform_int(0, static_cast<long>(x.size()) - 1));
    Eigen::VectorXcd xp = x, xm = x;
    xp(k) += h;
    xm(k) -= h;
    const Eigen::VectorXcd diff_re = (problem.residual(xp) - problem.residual(xm)) / (2 * h);
    if ((diff_re - jac.col(k)).norm() / std::max(1.0, jac.col(k).norm()) >= 1e-6) return false;
    xp = x;
    xm = x;
    xp(k) += std::complex<double>(0, h);
    xm(k) -= std::complex<double>(0, h);
    const Eigen::VectorXcd diff_im = (problem.residual(xp) - problem.residual(xm)) / (2 * h);
    const Eigen::VectorXcd expect = std::complex<double>(0, 1) * jac.col(k);
    if ((diff_im - expect).norm() / std::max(1.0, expect.norm()) >= 1e-6) return false;
  }
  return true;
}

bool determinism() {
  for (const char* theorem : {"main", "terracini", "cb"}) {
    SuiteConfig cfg{theorem, 3, 5, 5, 424242};
    if (run_suite(cfg).to_json().dump() != run_suite(cfg).to_json().dump()) return false;
  }
  const Json a = witness_to_json(gen_case_ii(6, 8));
  const Json b = witness_to_json(gen_case_ii(6, 8));
  return a.dump() == b.dump();
}

}  // namespace

int main() {
  report(1, "conic8 family: Dh(A u B) = (1,2,2,2,1) and a unique conic, 100 seeds", conic8_h_vectors());
  report(2, "two-lines family: Dh(A u B) = (1,3,2,2,2), 100 seeds", two_lines_h_vectors());

  run_main_theorem_sweep();
  report(3, "main theorem: intersections, two-lines/two-planes geometry, Kruskal ranks (n=4..8, 100 seeds)",
         main_structure_ok);
  report(4, "decompositions of a concise cubic intersect for n >= 4", intersections_nonempty);

  report(5, "length bound l(A)+l(B) >= 3+2n, attained exactly by the extended binary family (n=1..6)",
         sylvester_bound());
  report(6, "disjoint unions satisfy CB(3) and the h-vector inequality, 100 seeds per family",
         cayley_bacharach());
  report(7, "terracini defect positive iff Kruskal rank <= 3 (n=3..6, 200 seeds)", terracini_equivalence());
  report(8, "orbit normalization recovers r and reaches A_r (n=2..8, 50 seeds)", orbit_roundtrip());
  report(9, "orbit dimension estimate equals n(n+1)+r-1 (n<=5, 20 seeds)", orbit_dimensions());
  report(10, "fermat-plus witnesses verify (n=2..8, 100 seeds)", fermat_plus_structure());

  std::string detail;
  const bool numeric_ok = numerical_corroboration(detail);
  report(11, "numerical search: one class on case-I, >= 2 on penta, >= 60% convergence", numeric_ok, detail);
  report(12, "analytic Jacobian matches central differences on 100 points", gradient_check());
  report(13, "suites are byte-deterministic under a fixed seed", determinism());

  std::printf("%s (%d criteria failed)\n", failures == 0 ? "ACCEPTANCE: ALL PASS" : "ACCEPTANCE: FAILURES",
              failures);
  return failures;
}
