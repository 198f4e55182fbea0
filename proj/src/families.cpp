#include "waringlab/families.hpp"

#include <algorithm>

#include "waringlab/rng.hpp"

namespace waringlab {

namespace {

constexpr int kAttempts = 64;
constexpr long kCoordBound = 9;

// Distinct points of the projective line with small integer coordinates.
std::vector<ProjPoint> sample_line_points(Rng& rng, int count) {
  std::vector<ProjPoint> pts;
  int guard = 0;
  while (static_cast<int>(pts.size()) < count) {
    if (++guard > 400) throw ResampleBudgetExceeded("line point sampling");
    RatVector v(2);
    v(0) = rng.small_int(kCoordBound);
    v(1) = rng.small_int(kCoordBound);
    if (v(0).is_zero() && v(1).is_zero()) continue;
    ProjPoint p{std::move(v)};
    if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(std::move(p));
  }
  std::sort(pts.begin(), pts.end());
  return pts;
}

// The unique (up to scale) cube relation of the given points; requires a
// one-dimensional kernel with full support. Scaled to unit peak entry.
std::vector<Rat> full_support_relation(const PointSet& pts, int d) {
  const RatMatrix ker = kernel_basis(power_matrix(pts, d));
  if (ker.cols() != 1) throw std::logic_error("full_support_relation: kernel is not one-dimensional");
  Rat peak(0);
  for (Eigen::Index i = 0; i < ker.rows(); ++i) {
    if (ker(i, 0).is_zero()) throw std::logic_error("full_support_relation: relation misses a point");
    if (abs(ker(i, 0)) > abs(peak)) peak = ker(i, 0);
  }
  std::vector<Rat> out(static_cast<std::size_t>(ker.rows()));
  for (Eigen::Index i = 0; i < ker.rows(); ++i) out[static_cast<std::size_t>(i)] = ker(i, 0) / peak;
  return out;
}

ProjPoint embed_point(const ProjPoint& p, int n_target, int offset) {
  RatVector v(n_target + 1);
  v.setConstant(Rat(0));
  for (Eigen::Index i = 0; i < p.coords().size(); ++i) v(offset + i) = p.coords()(i);
  return ProjPoint(std::move(v));
}

Form embed_form(const Form& f, int n_target, int offset) {
  Form out(n_target, f.d());
  for (const auto& [a, c] : f.terms()) {
    Exponents b(static_cast<std::size_t>(n_target + 1), 0);
    for (std::size_t i = 0; i < a.size(); ++i) b[static_cast<std::size_t>(offset) + i] = a[i];
    out.set_coeff(b, c);
  }
  return out;
}

// Exact certification shared by every generator: a concise form, and every
// decomposition reproducing it non-redundantly.
bool certify(const Witness& w) {
  if (!is_concise(w.form)) return false;
  for (const auto& dec : w.decomps) {
    if (dec.d != w.d || dec.pts.n() != w.n) return false;
    if (!(dec.combined() == w.form)) return false;
    if (!is_nonredundant(w.form, dec.pts)) return false;
  }
  return true;
}

Decomposition slice(const PointSet& pts, const std::vector<Rat>& rel, Eigen::Index from, Eigen::Index to,
                    const Rat& scale, int d) {
  std::vector<ProjPoint> p;
  std::vector<Rat> c;
  for (Eigen::Index i = from; i < to; ++i) {
    p.push_back(pts[i]);
    c.push_back(scale * rel[static_cast<std::size_t>(i)]);
  }
  return Decomposition(PointSet(pts.n(), std::move(p)), std::move(c), d);
}

}  // namespace

Witness gen_binary_pair(std::uint64_t seed) {
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    Rng rng(sub_seed(seed, static_cast<std::uint64_t>(attempt)));
    const PointSet pts(1, sample_line_points(rng, 5));
    const std::vector<Rat> rel = full_support_relation(pts, 3);

    Decomposition a = slice(pts, rel, 0, 2, Rat(1), 3);
    Decomposition b = slice(pts, rel, 2, 5, Rat(-1), 3);
    Witness w{a.combined(), {std::move(a), std::move(b)}, "binary", seed, 1, 3};
    if (certify(w)) return w;
  }
  throw ResampleBudgetExceeded("binary");
}

Witness gen_conic8(std::uint64_t seed) {
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    Rng rng(sub_seed(seed, static_cast<std::uint64_t>(attempt)));

    // Small parameter values keep the cube coefficients tame, which the
    // numerical search downstream depends on.
    std::vector<Rat> ts;
    int guard = 0;
    while (static_cast<int>(ts.size()) < 8) {
      if (++guard > 400) break;
      Rat t(rng.uniform_int(-4, 4), rng.uniform_int(1, 2));
      if (std::find(ts.begin(), ts.end(), t) == ts.end()) ts.push_back(std::move(t));
    }
    if (static_cast<int>(ts.size()) < 8) continue;

    std::vector<ProjPoint> pts;
    for (const Rat& t : ts) {
      RatVector v(3);
      v(0) = Rat(1);
      v(1) = t;
      v(2) = t * t;
      pts.emplace_back(std::move(v));
    }
    std::sort(pts.begin(), pts.end());
    const PointSet conic(2, std::move(pts));
    const std::vector<Rat> rel = full_support_relation(conic, 3);

    // Reject badly unbalanced relations; downstream numerical search needs
    // every cube component to carry nonnegligible weight.
    const Rat balance_floor(1, 1000);
    bool balanced = true;
    for (const Rat& c : rel) balanced = balanced && abs(c) >= balance_floor;
    if (!balanced) continue;

    Decomposition a = slice(conic, rel, 0, 4, Rat(1), 3);
    Decomposition b = slice(conic, rel, 4, 8, Rat(-1), 3);
    Witness w{a.combined(), {std::move(a), std::move(b)}, "conic8", seed, 2, 3};
    if (certify(w)) return w;
  }
  throw ResampleBudgetExceeded("conic8");
}

Witness gen_two_lines(std::uint64_t seed) {
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    Rng rng(sub_seed(seed, static_cast<std::uint64_t>(attempt)));

    const PointSet line1(1, sample_line_points(rng, 5));
    const PointSet line2(1, sample_line_points(rng, 5));
    const std::vector<Rat> rel1 = full_support_relation(line1, 3);
    const std::vector<Rat> rel2 = full_support_relation(line2, 3);

    // A takes 3 points of the first line and 2 of the second; B takes the
    // complementary 5. Line 1 sits in (x0, x1), line 2 in (x2, x3).
    std::vector<ProjPoint> a_pts, b_pts;
    std::vector<Rat> a_coeffs, b_coeffs;
    for (Eigen::Index i = 0; i < 5; ++i) {
      const ProjPoint p = embed_point(line1[i], 3, 0);
      if (i < 3) {
        a_pts.push_back(p);
        a_coeffs.push_back(rel1[static_cast<std::size_t>(i)]);
      } else {
        b_pts.push_back(p);
        b_coeffs.push_back(-rel1[static_cast<std::size_t>(i)]);
      }
    }
    for (Eigen::Index i = 0; i < 5; ++i) {
      const ProjPoint p = embed_point(line2[i], 3, 2);
      if (i < 2) {
        a_pts.push_back(p);
        a_coeffs.push_back(rel2[static_cast<std::size_t>(i)]);
      } else {
        b_pts.push_back(p);
        b_coeffs.push_back(-rel2[static_cast<std::size_t>(i)]);
      }
    }

    Decomposition a(PointSet(3, std::move(a_pts)), std::move(a_coeffs), 3);
    Decomposition b(PointSet(3, std::move(b_pts)), std::move(b_coeffs), 3);
    Witness w{a.combined(), {std::move(a), std::move(b)}, "two-lines", seed, 3, 3};
    if (certify(w)) return w;
  }
  throw ResampleBudgetExceeded("two-lines");
}

Witness extend_with_generic_cubes(const Witness& w, int n_target, std::uint64_t seed) {
  if (n_target <= w.n) throw std::invalid_argument("extend_with_generic_cubes: target dimension too small");
  const int k = n_target - w.n;

  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    Rng rng(sub_seed(seed, static_cast<std::uint64_t>(attempt)));

    // Generic new points; their parts in the complementary coordinates must
    // span, so the extended form covers the new directions. Cubes are taken
    // of the canonical representatives, matching the unit coefficients.
    std::vector<ProjPoint> fresh;
    RatMatrix comp(k, k);
    bool degenerate = false;
    for (int j = 0; j < k; ++j) {
      RatVector v(n_target + 1);
      for (Eigen::Index i = 0; i <= n_target; ++i) v(i) = rng.small_int(kCoordBound);
      bool zero = true;
      for (Eigen::Index i = 0; i <= n_target; ++i) zero = zero && v(i).is_zero();
      if (zero) {
        degenerate = true;
        break;
      }
      const ProjPoint p{std::move(v)};
      for (int i = 0; i < k; ++i) comp(i, j) = p.coords()(w.n + 1 + i);
      fresh.push_back(p);
    }
    if (degenerate || !is_invertible(comp)) continue;

    Form form = embed_form(w.form, n_target, 0);
    for (const auto& p : fresh) form += power(p.rep(), w.d);

    std::vector<Decomposition> decomps;
    for (const auto& base : w.decomps) {
      std::vector<ProjPoint> pts;
      std::vector<Rat> coeffs = base.coeffs;
      for (Eigen::Index i = 0; i < base.pts.size(); ++i) pts.push_back(embed_point(base.pts[i], n_target, 0));
      for (const auto& p : fresh) {
        pts.push_back(p);
        coeffs.push_back(Rat(1));
      }
      decomps.emplace_back(PointSet(n_target, std::move(pts)), std::move(coeffs), w.d);
    }

    Witness out{std::move(form), std::move(decomps), w.family, seed, n_target, w.d};
    if (certify(out)) return out;
  }
  throw ResampleBudgetExceeded("extend-with-generic-cubes");
}

Witness gen_case_ii(int n, std::uint64_t seed) {
  if (n < 3) throw std::invalid_argument("gen_case_ii: requires n >= 3");
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    const std::uint64_t s = sub_seed(seed, static_cast<std::uint64_t>(attempt));
    Witness w = gen_two_lines(sub_seed(s, 1));
    if (n > 3) w = extend_with_generic_cubes(w, n, sub_seed(s, 2));
    w.family = "case-ii";
    w.seed = seed;
    if (kruskal_rank(w.decomps[0].pts) == 2 && kruskal_rank(w.decomps[1].pts) == 2) return w;
  }
  throw ResampleBudgetExceeded("case-ii");
}

Witness gen_case_iii(int n, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("gen_case_iii: requires n >= 2");
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    const std::uint64_t s = sub_seed(seed, static_cast<std::uint64_t>(attempt));
    Witness w = gen_conic8(sub_seed(s, 1));
    if (n > 2) w = extend_with_generic_cubes(w, n, sub_seed(s, 2));
    w.family = "case-iii";
    w.seed = seed;
    if (kruskal_rank(w.decomps[0].pts) == 3 && kruskal_rank(w.decomps[1].pts) == 3) return w;
  }
  throw ResampleBudgetExceeded("case-iii");
}

Witness gen_fermat_plus(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("gen_fermat_plus: requires n >= 1");
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    const std::uint64_t s = sub_seed(seed, static_cast<std::uint64_t>(attempt));
    Witness w = gen_binary_pair(sub_seed(s, 1));
    if (n > 1) w = extend_with_generic_cubes(w, n, sub_seed(s, 2));
    w.family = "fermat-plus";
    w.seed = seed;
    if (verify_fermat_plus_one(w.form, w.decomps[0], w.decomps[1])) return w;
  }
  throw ResampleBudgetExceeded("fermat-plus");
}

Witness gen_pentahedral_nonunique(std::uint64_t seed) {
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    const std::uint64_t s = sub_seed(seed, static_cast<std::uint64_t>(attempt));
    Rng rng(sub_seed(s, 2));
    const Witness plane = gen_conic8(sub_seed(s, 1));

    RatVector l(4);
    for (int i = 0; i < 3; ++i) l(i) = rng.small_int(2);
    l(3) = Rat(1);
    const ProjPoint extra{std::move(l)};

    Form form = embed_form(plane.form, 3, 0);
    form += power(extra.rep(), 3);

    std::vector<Decomposition> decomps;
    for (const auto& base : plane.decomps) {
      std::vector<ProjPoint> pts;
      std::vector<Rat> coeffs = base.coeffs;
      for (Eigen::Index i = 0; i < base.pts.size(); ++i) pts.push_back(embed_point(base.pts[i], 3, 0));
      pts.push_back(extra);
      coeffs.push_back(Rat(1));
      decomps.emplace_back(PointSet(3, std::move(pts)), std::move(coeffs), 3);
    }

    Witness w{std::move(form), std::move(decomps), "penta", seed, 3, 3};
    // The plane cubic must stay degenerate as a 4-variable form: first
    // catalecticant rank 3, i.e. the summand lies in Sub_3.
    if (rank(first_catalecticant(embed_form(plane.form, 3, 0))) != 3) continue;
    if (certify(w)) return w;
  }
  throw ResampleBudgetExceeded("penta");
}

PointSet random_kruskal_set(int n, int r, std::uint64_t seed) {
  if (r < 2 || r > n + 1) throw std::invalid_argument("random_kruskal_set: r out of range");
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    Rng rng(sub_seed(seed, static_cast<std::uint64_t>(attempt)));
    RatMatrix g(n + 1, n + 1);
    for (Eigen::Index i = 0; i <= n; ++i)
      for (Eigen::Index j = 0; j <= n; ++j) g(i, j) = rng.small_int(kCoordBound);
    if (!is_invertible(g)) continue;
    PointSet image = apply_linear(g, canonical_orbit_set(n, r));
    if (span_dim(image) != n || kruskal_rank(image) != r) continue;
    return image;
  }
  throw ResampleBudgetExceeded("kruskal-set");
}

}  // namespace waringlab
