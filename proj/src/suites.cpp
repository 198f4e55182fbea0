#include "waringlab/suites.hpp"

#include <array>
#include <stdexcept>

#include "waringlab/rng.hpp"
#include "waringlab/terracini.hpp"

namespace waringlab {

namespace {

struct TrialChecker {
  bool ok = true;
  std::string first;
  Json witness;

  void check(bool cond, const std::string& label, const Json& ctx) {
    if (!cond && ok) {
      ok = false;
      first = label;
      witness = ctx;
    }
  }
};

void check_main(int n, std::uint64_t s, TrialChecker& c) {
  if (n >= 3) {
    const Witness w = gen_case_ii(n, sub_seed(s, 1));
    const Json ctx = witness_to_json(w);
    const PairReport rep = pair_report(w.decomps[0].pts, w.decomps[1].pts);
    c.check(rep.intersection >= n - 3, "case-ii: intersection >= n-3", ctx);
    c.check(rep.diff_two_lines, "case-ii: difference on two lines", ctx);
    c.check(rep.kruskal_a == 2 && rep.kruskal_b == 2, "case-ii: Kruskal rank 2", ctx);
    c.check(predict_cases(w.decomps[0].pts).count(Trichotomy::II) == 1, "case-ii: prediction includes II", ctx);
    c.check(check_sum_bound(w.form, w.decomps[0], w.decomps[1]).holds, "case-ii: length bound", ctx);
    if (n >= 4) c.check(rep.intersection >= 1, "case-ii: decompositions intersect", ctx);
  }
  if (n >= 2) {
    const Witness w = gen_case_iii(n, sub_seed(s, 2));
    const Json ctx = witness_to_json(w);
    const PairReport rep = pair_report(w.decomps[0].pts, w.decomps[1].pts);
    c.check(rep.intersection >= n - 2, "case-iii: intersection >= n-2", ctx);
    c.check(rep.diff_two_planes, "case-iii: difference on two planes", ctx);
    c.check(rep.kruskal_a == 3 && rep.kruskal_b == 3, "case-iii: Kruskal rank 3", ctx);
    c.check(predict_cases(w.decomps[0].pts) == std::set<Trichotomy>{Trichotomy::III},
            "case-iii: prediction is III", ctx);
    c.check(check_sum_bound(w.form, w.decomps[0], w.decomps[1]).holds, "case-iii: length bound", ctx);
    if (n >= 4) c.check(rep.intersection >= 1, "case-iii: decompositions intersect", ctx);
  }
}

void check_sylvester(int n, std::uint64_t s, TrialChecker& c) {
  {
    const Witness w = gen_fermat_plus(n, sub_seed(s, 1));
    const SumBound b = check_sum_bound(w.form, w.decomps[0], w.decomps[1]);
    c.check(b.holds && b.slack == 0, "sylvester: extended binary family attains the bound", witness_to_json(w));
  }
  if (n >= 2) {
    const Witness w = gen_case_iii(n, sub_seed(s, 2));
    const SumBound b = check_sum_bound(w.form, w.decomps[0], w.decomps[1]);
    c.check(b.holds && b.slack > 0, "sylvester: conic family strictly above the bound", witness_to_json(w));
  }
  if (n >= 3) {
    const Witness w = gen_case_ii(n, sub_seed(s, 3));
    const SumBound b = check_sum_bound(w.form, w.decomps[0], w.decomps[1]);
    c.check(b.holds && b.slack > 0, "sylvester: two-lines family strictly above the bound", witness_to_json(w));
  }
  if (n == 3) {
    const Witness w = gen_pentahedral_nonunique(sub_seed(s, 4));
    const SumBound b = check_sum_bound(w.form, w.decomps[0], w.decomps[1]);
    c.check(b.holds && b.slack > 0, "sylvester: pentahedral family strictly above the bound", witness_to_json(w));
  }
}

void check_terracini(int n, std::uint64_t s, TrialChecker& c) {
  if (n < 3) return;
  for (int r = 2; r <= n + 1; ++r) {
    const PointSet a = random_kruskal_set(n, r, sub_seed(s, static_cast<std::uint64_t>(r)));
    const Json ctx = pointset_to_json(a);
    const int defect = terracini_defect(a, 3);
    c.check((defect > 0) == (r <= 3), "terracini: defect positive iff Kruskal rank <= 3", ctx);
    c.check(in_concise_terracini(a) == (r <= 3), "terracini: classifier matches Kruskal rank", ctx);

    const OrbitNormalization norm = normalize_orbit(a);
    c.check(norm.r == r, "orbits: normalization recovers the Kruskal rank", ctx);

    if (n <= 5) {
      const int dim = orbit_dimension_estimate(n, r, sub_seed(s, 100 + static_cast<std::uint64_t>(r)));
      c.check(dim == n * (n + 1) + r - 1, "orbits: estimated dimension n(n+1)+r-1", ctx);
    }
  }
}

void check_cb(int n, std::uint64_t s, TrialChecker& c) {
  const auto union_checks = [&](const Witness& w, const std::string& label) {
    const PointSet z = set_union(w.decomps[0].pts, w.decomps[1].pts);
    const Json ctx = witness_to_json(w);
    const bool cb = cb_check(z, 3);
    c.check(cb, label + ": union satisfies CB(3)", ctx);
    if (cb) c.check(cb_hf_inequality(z, 3), label + ": CB(3) forces the h-vector inequality", ctx);
  };

  union_checks(gen_binary_pair(sub_seed(s, 1)), "cb binary");
  union_checks(gen_conic8(sub_seed(s, 2)), "cb conic8");
  union_checks(gen_two_lines(sub_seed(s, 3)), "cb two-lines");

  if (n >= 3) {
    // Shared extension cubes carry equal coefficients, so disjointification
    // recovers the embedded disjoint cores.
    const Witness w = gen_case_iii(n, sub_seed(s, 4));
    const DisjointPair dp = disjointify(w.form, w.decomps[0], w.decomps[1]);
    const Json ctx = witness_to_json(w);
    c.check(dp.a.size() + dp.b.size() == 8, "cb disjointify: cores recovered", ctx);
    const PointSet z = set_union(dp.a.pts, dp.b.pts);
    const bool cb = cb_check(z, 3);
    c.check(cb, "cb disjointified union satisfies CB(3)", ctx);
    if (cb) c.check(cb_hf_inequality(z, 3), "cb disjointified union: h-vector inequality", ctx);
  }
}

void check_fermat_plus(int n, std::uint64_t s, TrialChecker& c) {
  const Witness w = gen_fermat_plus(n, sub_seed(s, 1));
  const Json ctx = witness_to_json(w);
  c.check(verify_fermat_plus_one(w.form, w.decomps[0], w.decomps[1]),
          "fermat-plus: d=3, large intersection, collinear difference", ctx);
  const PairReport rep = pair_report(w.decomps[0].pts, w.decomps[1].pts);
  c.check(rep.intersection == n - 1, "fermat-plus: intersection is exactly n-1", ctx);
  c.check(rep.diff.size() == 5 && rep.diff_collinear, "fermat-plus: difference is 5 collinear points", ctx);
}

void check_penta(std::uint64_t s, TrialChecker& c) {
  const Witness w = gen_pentahedral_nonunique(sub_seed(s, 1));
  const Json ctx = witness_to_json(w);
  c.check(w.decomps.size() == 2 && !(w.decomps[0].pts == w.decomps[1].pts),
          "penta: two distinct pentahedral decompositions", ctx);
  c.check(is_concise(w.form), "penta: concise form", ctx);

  const PairReport rep = pair_report(w.decomps[0].pts, w.decomps[1].pts);
  c.check(rep.intersection == 1, "penta: decompositions share the added cube", ctx);
  c.check(rep.diff_two_planes, "penta: difference on two planes", ctx);

  // Subtracting the shared cube lands in Sub_3: catalecticant rank 3.
  const auto& a = w.decomps[0];
  for (Eigen::Index i = 0; i < a.pts.size(); ++i) {
    if (!w.decomps[1].pts.contains(a.pts[i])) continue;
    Form cube = power(a.pts[i].rep(), 3);
    cube *= a.coeffs[static_cast<std::size_t>(i)];
    const Form residual = w.form - cube;
    c.check(rank(first_catalecticant(residual)) == 3, "penta: residual summand lies in Sub_3", ctx);
  }
}

}  // namespace

bool is_known_theorem(const std::string& name) {
  static const std::array<const char*, 6> names = {"main", "sylvester-bound", "terracini",
                                                   "cb",   "fermat-plus",     "penta"};
  for (const char* t : names)
    if (name == t) return true;
  return false;
}

SuiteResult run_suite(const SuiteConfig& cfg) {
  if (!is_known_theorem(cfg.theorem)) throw std::invalid_argument("unknown theorem: " + cfg.theorem);
  if (cfg.trials < 1) throw std::invalid_argument("trials must be at least 1");
  if (cfg.n_lo < 1 || cfg.n_hi < cfg.n_lo || cfg.n_hi > 10)
    throw std::invalid_argument("n range must satisfy 1 <= lo <= hi <= 10");

  SuiteResult result{cfg, {}, std::nullopt};
  for (int n = cfg.n_lo; n <= cfg.n_hi; ++n) {
    PerN row{n, 0, 0};
    for (int trial = 0; trial < cfg.trials; ++trial) {
      const std::uint64_t s = sub_seed(sub_seed(cfg.seed, static_cast<std::uint64_t>(n)),
                                       static_cast<std::uint64_t>(trial));
      TrialChecker checker;
      if (cfg.theorem == "main")
        check_main(n, s, checker);
      else if (cfg.theorem == "sylvester-bound")
        check_sylvester(n, s, checker);
      else if (cfg.theorem == "terracini")
        check_terracini(n, s, checker);
      else if (cfg.theorem == "cb")
        check_cb(n, s, checker);
      else if (cfg.theorem == "fermat-plus")
        check_fermat_plus(n, s, checker);
      else if (cfg.theorem == "penta")
        check_penta(s, checker);

      if (checker.ok) {
        ++row.pass;
      } else {
        ++row.fail;
        if (!result.first_failure)
          result.first_failure = SuiteFailure{n, trial, checker.first, checker.witness};
      }
    }
    result.per_n.push_back(row);
  }
  return result;
}

Json SuiteResult::to_json() const {
  Json per = Json::array();
  for (const auto& p : per_n) per.push_back({{"n", p.n}, {"pass", p.pass}, {"fail", p.fail}});
  Json failure = nullptr;
  if (first_failure)
    failure = {{"n", first_failure->n},
               {"trial", first_failure->trial},
               {"check", first_failure->check},
               {"witness", first_failure->witness}};
  return {{"theorem", config.theorem}, {"n_lo", config.n_lo},       {"n_hi", config.n_hi},
          {"trials", config.trials},   {"seed", config.seed},       {"results", std::move(per)},
          {"first_failure", failure},  {"all_pass", all_pass()}};
}

}  // namespace waringlab
