#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "waringlab/families.hpp"
#include "waringlab/rng.hpp"

using namespace waringlab;

namespace {

ProjPoint pt(std::initializer_list<long> coords) {
  RatVector v(static_cast<Eigen::Index>(coords.size()));
  Eigen::Index i = 0;
  for (long c : coords) v(i++) = Rat(c);
  return ProjPoint(std::move(v));
}

PointSet standard_simplex(int n) {
  std::vector<ProjPoint> pts;
  for (int i = 0; i <= n; ++i) {
    RatVector v(n + 1);
    v.setConstant(Rat(0));
    v(i) = Rat(1);
    pts.emplace_back(std::move(v));
  }
  return PointSet(n, std::move(pts));
}

Form fermat(int n) {
  Form f(n, 3);
  for (int i = 0; i <= n; ++i) {
    Exponents a(static_cast<std::size_t>(n + 1), 0);
    a[static_cast<std::size_t>(i)] = 3;
    f.set_coeff(a, Rat(1));
  }
  return f;
}

}  // namespace

TEST_CASE("coefficients_for") {
  const Form f = fermat(3);
  const auto all_ones = coefficients_for(f, standard_simplex(3));
  REQUIRE(all_ones.has_value());
  for (const auto& c : *all_ones) CHECK(c == Rat(1));

  // Fermat is not a single cube.
  const PointSet single(3, {pt({1, 0, 0, 0})});
  CHECK(!coefficients_for(f, single).has_value());

  CHECK_THROWS_AS(coefficients_for(fermat(2), standard_simplex(3)), std::invalid_argument);
}

TEST_CASE("coefficients_for round-trips the conic8 construction") {
  const Witness w = gen_conic8(5);
  for (const auto& dec : w.decomps) {
    const auto solved = coefficients_for(w.form, dec.pts);
    REQUIRE(solved.has_value());
    REQUIRE(solved->size() == dec.coeffs.size());
    for (std::size_t i = 0; i < dec.coeffs.size(); ++i) CHECK((*solved)[i] == dec.coeffs[i]);
  }
}

TEST_CASE("is_nonredundant") {
  CHECK(is_nonredundant(fermat(3), standard_simplex(3)));

  // x0^3 against {e0, e1}: the solved coefficient of e1 is zero.
  Form cube(1, 3);
  cube.set_coeff({3, 0}, Rat(1));
  CHECK(!is_nonredundant(cube, standard_simplex(1)));

  CHECK_THROWS_AS(is_nonredundant(fermat(3), PointSet(3, {pt({1, 0, 0, 0})})), std::invalid_argument);
}

TEST_CASE("disjointify") {
  // Identical decompositions cancel to the zero form.
  const Decomposition dec(standard_simplex(2), {Rat(1), Rat(1), Rat(1)}, 3);
  const DisjointPair same = disjointify(fermat(2), dec, dec);
  CHECK(same.residual.is_zero());
  CHECK(same.a.size() == 0);
  CHECK(same.b.size() == 0);

  // Disjoint decompositions pass through unchanged.
  const Witness w = gen_conic8(17);
  const DisjointPair through = disjointify(w.form, w.decomps[0], w.decomps[1]);
  CHECK(through.residual == w.form);
  CHECK(through.a.pts == w.decomps[0].pts);
  CHECK(through.b.pts == w.decomps[1].pts);
}

TEST_CASE("disjointify drops the shared extension cubes of a fermat-plus witness") {
  const int n = 4;
  const Witness w = gen_fermat_plus(n, 23);
  const DisjointPair dp = disjointify(w.form, w.decomps[0], w.decomps[1]);

  // The shared cubes carry equal coefficients, so only the binary cores stay.
  CHECK(dp.a.size() == 2);
  CHECK(dp.b.size() == 3);
  for (const auto& p : dp.a.pts.points()) CHECK(!dp.b.pts.contains(p));

  // The residual form lives on the embedded line: support of dimension 2.
  CHECK(!is_concise(dp.residual));
  const ConciseSupport cs = concise_support(dp.residual);
  CHECK(cs.basis.size() == 2);
  CHECK(is_concise(cs.reduced));

  // Subtracting a single shared cube (the step of the induction) drops the
  // support dimension from n+1 to exactly n.
  for (Eigen::Index i = 0; i < w.decomps[0].pts.size(); ++i) {
    const ProjPoint& p = w.decomps[0].pts[i];
    if (!w.decomps[1].pts.contains(p)) continue;
    Form cube = power(p.rep(), 3);
    cube *= w.decomps[0].coeffs[static_cast<std::size_t>(i)];
    const Form residual = w.form - cube;
    CHECK(!is_concise(residual));
    CHECK(concise_support(residual).basis.size() == static_cast<std::size_t>(n));
    break;
  }
}

TEST_CASE("check_sum_bound") {
  // Binary family: 2 + 3 = d + 2n = 5, slack 0.
  const Witness binary = gen_binary_pair(3);
  const SumBound sb = check_sum_bound(binary.form, binary.decomps[0], binary.decomps[1]);
  CHECK(sb.holds);
  CHECK(sb.slack == 0);

  // conic8: 4 + 4 against 3 + 4, slack 1.
  const Witness conic = gen_conic8(3);
  const SumBound sc = check_sum_bound(conic.form, conic.decomps[0], conic.decomps[1]);
  CHECK(sc.holds);
  CHECK(sc.slack == 1);

  // two-lines: 5 + 5 against 3 + 6, slack 1.
  const Witness lines = gen_two_lines(3);
  const SumBound sl = check_sum_bound(lines.form, lines.decomps[0], lines.decomps[1]);
  CHECK(sl.holds);
  CHECK(sl.slack == 1);

  // Non-concise forms are rejected.
  Form thin(2, 3);
  thin.set_coeff({3, 0, 0}, Rat(1));
  thin.set_coeff({0, 3, 0}, Rat(1));
  const Decomposition td(PointSet(2, {pt({1, 0, 0}), pt({0, 1, 0})}), {Rat(1), Rat(1)}, 3);
  CHECK_THROWS_AS(check_sum_bound(thin, td, td), std::invalid_argument);
}

TEST_CASE("pair_report on equal sets") {
  const PointSet a = standard_simplex(3);
  const PairReport rep = pair_report(a, a);
  CHECK(rep.intersection == a.size());
  CHECK(rep.diff.size() == 0);
  CHECK(rep.diff_collinear);
  CHECK(rep.diff_two_lines);
  CHECK(rep.diff_two_planes);
}

TEST_CASE("pair_report on the structured families") {
  for (int n : {4, 6}) {
    const Witness w2 = gen_case_ii(n, 11);
    const PairReport r2 = pair_report(w2.decomps[0].pts, w2.decomps[1].pts);
    CHECK(r2.intersection == n - 3);
    CHECK(r2.diff_two_lines);
    CHECK(r2.diff_two_planes);
    CHECK(!r2.diff_collinear);
    CHECK(r2.kruskal_a == 2);
    CHECK(r2.kruskal_b == 2);

    const Witness w3 = gen_case_iii(n, 11);
    const PairReport r3 = pair_report(w3.decomps[0].pts, w3.decomps[1].pts);
    CHECK(r3.intersection == n - 2);
    CHECK(r3.diff_two_planes);
    CHECK(r3.kruskal_a == 3);
    CHECK(r3.kruskal_b == 3);
  }
}

TEST_CASE("pair_report flag implications on random small configurations") {
  Rng rng(1234);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = static_cast<int>(rng.uniform_int(2, 4));
    std::vector<ProjPoint> pa, pb;
    const auto sample = [&](std::vector<ProjPoint>& dst, int count) {
      int guard = 0;
      while (static_cast<int>(dst.size()) < count && ++guard < 200) {
        RatVector v(n + 1);
        bool nz = false;
        for (int i = 0; i <= n; ++i) {
          v(i) = Rat(rng.uniform_int(-2, 2));
          nz = nz || !v(i).is_zero();
        }
        if (!nz) continue;
        ProjPoint p{std::move(v)};
        if (std::find(dst.begin(), dst.end(), p) == dst.end()) dst.push_back(std::move(p));
      }
    };
    sample(pa, 4);
    sample(pb, 4);
    if (pa.size() < 4 || pb.size() < 4) continue;
    const PairReport rep = pair_report(PointSet(n, pa), PointSet(n, pb));
    if (rep.diff_collinear) CHECK(rep.diff_two_lines);
    if (rep.diff_two_lines) CHECK(rep.diff_two_planes);
    CHECK(rep.diff.size() == rep.len_a + rep.len_b - 2 * rep.intersection);
  }
}

TEST_CASE("predict_cases") {
  // LGP sets with n >= 3 predict uniqueness.
  CHECK(predict_cases(canonical_orbit_set(4, 5)) == std::set<Trichotomy>{Trichotomy::I});

  const Witness w3 = gen_case_iii(4, 2);
  CHECK(predict_cases(w3.decomps[0].pts) == std::set<Trichotomy>{Trichotomy::III});

  const Witness w2 = gen_case_ii(4, 2);
  CHECK(predict_cases(w2.decomps[0].pts) == std::set<Trichotomy>{Trichotomy::II, Trichotomy::III});

  CHECK_THROWS_AS(predict_cases(standard_simplex(3)), std::invalid_argument);
}

TEST_CASE("verify_fermat_plus_one rejects degree 2") {
  // x0^2 + x0 x1 + x1^2 with decompositions of lengths 2 and 3: all
  // preconditions hold, but the conclusion requires degree 3.
  Form q(1, 2);
  q.set_coeff({2, 0}, Rat(1));
  q.set_coeff({1, 1}, Rat(1));
  q.set_coeff({0, 2}, Rat(1));
  const Decomposition a(PointSet(1, {pt({2, 1}), pt({0, 1})}), {Rat(1), Rat(3, 4)}, 2);
  const Decomposition b(PointSet(1, {pt({0, 1}), pt({1, 1}), pt({1, 2})}),
                        {Rat(3, 2), Rat(3, 2), Rat(-1, 2)}, 2);
  REQUIRE(a.combined() == q);
  REQUIRE(b.combined() == q);
  CHECK(!verify_fermat_plus_one(q, a, b));
}

TEST_CASE("verify_fermat_plus_one") {
  const Witness w = gen_fermat_plus(3, 29);
  CHECK(verify_fermat_plus_one(w.form, w.decomps[0], w.decomps[1]));

  // Perturbing one point of B off the line breaks membership upstream.
  {
    std::vector<ProjPoint> pts = w.decomps[1].pts.points();
    RatVector v = pts.back().coords();
    v(w.n) += Rat(1);
    pts.back() = ProjPoint(std::move(v));
    bool threw = false;
    try {
      Decomposition moved(PointSet(w.n, std::move(pts)), w.decomps[1].coeffs, 3);
      verify_fermat_plus_one(w.form, w.decomps[0], moved);
    } catch (const std::invalid_argument&) {
      threw = true;
    }
    CHECK(threw);
  }

  // A redundant superset of the Fermat decomposition: the extra point
  // solves to coefficient zero, so non-redundancy fails upstream.
  {
    const int n = 3;
    const Form f = fermat(n);
    const Decomposition a(standard_simplex(n), std::vector<Rat>(n + 1, Rat(1)), 3);
    std::vector<ProjPoint> sup = standard_simplex(n).points();
    sup.push_back(pt({1, 1, 1, 1}));
    std::vector<Rat> coeffs(n + 1, Rat(1));
    coeffs.push_back(Rat(0));
    bool threw = false;
    try {
      Decomposition b(PointSet(n, std::move(sup)), coeffs, 3);
      verify_fermat_plus_one(f, a, b);
    } catch (const std::invalid_argument&) {
      threw = true;
    }
    CHECK(threw);
  }
}

TEST_CASE("sum bound and CB hold for every generated pair") {
  Rng rng(55);
  for (int trial = 0; trial < 6; ++trial) {
    const std::uint64_t s = rng.next_u64();
    for (const Witness& w :
         {gen_binary_pair(s), gen_conic8(s), gen_two_lines(s), gen_fermat_plus(4, s), gen_case_iii(5, s)}) {
      CHECK(check_sum_bound(w.form, w.decomps[0], w.decomps[1]).holds);
      const DisjointPair dp = disjointify(w.form, w.decomps[0], w.decomps[1]);
      if (dp.a.size() > 0 && dp.b.size() > 0) {
        const PointSet z = set_union(dp.a.pts, dp.b.pts);
        CHECK(cb_check(z, 3));
        CHECK(cb_hf_inequality(z, 3));
      }
    }
  }
}
