#include "waringlab/terracini.hpp"

#include <stdexcept>

#include "waringlab/decomp.hpp"
#include "waringlab/rng.hpp"

namespace waringlab {

TangentBlock tangent_block(const ProjPoint& l, int d) {
  if (d < 2) throw std::invalid_argument("tangent_block: degree must be at least 2");
  const int n = l.n();
  const Form base = power(l.rep(), d - 1);
  RatMatrix m(n + 1, monomial_count(n, d));
  for (int i = 0; i <= n; ++i) m.row(i) = multiply_by_variable(base, i).coefficient_vector().transpose();
  return {l, d, std::move(m)};
}

namespace {

RatMatrix stacked_tangents(const PointSet& a, int d) {
  const int n = a.n();
  RatMatrix stack(a.size() * (n + 1), monomial_count(n, d));
  for (Eigen::Index i = 0; i < a.size(); ++i)
    stack.middleRows(i * (n + 1), n + 1) = tangent_block(a[i], d).matrix;
  return stack;
}

}  // namespace

int terracini_defect(const PointSet& a, int d) {
  if (a.empty()) throw std::invalid_argument("terracini_defect: empty point set");
  if (rank(power_matrix(a, d)) != a.size()) throw std::domain_error("dependent d-th powers");
  const Eigen::Index total = a.size() * (a.n() + 1);
  return static_cast<int>(total - rank(stacked_tangents(a, d)));
}

bool in_concise_terracini(const PointSet& a) {
  const int n = a.n();
  if (n < 3) throw std::invalid_argument("in_concise_terracini: requires n >= 3");
  if (a.size() != n + 2) throw std::invalid_argument("in_concise_terracini: set must have n+2 points");
  if (span_dim(a) != n) throw std::invalid_argument("in_concise_terracini: set must span projective space");
  return kruskal_rank(a) <= 3;
}

RestrictedDependence restricted_dependence(const PointSet& a, const std::vector<LinVec>& subspace_basis,
                                           int d) {
  const int n = a.n();
  const int k = static_cast<int>(subspace_basis.size());
  if (k < 1 || k > n) throw std::invalid_argument("restricted_dependence: basis must span a proper subspace");

  RatMatrix b(n + 1, k);
  for (int j = 0; j < k; ++j) b.col(j) = subspace_basis[static_cast<std::size_t>(j)].coords();
  if (rank(b) != k) throw std::invalid_argument("restricted_dependence: basis is linearly dependent");

  // Coordinates of every point inside the subspace.
  std::vector<ProjPoint> restricted;
  for (const auto& p : a.points()) {
    const auto c = solve_linear(b, p.coords());
    if (!c) throw std::invalid_argument("restricted_dependence: point outside the subspace");
    restricted.emplace_back(*c);
  }
  const PointSet inner(k - 1, std::move(restricted));

  const bool ambient = rank(stacked_tangents(a, d)) < a.size() * (n + 1);
  const bool inside = rank(stacked_tangents(inner, d)) < a.size() * k;
  return {ambient, inside};
}

int orbit_dimension_estimate(int n, int r, std::uint64_t seed) {
  if (r < 2 || r > n + 1) throw std::invalid_argument("orbit_dimension_estimate: r out of range");
  constexpr int kBound = 20;
  constexpr int kMaxAttempts = 64;

  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    Rng rng(sub_seed(seed, static_cast<std::uint64_t>(attempt)));

    RatMatrix v(n + 1, n + 1);  // column j holds v_j
    for (Eigen::Index j = 0; j <= n; ++j)
      for (Eigen::Index i = 0; i <= n; ++i) v(i, j) = rng.small_int(kBound);
    std::vector<Rat> lambda(static_cast<std::size_t>(r));
    for (auto& lv : lambda) lv = rng.small_nonzero(kBound);

    // Chart validity: the v_j must be independent (so the points span and
    // w = sum lambda_j v_j is nonzero).
    if (!is_invertible(v)) continue;
    RatVector w(n + 1);
    w.setConstant(Rat(0));
    for (int j = 0; j < r; ++j) w += lambda[static_cast<std::size_t>(j)] * v.col(j);

    const auto chart_of = [&](const RatVector& vec) {
      for (Eigen::Index i = 0; i < vec.size(); ++i)
        if (!vec(i).is_zero()) return i;
      return Eigen::Index(-1);
    };

    std::vector<Eigen::Index> chart(static_cast<std::size_t>(n + 1));
    bool ok = true;
    for (Eigen::Index j = 0; j <= n; ++j) {
      chart[static_cast<std::size_t>(j)] = chart_of(v.col(j));
      ok = ok && chart[static_cast<std::size_t>(j)] >= 0;
    }
    const Eigen::Index chart_w = chart_of(w);
    if (!ok || chart_w < 0) continue;

    // Rows: chart coordinates of each of the n+2 image points; columns:
    // the (n+1)^2 entries of the v_j followed by the lambdas.
    const Eigen::Index params = static_cast<Eigen::Index>(n + 1) * (n + 1) + r;
    RatMatrix jac(static_cast<Eigen::Index>(n + 2) * n, params);
    jac.setConstant(Rat(0));
    const auto vcol = [&](Eigen::Index j, Eigen::Index i) { return j * (n + 1) + i; };

    Eigen::Index row = 0;
    for (Eigen::Index j = 0; j <= n; ++j) {
      const Eigen::Index c = chart[static_cast<std::size_t>(j)];
      const Rat vc = v(c, j);
      for (Eigen::Index i = 0; i <= n; ++i) {
        if (i == c) continue;
        // d(v_ij / v_cj) / d v_kj = (delta_ik v_cj - v_ij delta_kc) / v_cj^2
        jac(row, vcol(j, i)) = Rat(1) / vc;
        jac(row, vcol(j, c)) = -v(i, j) / (vc * vc);
        ++row;
      }
    }
    const Rat wc = w(chart_w);
    for (Eigen::Index i = 0; i <= n; ++i) {
      if (i == chart_w) continue;
      for (int t = 0; t < r; ++t) {
        // d(w_i / w_c) / d lambda_t and / d v_kt
        jac(row, static_cast<Eigen::Index>(n + 1) * (n + 1) + t) = (v(i, t) * wc - w(i) * v(chart_w, t)) / (wc * wc);
        jac(row, vcol(t, i)) += lambda[static_cast<std::size_t>(t)] / wc;
        jac(row, vcol(t, chart_w)) += -lambda[static_cast<std::size_t>(t)] * w(i) / (wc * wc);
      }
      ++row;
    }

    return static_cast<int>(rank(jac));
  }
  throw std::runtime_error("orbit_dimension_estimate: resample budget exceeded");
}

}  // namespace waringlab
