#include "waringlab/decomp.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace waringlab {

Decomposition::Decomposition(PointSet p, std::vector<Rat> c, int degree)
    : pts(std::move(p)), coeffs(std::move(c)), d(degree) {
  if (static_cast<Eigen::Index>(coeffs.size()) != pts.size())
    throw std::invalid_argument("Decomposition: coefficient count mismatch");
  if (d < 1) throw std::invalid_argument("Decomposition: degree must be at least 1");
}

Form Decomposition::combined() const {
  Form f(pts.n(), d);
  for (Eigen::Index i = 0; i < pts.size(); ++i) {
    if (coeffs[static_cast<std::size_t>(i)].is_zero()) continue;
    Form p = power(pts[i].rep(), d);
    p *= coeffs[static_cast<std::size_t>(i)];
    f += p;
  }
  return f;
}

RatMatrix power_matrix(const PointSet& a, int d) {
  RatMatrix m(monomial_count(a.n(), d), a.size());
  for (Eigen::Index j = 0; j < a.size(); ++j) m.col(j) = power(a[j].rep(), d).coefficient_vector();
  return m;
}

std::optional<std::vector<Rat>> coefficients_for(const Form& f, const PointSet& a) {
  if (f.n() != a.n()) throw std::invalid_argument("coefficients_for: ambient dimension mismatch");
  if (a.empty()) return f.is_zero() ? std::optional<std::vector<Rat>>(std::vector<Rat>{}) : std::nullopt;
  const auto x = solve_linear(power_matrix(a, f.d()), f.coefficient_vector());
  if (!x) return std::nullopt;
  std::vector<Rat> out(static_cast<std::size_t>(x->size()));
  for (Eigen::Index i = 0; i < x->size(); ++i) out[static_cast<std::size_t>(i)] = (*x)(i);
  return out;
}

bool is_nonredundant(const Form& f, const PointSet& a) {
  const auto alpha = coefficients_for(f, a);
  if (!alpha) throw std::invalid_argument("is_nonredundant: set does not decompose the form");
  if (rank(power_matrix(a, f.d())) != a.size()) return false;
  return std::none_of(alpha->begin(), alpha->end(), [](const Rat& c) { return c.is_zero(); });
}

DisjointPair disjointify(const Form& f, const Decomposition& a, const Decomposition& b) {
  if (a.d != f.d() || b.d != f.d()) throw std::invalid_argument("disjointify: degree mismatch");
  if (!is_nonredundant(f, a.pts) || !is_nonredundant(f, b.pts))
    throw std::invalid_argument("disjointify: inputs must decompose the form non-redundantly");

  Form residual = f;
  std::vector<ProjPoint> a_pts, b_pts;
  std::vector<Rat> a_coeffs, b_coeffs;

  for (Eigen::Index i = 0; i < a.pts.size(); ++i) {
    const ProjPoint& p = a.pts[i];
    const Rat& alpha = a.coeffs[static_cast<std::size_t>(i)];
    if (b.pts.contains(p)) {
      Form cube = power(p.rep(), f.d());
      cube *= alpha;
      residual -= cube;
    } else {
      a_pts.push_back(p);
      a_coeffs.push_back(alpha);
    }
  }
  for (Eigen::Index j = 0; j < b.pts.size(); ++j) {
    const ProjPoint& p = b.pts[j];
    const Rat& beta = b.coeffs[static_cast<std::size_t>(j)];
    auto shared = std::find(a.pts.points().begin(), a.pts.points().end(), p);
    if (shared == a.pts.points().end()) {
      b_pts.push_back(p);
      b_coeffs.push_back(beta);
    } else {
      const Rat& alpha = a.coeffs[static_cast<std::size_t>(shared - a.pts.points().begin())];
      if (beta != alpha) {
        b_pts.push_back(p);
        b_coeffs.push_back(beta - alpha);
      }
    }
  }

  DisjointPair out{std::move(residual),
                   Decomposition(PointSet(a.pts.n(), std::move(a_pts)), std::move(a_coeffs), f.d()),
                   Decomposition(PointSet(b.pts.n(), std::move(b_pts)), std::move(b_coeffs), f.d())};
  if (!(out.a.combined() == out.residual) || !(out.b.combined() == out.residual))
    throw std::logic_error("disjointify: residual mismatch");
  for (const auto& p : out.a.pts.points())
    if (out.b.pts.contains(p)) throw std::logic_error("disjointify: outputs are not disjoint");
  return out;
}

SumBound check_sum_bound(const Form& f, const Decomposition& a, const Decomposition& b) {
  if (!is_concise(f)) throw std::invalid_argument("check_sum_bound: form is not concise");
  if (!is_nonredundant(f, a.pts) || !is_nonredundant(f, b.pts))
    throw std::invalid_argument("check_sum_bound: decompositions must be non-redundant");
  const long slack = static_cast<long>(a.size() + b.size()) - (f.d() + 2L * f.n());
  return {slack >= 0, slack};
}

namespace {

// Bitmask geometry over a small point list: mask_rank_le2 tests whether the
// points of a mask lie on one line, mask_rank_le3 whether they lie on one
// plane. Line and plane membership masks are precomputed once per report.
struct DiffGeometry {
  const PointSet& pts;
  std::vector<std::vector<std::uint32_t>> line;                // [i][j], i < j
  std::vector<std::vector<std::vector<std::uint32_t>>> plane;  // [i][j][k], i < j < k

  explicit DiffGeometry(const PointSet& d) : pts(d) {
    const std::size_t m = static_cast<std::size_t>(d.size());
    line.assign(m, std::vector<std::uint32_t>(m, 0));
    plane.assign(m, std::vector<std::vector<std::uint32_t>>(m, std::vector<std::uint32_t>(m, 0)));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) {
        std::uint32_t mask = 0;
        for (std::size_t k = 0; k < m; ++k)
          if (rank_of({i, j, k}) <= 2) mask |= 1u << k;
        line[i][j] = mask;
      }
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j)
        for (std::size_t k = j + 1; k < m; ++k) {
          if ((line[i][j] >> k) & 1u) continue;
          std::uint32_t mask = 0;
          for (std::size_t t = 0; t < m; ++t)
            if (rank_of({i, j, k, t}) <= 3) mask |= 1u << t;
          plane[i][j][k] = mask;
        }
  }

  Eigen::Index rank_of(std::initializer_list<std::size_t> idx) const {
    RatMatrix sub(static_cast<Eigen::Index>(idx.size()), pts.n() + 1);
    Eigen::Index r = 0;
    for (std::size_t i : idx) sub.row(r++) = pts[static_cast<Eigen::Index>(i)].coords().transpose();
    return rank(sub);
  }

  bool mask_rank_le2(std::uint32_t mask) const {
    if (std::popcount(mask) <= 2) return true;
    const int i = std::countr_zero(mask);
    const int j = std::countr_zero(mask & ~(1u << i));
    return (mask & ~line[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) == 0;
  }

  bool mask_rank_le3(std::uint32_t mask) const {
    if (std::popcount(mask) <= 3) return true;
    const int i = std::countr_zero(mask);
    const int j = std::countr_zero(mask & ~(1u << i));
    const std::uint32_t off_line = mask & ~line[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    if (off_line == 0) return true;
    const int k = std::countr_zero(off_line);
    return (mask & ~plane[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][static_cast<std::size_t>(k)]) == 0;
  }
};

}  // namespace

PairReport pair_report(const PointSet& a, const PointSet& b) {
  if (a.n() != b.n()) throw std::invalid_argument("pair_report: ambient dimension mismatch");

  std::vector<ProjPoint> diff_pts;
  Eigen::Index intersection = 0;
  for (const auto& p : a.points()) {
    if (b.contains(p))
      ++intersection;
    else
      diff_pts.push_back(p);
  }
  for (const auto& p : b.points())
    if (!a.contains(p)) diff_pts.push_back(p);

  PairReport rep{a.size(),
                 b.size(),
                 intersection,
                 PointSet(a.n(), std::move(diff_pts)),
                 false,
                 false,
                 false,
                 a.empty() ? 0 : kruskal_rank(a),
                 b.empty() ? 0 : kruskal_rank(b)};

  const Eigen::Index m = rep.diff.size();
  if (m > 20) throw std::invalid_argument("pair_report: symmetric difference too large");
  if (m == 0) {
    rep.diff_collinear = rep.diff_two_lines = rep.diff_two_planes = true;
    return rep;
  }

  const DiffGeometry geo(rep.diff);
  const std::uint32_t full = (1u << m) - 1u;
  rep.diff_collinear = geo.mask_rank_le2(full);
  for (std::uint32_t mask = 0; mask <= full / 2; ++mask) {
    if (!rep.diff_two_lines && geo.mask_rank_le2(mask) && geo.mask_rank_le2(full & ~mask))
      rep.diff_two_lines = true;
    if (!rep.diff_two_planes && geo.mask_rank_le3(mask) && geo.mask_rank_le3(full & ~mask))
      rep.diff_two_planes = true;
    if (rep.diff_two_lines && rep.diff_two_planes) break;
  }
  return rep;
}

std::set<Trichotomy> predict_cases(const PointSet& a) {
  if (a.size() != a.n() + 2) throw std::invalid_argument("predict_cases: set must have n+2 points");
  if (span_dim(a) != a.n()) throw std::invalid_argument("predict_cases: set must span projective space");
  const int k = kruskal_rank(a);
  if (k >= 4) return {Trichotomy::I};
  if (k == 3) return {Trichotomy::III};
  return {Trichotomy::II, Trichotomy::III};
}

bool verify_fermat_plus_one(const Form& f, const Decomposition& a, const Decomposition& b) {
  const int n = f.n();
  if (!is_concise(f)) throw std::invalid_argument("verify_fermat_plus_one: form is not concise");
  if (a.size() != n + 1 || b.size() != n + 2)
    throw std::invalid_argument("verify_fermat_plus_one: lengths must be n+1 and n+2");
  if (!is_nonredundant(f, a.pts) || !is_nonredundant(f, b.pts))
    throw std::invalid_argument("verify_fermat_plus_one: decompositions must be non-redundant");
  if (f.d() != 3) return false;
  const PairReport rep = pair_report(a.pts, b.pts);
  return rep.intersection >= n - 1 && rep.diff_collinear;
}

}  // namespace waringlab
