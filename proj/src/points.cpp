#include "waringlab/points.hpp"

#include <algorithm>
#include <stdexcept>

namespace waringlab {

namespace {

// Visits index subsets of {0..l-1} of the given size in lexicographic order;
// stops early when the visitor returns true.
template <typename Visit>
bool for_each_subset(Eigen::Index l, Eigen::Index size, Visit visit) {
  std::vector<Eigen::Index> idx(static_cast<std::size_t>(size));
  for (Eigen::Index i = 0; i < size; ++i) idx[static_cast<std::size_t>(i)] = i;
  if (size > l) return false;
  while (true) {
    if (visit(idx)) return true;
    Eigen::Index i = size - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == l - size + i) --i;
    if (i < 0) return false;
    ++idx[static_cast<std::size_t>(i)];
    for (Eigen::Index j = i + 1; j < size; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

Eigen::Index subset_rank(const RatMatrix& coords, const std::vector<Eigen::Index>& idx) {
  RatMatrix sub(static_cast<Eigen::Index>(idx.size()), coords.cols());
  for (std::size_t i = 0; i < idx.size(); ++i) sub.row(static_cast<Eigen::Index>(i)) = coords.row(idx[i]);
  return rank(sub);
}

}  // namespace

ProjPoint::ProjPoint(RatVector coords) : coords_(std::move(coords)) {
  Eigen::Index lead = -1;
  for (Eigen::Index i = 0; i < coords_.size(); ++i)
    if (!coords_(i).is_zero()) {
      lead = i;
      break;
    }
  if (lead < 0) throw std::invalid_argument("ProjPoint: zero coordinate vector");
  const Rat scale = coords_(lead);
  for (Eigen::Index i = lead; i < coords_.size(); ++i) coords_(i) /= scale;
}

bool operator<(const ProjPoint& a, const ProjPoint& b) {
  if (a.coords_.size() != b.coords_.size()) return a.coords_.size() < b.coords_.size();
  for (Eigen::Index i = 0; i < a.coords_.size(); ++i) {
    if (a.coords_(i) < b.coords_(i)) return true;
    if (b.coords_(i) < a.coords_(i)) return false;
  }
  return false;
}

PointSet::PointSet(int n, std::vector<ProjPoint> pts) : n_(n), pts_(std::move(pts)) {
  for (const auto& p : pts_)
    if (p.n() != n_) throw std::invalid_argument("PointSet: ambient dimension mismatch");
  for (std::size_t i = 0; i < pts_.size(); ++i)
    for (std::size_t j = i + 1; j < pts_.size(); ++j)
      if (pts_[i] == pts_[j]) throw std::invalid_argument("PointSet: duplicate point");
}

bool PointSet::contains(const ProjPoint& p) const {
  return std::find(pts_.begin(), pts_.end(), p) != pts_.end();
}

RatMatrix PointSet::coord_matrix() const {
  RatMatrix m(size(), n_ + 1);
  for (Eigen::Index i = 0; i < size(); ++i) m.row(i) = pts_[static_cast<std::size_t>(i)].coords().transpose();
  return m;
}

PointSet PointSet::subset(const std::vector<Eigen::Index>& indices) const {
  std::vector<ProjPoint> out;
  out.reserve(indices.size());
  for (Eigen::Index i : indices) out.push_back(pts_.at(static_cast<std::size_t>(i)));
  return PointSet(n_, std::move(out));
}

PointSet PointSet::without(Eigen::Index i) const {
  std::vector<ProjPoint> out;
  out.reserve(pts_.size() - 1);
  for (Eigen::Index k = 0; k < size(); ++k)
    if (k != i) out.push_back(pts_[static_cast<std::size_t>(k)]);
  return PointSet(n_, std::move(out));
}

PointSet PointSet::sorted() const {
  std::vector<ProjPoint> out = pts_;
  std::sort(out.begin(), out.end());
  return PointSet(n_, std::move(out));
}

PointSet set_union(const PointSet& a, const PointSet& b) {
  if (a.n() != b.n()) throw std::invalid_argument("set_union: ambient dimension mismatch");
  std::vector<ProjPoint> out = a.points();
  for (const auto& p : b.points())
    if (!a.contains(p)) out.push_back(p);
  return PointSet(a.n(), std::move(out));
}

int span_dim(const PointSet& a) {
  if (a.empty()) throw std::invalid_argument("span_dim: empty point set");
  return static_cast<int>(rank(a.coord_matrix())) - 1;
}

int kruskal_rank(const PointSet& a) {
  const Eigen::Index l = a.size();
  if (l < 1) throw std::invalid_argument("kruskal_rank: empty point set");
  const int cap = static_cast<int>(std::min<Eigen::Index>(l, a.n() + 1));
  const RatMatrix coords = a.coord_matrix();
  const Eigen::Index full_rank = rank(coords);

  if (full_rank == l) return cap;

  // One dependency only: the support of the kernel vector is the unique
  // circuit, and the Kruskal rank is one less than its size.
  if (full_rank == l - 1) {
    const RatMatrix k = kernel_basis(coords.transpose());
    int support = 0;
    for (Eigen::Index i = 0; i < l; ++i)
      if (!k(i, 0).is_zero()) ++support;
    return std::min(support - 1, cap);
  }

  for (int k = 2; k <= cap; ++k) {
    const bool dependent_found = for_each_subset(
        l, k, [&](const std::vector<Eigen::Index>& idx) { return subset_rank(coords, idx) < k; });
    if (dependent_found) return k - 1;
  }
  return cap;
}

bool is_lgp(const PointSet& a) {
  if (a.empty()) return true;
  return kruskal_rank(a) == static_cast<int>(std::min<Eigen::Index>(a.size(), a.n() + 1));
}

PointSet minimal_dependent_subset(const PointSet& a) {
  const Eigen::Index l = a.size();
  const RatMatrix coords = a.coord_matrix();
  if (rank(coords) == l) throw std::invalid_argument("minimal_dependent_subset: set is linearly independent");
  for (Eigen::Index k = 2; k <= l; ++k) {
    std::vector<Eigen::Index> found;
    for_each_subset(l, k, [&](const std::vector<Eigen::Index>& idx) {
      if (subset_rank(coords, idx) < k) {
        found = idx;
        return true;
      }
      return false;
    });
    if (!found.empty()) return a.subset(found);
  }
  throw std::logic_error("minimal_dependent_subset: no dependent subset found");
}

PointSet canonical_orbit_set(int n, int r) {
  if (r < 2 || r > n + 1) throw std::invalid_argument("canonical_orbit_set: r out of range");
  std::vector<ProjPoint> pts;
  for (int i = 0; i <= n; ++i) {
    RatVector e(n + 1);
    e.setConstant(Rat(0));
    e(i) = Rat(1);
    pts.emplace_back(std::move(e));
  }
  RatVector s(n + 1);
  s.setConstant(Rat(0));
  for (int i = 0; i < r; ++i) s(i) = Rat(1);
  pts.emplace_back(std::move(s));
  return PointSet(n, std::move(pts));
}

OrbitNormalization normalize_orbit(const PointSet& a) {
  const int n = a.n();
  const Eigen::Index l = a.size();
  if (l != n + 2) throw std::invalid_argument("normalize_orbit: set must have n+2 points");
  if (span_dim(a) != n) throw std::invalid_argument("normalize_orbit: set must span projective space");

  // n+2 spanning points carry exactly one dependency; its support is the
  // unique circuit of the configuration.
  const RatMatrix coords = a.coord_matrix();
  const RatMatrix ker = kernel_basis(coords.transpose());
  if (ker.cols() != 1) throw std::logic_error("normalize_orbit: kernel is not one-dimensional");
  std::vector<Eigen::Index> circuit;
  for (Eigen::Index i = 0; i < l; ++i)
    if (!ker(i, 0).is_zero()) circuit.push_back(i);
  const int r = static_cast<int>(circuit.size()) - 1;

  // Complement point: first circuit element in index order. Basis: its
  // circuit mates first, then the remaining points, all in index order.
  const Eigen::Index complement = circuit.front();
  std::vector<Eigen::Index> basis(circuit.begin() + 1, circuit.end());
  for (Eigen::Index i = 0; i < l; ++i)
    if (i != complement && std::find(circuit.begin(), circuit.end(), i) == circuit.end()) basis.push_back(i);

  RatMatrix b(n + 1, n + 1);
  for (std::size_t j = 0; j < basis.size(); ++j)
    b.col(static_cast<Eigen::Index>(j)) = a[basis[j]].coords();
  RatMatrix g = inverse(b);

  const RatVector lambda = g * a[complement].coords();
  for (int i = 0; i < r; ++i) {
    if (lambda(i).is_zero()) throw std::logic_error("normalize_orbit: circuit coefficient vanished");
    g.row(i) /= lambda(i);
  }
  for (Eigen::Index i = r; i <= n; ++i)
    if (!lambda(i).is_zero()) throw std::logic_error("normalize_orbit: complement point outside circuit span");

  const PointSet image = apply_linear(g, a);
  const PointSet target = canonical_orbit_set(n, r);
  for (const auto& p : target.points())
    if (!image.contains(p)) throw std::logic_error("normalize_orbit: normal form not reached");
  return {std::move(g), r};
}

int hilbert_function(const PointSet& z, int t) {
  if (t < 0) throw std::invalid_argument("hilbert_function: negative degree");
  if (z.empty()) return 0;
  const int n = z.n();
  const auto& basis = monomial_basis(n, t);
  RatMatrix ev(z.size(), static_cast<Eigen::Index>(basis.size()));
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    const RatVector& v = z[i].coords();
    for (std::size_t k = 0; k < basis.size(); ++k) {
      Rat c(1);
      for (int j = 0; j <= n; ++j)
        for (int rep = 0; rep < basis[k][static_cast<std::size_t>(j)] && !c.is_zero(); ++rep) c *= v(j);
      ev(i, static_cast<Eigen::Index>(k)) = std::move(c);
    }
  }
  return static_cast<int>(rank(ev));
}

HVector h_vector(const PointSet& z) {
  HVector out{{}, -1};
  const int l = static_cast<int>(z.size());
  if (l == 0) return out;
  int prev = 0;
  for (int t = 0; t <= l; ++t) {
    const int h = hilbert_function(z, t);
    out.values.push_back(h - prev);
    prev = h;
    if (h == l) {
      out.tau = t;
      return out;
    }
  }
  throw std::logic_error("h_vector: Hilbert function failed to reach the set length");
}

bool cb_check(const PointSet& z, int t) {
  if (z.size() < 2) throw std::invalid_argument("cb_check: need at least two points");
  const int h = hilbert_function(z, t);
  for (Eigen::Index i = 0; i < z.size(); ++i)
    if (hilbert_function(z.without(i), t) != h) return false;
  return true;
}

bool cb_hf_inequality(const PointSet& z, int t) {
  if (t < 0) throw std::invalid_argument("cb_hf_inequality: negative degree");
  const HVector hv = h_vector(z);
  const auto dh = [&](int i) {
    return (i >= 0 && i < static_cast<int>(hv.values.size())) ? hv.values[static_cast<std::size_t>(i)] : 0;
  };
  for (int s = 0; s <= t + 1; ++s) {
    int lhs = 0, rhs = 0;
    for (int i = 0; i <= s; ++i) lhs += dh(i);
    for (int i = t + 1 - s; i <= t + 1; ++i) rhs += dh(i);
    if (lhs > rhs) return false;
  }
  return true;
}

PointSet apply_linear(const RatMatrix& g, const PointSet& a) {
  if (g.rows() != a.n() + 1 || g.cols() != a.n() + 1)
    throw std::invalid_argument("apply_linear: shape mismatch");
  std::vector<ProjPoint> out;
  out.reserve(static_cast<std::size_t>(a.size()));
  for (const auto& p : a.points()) out.emplace_back(RatVector(g * p.coords()));
  return PointSet(a.n(), std::move(out));
}

}  // namespace waringlab
