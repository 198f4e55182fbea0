#pragma once

#include <vector>

#include "waringlab/forms.hpp"
#include "waringlab/linalg.hpp"
#include "waringlab/rational.hpp"

namespace waringlab {

/// Point of projective space, stored by its canonical representative: the
/// first nonzero coordinate is scaled to 1, so equality is coordinate-wise.
class ProjPoint {
 public:
  explicit ProjPoint(RatVector coords);
  explicit ProjPoint(const LinVec& l) : ProjPoint(l.coords()) {}

  const RatVector& coords() const { return coords_; }
  int n() const { return static_cast<int>(coords_.size()) - 1; }

  /// The canonical affine representative, as a linear form.
  LinVec rep() const { return LinVec(coords_); }

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return exact_equal(a.coords_, b.coords_); }
  friend bool operator!=(const ProjPoint& a, const ProjPoint& b) { return !(a == b); }
  friend bool operator<(const ProjPoint& a, const ProjPoint& b);

 private:
  RatVector coords_;
};

/// Finite ordered set of pairwise-distinct projective points. Duplicate
/// input points are an error, never merged.
class PointSet {
 public:
  PointSet(int n, std::vector<ProjPoint> pts);

  int n() const { return n_; }
  Eigen::Index size() const { return static_cast<Eigen::Index>(pts_.size()); }
  bool empty() const { return pts_.empty(); }
  const ProjPoint& operator[](Eigen::Index i) const { return pts_[static_cast<std::size_t>(i)]; }
  const std::vector<ProjPoint>& points() const { return pts_; }

  bool contains(const ProjPoint& p) const;

  /// size x (n+1) matrix of canonical coordinates, one point per row.
  RatMatrix coord_matrix() const;

  PointSet subset(const std::vector<Eigen::Index>& indices) const;
  PointSet without(Eigen::Index i) const;
  PointSet sorted() const;

  friend bool operator==(const PointSet& a, const PointSet& b) { return a.n_ == b.n_ && a.pts_ == b.pts_; }

 private:
  int n_;
  std::vector<ProjPoint> pts_;
};

/// Union A and B as sets (duplicates across the two inputs collapse).
PointSet set_union(const PointSet& a, const PointSet& b);

/// Projective dimension of the linear span. Errors on the empty set.
int span_dim(const PointSet& a);

/// Largest k <= min(l, n+1) such that every k-subset is linearly independent.
int kruskal_rank(const PointSet& a);

/// Linear general position: Kruskal rank attains min(l, n+1).
bool is_lgp(const PointSet& a);

/// Smallest dependent subset; ties broken lexicographically by point
/// indices. Errors when the set is linearly independent.
PointSet minimal_dependent_subset(const PointSet& a);

/// Change of coordinates carrying a set of n+2 spanning points onto the
/// normal form A_r = {e_0, ..., e_n, e_0 + ... + e_{r-1}}.
struct OrbitNormalization {
  RatMatrix g;
  int r;
};
OrbitNormalization normalize_orbit(const PointSet& a);

/// The normal form A_r itself.
PointSet canonical_orbit_set(int n, int r);

/// Rank of the degree-t evaluation matrix at the canonical representatives.
int hilbert_function(const PointSet& z, int t);

/// First difference of the Hilbert function, truncated to its nonzero
/// values; tau is the last degree with a positive difference.
struct HVector {
  std::vector<int> values;
  int tau;
  friend bool operator==(const HVector& a, const HVector& b) { return a.values == b.values && a.tau == b.tau; }
};
HVector h_vector(const PointSet& z);

/// Cayley-Bacharach in degree t: no point is separated from the others by a
/// degree-t form.
bool cb_check(const PointSet& z, int t);

/// The h-vector inequality implied by CB(t): for every s <= t+1,
/// Dh(0)+...+Dh(s) <= Dh(t+1-s)+...+Dh(t+1).
bool cb_hf_inequality(const PointSet& z, int t);

/// Image of the set under an invertible change of coordinates.
PointSet apply_linear(const RatMatrix& g, const PointSet& a);

}  // namespace waringlab
