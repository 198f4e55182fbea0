#pragma once

#include <cstdint>
#include <vector>

#include "waringlab/points.hpp"

namespace waringlab {

/// Affine tangent space to the Veronese variety at [L^d], spanned by the
/// rows x_0 L^(d-1), ..., x_n L^(d-1) in the fixed monomial order.
struct TangentBlock {
  ProjPoint point;
  int d;
  RatMatrix matrix;
};
TangentBlock tangent_block(const ProjPoint& l, int d);

/// l(a)*(n+1) minus the rank of the stacked tangent blocks; positive means
/// the tangent spaces are linearly dependent. Requires the d-th powers of a
/// to be independent.
int terracini_defect(const PointSet& a, int d);

/// Membership of a spanning (n+2)-point configuration in the concise
/// Terracini locus of the third Veronese embedding: Kruskal rank at most 3,
/// i.e. four coplanar points.
bool in_concise_terracini(const PointSet& a);

/// Tangent-space dependence computed in the ambient space and inside a
/// subspace containing all points; ambient dependence forces restricted
/// dependence.
struct RestrictedDependence {
  bool ambient_dependent;
  bool restricted_dependent;
};
RestrictedDependence restricted_dependence(const PointSet& a, const std::vector<LinVec>& subspace_basis, int d);

/// Rank of the exact Jacobian of (v_0..v_n, lambda_0..lambda_{r-1}) ->
/// ([v_0], ..., [v_n], [sum lambda_i v_i]) in affine charts, at a seeded
/// random rational point; equals n(n+1)+r-1 for generic samples.
int orbit_dimension_estimate(int n, int r, std::uint64_t seed);

}  // namespace waringlab
