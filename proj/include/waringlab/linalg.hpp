#pragma once

#include <Eigen/Core>
#include <optional>
#include <vector>

#include "waringlab/rational.hpp"

namespace waringlab {

/// Reduced row echelon form over the rationals, with the pivot columns in
/// increasing order. rank = pivot_cols.size().
struct Echelon {
  RatMatrix rref;
  std::vector<Eigen::Index> pivot_cols;
  Eigen::Index rank() const { return static_cast<Eigen::Index>(pivot_cols.size()); }
};

namespace detail {
Echelon echelon_impl(RatMatrix m);
}

/// Exact RREF. Forward elimination is fraction-free (Bareiss) on
/// denominator-cleared rows with first-nonzero pivoting, so the result is
/// reproducible bit-for-bit.
template <typename Derived>
Echelon reduced_row_echelon(const Eigen::MatrixBase<Derived>& m) {
  return detail::echelon_impl(RatMatrix(m));
}

template <typename Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& m) {
  return detail::echelon_impl(RatMatrix(m)).rank();
}

RatMatrix kernel_from_echelon(const Echelon& e, Eigen::Index cols);

/// Columns form a basis of the right null space; rank + column count = cols.
/// Basis vectors are indexed by free column and normalized to have a unit
/// entry there (the canonical RREF kernel basis).
template <typename Derived>
RatMatrix kernel_basis(const Eigen::MatrixBase<Derived>& m) {
  return kernel_from_echelon(detail::echelon_impl(RatMatrix(m)), m.cols());
}

/// Some solution of m x = b, or nullopt when the system is inconsistent.
/// Free variables are set to zero; when the solution is unique this returns
/// it exactly.
std::optional<RatVector> solve_linear(const RatMatrix& m, const RatVector& b);

/// Exact inverse; throws std::domain_error on a singular matrix.
RatMatrix inverse(const RatMatrix& m);

bool is_invertible(const RatMatrix& m);

}  // namespace waringlab
