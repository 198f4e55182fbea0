#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <vector>

#include "waringlab/decomp.hpp"
#include "waringlab/forms.hpp"

namespace waringlab {

/// One numerical decomposition F ~ sum L_i^3: r complex vectors, each
/// phase-normalized modulo cube roots of unity and sorted canonically,
/// plus the squared residual of the fit. Residuals are measured in the
/// Bombieri coefficient norm after scaling F to unit peak coefficient, so
/// tolerances mean the same thing for small and large forms.
struct NumDecomp {
  std::vector<Eigen::VectorXcd> vectors;
  double residual = 0.0;
};

/// The least-squares residual map vec(sum L_i^3) - vec(F)/scale and its
/// complex Jacobian, over the concatenated parameter vector (L_1, ..., L_r).
/// The fit runs on the unit-peak scaled form; from_internal converts a
/// parameter vector back to vectors whose cubes sum to the original F.
class CubeFitProblem {
 public:
  CubeFitProblem(const Form& f, int r);

  int n() const { return n_; }
  int r() const { return r_; }
  double scale() const { return scale_; }
  Eigen::Index params() const { return static_cast<Eigen::Index>(r_) * (n_ + 1); }
  Eigen::Index outputs() const { return target_.size(); }

  Eigen::VectorXcd residual(const Eigen::VectorXcd& x) const;
  Eigen::MatrixXcd jacobian(const Eigen::VectorXcd& x) const;

  std::vector<Eigen::VectorXcd> from_internal(const Eigen::VectorXcd& x) const;

 private:
  int n_;
  int r_;
  double scale_ = 1.0;
  Eigen::VectorXcd target_;
  Eigen::VectorXd weights_;
  std::vector<Exponents> basis_;
  std::vector<double> multinomials_;
};

/// Damped Gauss-Newton restarts over complex vectors; converged runs are
/// deduplicated modulo permutation and cube-root-of-unity phases.
struct SearchReport {
  std::vector<NumDecomp> classes;
  std::vector<int> class_counts;
  int converged = 0;
  int restarts = 0;
};
SearchReport decompose_numeric(const Form& f, int r, int restarts, double tol, std::uint64_t seed);

/// Canonical representative: per-vector phase normalization and sorting.
NumDecomp canonical_numdecomp(std::vector<Eigen::VectorXcd> vectors, double residual);

/// Matching distance modulo permutation and per-vector cube-root phases;
/// below ~1e-6 two results are the same decomposition.
double matching_distance(const NumDecomp& a, const NumDecomp& b);

/// Exact witness cast to floating point, coefficients absorbed as real cube
/// roots; residual measured against the given target form.
NumDecomp numdecomp_from_exact(const Decomposition& dec, const Form& target);

/// Numerical Kruskal rank and two-lines/two-planes flags of the vector set,
/// using singular values below tol as rank deficiencies.
struct NumStructure {
  int kruskal = 0;
  bool collinear = false;
  bool two_lines = false;
  bool two_planes = false;
};
NumStructure numeric_structure(const NumDecomp& nd, double tol);

}  // namespace waringlab
