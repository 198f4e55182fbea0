#pragma once

#include <optional>
#include <set>
#include <vector>

#include "waringlab/forms.hpp"
#include "waringlab/points.hpp"

namespace waringlab {

/// A weighted point set with combine(pts, coeffs, d) equal to some target
/// form; the attachment to a form is checked by the operations, never
/// assumed.
struct Decomposition {
  PointSet pts;
  std::vector<Rat> coeffs;
  int d;

  Decomposition(PointSet p, std::vector<Rat> c, int degree);
  Eigen::Index size() const { return pts.size(); }

  /// The form this decomposition denotes.
  Form combined() const;
};

/// dim S^d x l matrix whose columns are the d-th power vectors of the
/// points' canonical representatives.
RatMatrix power_matrix(const PointSet& a, int d);

/// Solves f = sum alpha_i L_i^d in monomial coordinates; nullopt when f is
/// outside the span of the powers. Unique when the powers are independent.
std::optional<std::vector<Rat>> coefficients_for(const Form& f, const PointSet& a);

/// True iff the d-th powers of a are linearly independent and every solved
/// coefficient is nonzero. Throws when a does not decompose f at all.
bool is_nonredundant(const Form& f, const PointSet& a);

/// Subtracts the shared terms of a from f and drops shared points with
/// matching coefficients from b, producing disjoint decompositions of the
/// residual form. When a = b this yields the zero form and empty
/// decompositions.
struct DisjointPair {
  Form residual;
  Decomposition a;
  Decomposition b;
};
DisjointPair disjointify(const Form& f, const Decomposition& a, const Decomposition& b);

/// l(A) + l(B) >= d + 2n, with the slack l(A)+l(B) - (d+2n).
struct SumBound {
  bool holds;
  long slack;
};
SumBound check_sum_bound(const Form& f, const Decomposition& a, const Decomposition& b);

/// Structural comparison of two decompositions: intersection size, the
/// symmetric difference and its geometry (collinear, on two lines, on two
/// planes), and the Kruskal ranks.
struct PairReport {
  Eigen::Index len_a = 0;
  Eigen::Index len_b = 0;
  Eigen::Index intersection = 0;
  PointSet diff;
  bool diff_collinear = false;
  bool diff_two_lines = false;
  bool diff_two_planes = false;
  int kruskal_a = 0;
  int kruskal_b = 0;
};
PairReport pair_report(const PointSet& a, const PointSet& b);

enum class Trichotomy { I, II, III };

/// Cases compatible with the Kruskal rank of a length-(n+2) spanning set:
/// k >= 4 forces uniqueness, k = 3 the two-planes case, k = 2 cannot be
/// separated between the two-lines and two-planes cases from A alone.
std::set<Trichotomy> predict_cases(const PointSet& a);

/// For decompositions of lengths n+1 and n+2 of a concise f: d = 3, the
/// intersection has at least n-1 points and the symmetric difference is
/// collinear.
bool verify_fermat_plus_one(const Form& f, const Decomposition& a, const Decomposition& b);

}  // namespace waringlab
