#pragma once

#include <map>
#include <span>
#include <vector>

#include "waringlab/linalg.hpp"
#include "waringlab/monomial.hpp"
#include "waringlab/rational.hpp"

namespace waringlab {

/// A nonzero vector in V, read as the linear form sum l_i x_i.
class LinVec {
 public:
  explicit LinVec(RatVector coords);
  const RatVector& coords() const { return coords_; }
  int n() const { return static_cast<int>(coords_.size()) - 1; }
  const Rat& operator[](Eigen::Index i) const { return coords_(i); }
  friend bool operator==(const LinVec& a, const LinVec& b) { return exact_equal(a.coords_, b.coords_); }

 private:
  RatVector coords_;
};

/// Homogeneous form of degree d in variables x_0..x_n, stored as a sparse
/// monomial-coefficient map. Only nonzero coefficients are kept, so equality
/// is map equality.
class Form {
 public:
  Form(int n, int d);

  int n() const { return n_; }
  int d() const { return d_; }
  bool is_zero() const { return terms_.empty(); }

  /// Coefficient of x^a (zero when absent).
  Rat coeff(const Exponents& a) const;

  /// Sets the coefficient of x^a; a must have length n+1 and degree d.
  void set_coeff(const Exponents& a, Rat c);

  void add_to_coeff(const Exponents& a, const Rat& c);

  /// Terms in the fixed monomial order.
  const std::map<Exponents, Rat, MonomialOrder>& terms() const { return terms_; }

  /// Dense coefficient vector over monomial_basis(n, d).
  RatVector coefficient_vector() const;

  static Form from_coefficient_vector(int n, int d, const RatVector& v);

  Form& operator+=(const Form& o);
  Form& operator-=(const Form& o);
  Form& operator*=(const Rat& c);
  friend Form operator+(Form a, const Form& b) { a += b; return a; }
  friend Form operator-(Form a, const Form& b) { a -= b; return a; }
  friend Form operator*(const Rat& c, Form f) { f *= c; return f; }
  friend bool operator==(const Form& a, const Form& b) {
    return a.n_ == b.n_ && a.d_ == b.d_ && a.terms_ == b.terms_;
  }

 private:
  int n_;
  int d_;
  std::map<Exponents, Rat, MonomialOrder> terms_;
};

/// L^d expanded in the monomial basis: coeff of x^a is multinomial(d;a) * l^a.
Form power(const LinVec& l, int d);

/// Sum of coeffs[i] * points[i]^d.
Form combine(std::span<const LinVec> points, std::span<const Rat> coeffs, int d);

/// Formal partial derivative with respect to x_i.
Form partial_derivative(const Form& f, int i);

/// x_i * f, one degree up.
Form multiply_by_variable(const Form& f, int i);

/// (n+1) x dim S^(d-1) matrix; row i lists the coefficients of d f / d x_i.
RatMatrix first_catalecticant(const Form& f);

/// True iff the first partial derivatives are linearly independent.
bool is_concise(const Form& f);

/// Basis of the span V' of all order-(d-1) partial derivatives, together
/// with f rewritten in coordinates adapted to V'. The rewritten form is
/// concise in dim V' variables.
struct ConciseSupport {
  std::vector<LinVec> basis;
  Form reduced;
};
ConciseSupport concise_support(const Form& f);

/// Substitution action of g in GL(V): apply_linear(g, power(l, d)) equals
/// power(g*l, d). Throws on a singular g.
Form apply_linear(const RatMatrix& g, const Form& f);

}  // namespace waringlab
