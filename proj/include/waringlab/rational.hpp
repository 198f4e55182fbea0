#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace waringlab {

/// Arbitrary-precision rational, kept in canonical form:
/// gcd(|num|, den) = 1, den > 0, zero is 0/1.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(int n) : v_(n) {}
  Rat(long n) : v_(n) {}
  Rat(long n, long d) : v_(n, d) {
    if (d == 0) throw std::invalid_argument("invalid rational: zero denominator");
    v_.canonicalize();
  }
  explicit Rat(mpz_class n) : v_(std::move(n)) {}
  explicit Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  const mpq_class& raw() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }

  /// Parses "p/q" or "p" (base 10). Throws std::invalid_argument on
  /// malformed input or zero denominator.
  static Rat parse(std::string_view s);

  /// Canonical "p/q" rendering; the "/q" part is omitted when q = 1.
  std::string str() const;

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
  friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
  friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
  friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r);

  double to_double() const { return v_.get_d(); }

 private:
  mpq_class v_;
};

inline Rat abs(const Rat& a) { return a.sign() < 0 ? -a : a; }

using RatMatrix = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using RatVector = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;

/// Entry-wise equality of two exact matrices (shapes included).
template <typename DerivedA, typename DerivedB>
bool exact_equal(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

}  // namespace waringlab

namespace Eigen {

template <>
struct NumTraits<waringlab::Rat> : GenericNumTraits<waringlab::Rat> {
  typedef waringlab::Rat Real;
  typedef waringlab::Rat NonInteger;
  typedef waringlab::Rat Nested;
  typedef waringlab::Rat Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 60,
    MulCost = 60,
  };
  static inline Real epsilon() { return waringlab::Rat(0); }
  static inline Real dummy_precision() { return waringlab::Rat(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
