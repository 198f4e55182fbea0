#include "waringlab/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace waringlab {

namespace detail {

// Fraction-free forward elimination (one-step Bareiss) followed by a rational
// back-substitution pass. Pivoting is deterministic: columns left to right,
// first row with a nonzero entry.
Echelon echelon_impl(RatMatrix m) {
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();

  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (Eigen::Index i = 0; i < rows; ++i) {
    mpz_class l = 1;
    for (Eigen::Index j = 0; j < cols; ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).raw().get_den().get_mpz_t());
    for (Eigen::Index i2 = 0; i2 < cols; ++i2) {
      mpq_class q = m(i, i2).raw() * l;
      a[i][i2] = q.get_num();
    }
  }

  std::vector<Eigen::Index> pivots;
  mpz_class prev = 1;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = r; i < rows; ++i)
      if (a[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r) std::swap(a[piv], a[r]);
    for (Eigen::Index i = r + 1; i < rows; ++i) {
      for (Eigen::Index j = c + 1; j < cols; ++j) {
        mpz_class t = a[i][j] * a[r][c] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    pivots.push_back(c);
    ++r;
  }

  // Back substitution over Q: unit pivots, zeros above.
  const Eigen::Index rk = r;
  std::vector<std::vector<mpq_class>> q(rk, std::vector<mpq_class>(cols));
  for (Eigen::Index i = 0; i < rk; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) {
      q[i][j] = mpq_class(a[i][j]);
      q[i][j].canonicalize();
    }
  for (Eigen::Index i = rk - 1; i >= 0; --i) {
    const Eigen::Index pc = pivots[static_cast<std::size_t>(i)];
    const mpq_class pv = q[i][pc];
    for (Eigen::Index j = pc; j < cols; ++j) q[i][j] /= pv;
    for (Eigen::Index k = 0; k < i; ++k) {
      const mpq_class f = q[k][pc];
      if (sgn(f) == 0) continue;
      for (Eigen::Index j = pc; j < cols; ++j) q[k][j] -= f * q[i][j];
    }
  }

  Echelon out;
  out.pivot_cols = std::move(pivots);
  out.rref = RatMatrix(rk, cols);
  for (Eigen::Index i = 0; i < rk; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) out.rref(i, j) = Rat(std::move(q[i][j]));
  return out;
}

}  // namespace detail

RatMatrix kernel_from_echelon(const Echelon& e, Eigen::Index cols) {
  const Eigen::Index rk = e.rank();
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (Eigen::Index c : e.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;

  RatMatrix basis(cols, cols - rk);
  basis.setConstant(Rat(0));
  Eigen::Index k = 0;
  for (Eigen::Index f = 0; f < cols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    basis(f, k) = Rat(1);
    for (Eigen::Index i = 0; i < rk; ++i) basis(e.pivot_cols[static_cast<std::size_t>(i)], k) = -e.rref(i, f);
    ++k;
  }
  return basis;
}

std::optional<RatVector> solve_linear(const RatMatrix& m, const RatVector& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve_linear: size mismatch");
  RatMatrix aug(m.rows(), m.cols() + 1);
  aug.leftCols(m.cols()) = m;
  aug.col(m.cols()) = b;
  const Echelon e = detail::echelon_impl(std::move(aug));
  if (!e.pivot_cols.empty() && e.pivot_cols.back() == m.cols()) return std::nullopt;

  RatVector x(m.cols());
  x.setConstant(Rat(0));
  for (Eigen::Index i = 0; i < e.rank(); ++i)
    x(e.pivot_cols[static_cast<std::size_t>(i)]) = e.rref(i, m.cols());
  return x;
}

RatMatrix inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
  const Eigen::Index n = m.rows();
  RatMatrix aug(n, 2 * n);
  aug.setConstant(Rat(0));
  aug.leftCols(n) = m;
  for (Eigen::Index i = 0; i < n; ++i) aug(i, n + i) = Rat(1);
  const Echelon e = detail::echelon_impl(std::move(aug));
  if (e.rank() < n || e.pivot_cols[static_cast<std::size_t>(n - 1)] != n - 1)
    throw std::domain_error("inverse: singular matrix");
  return e.rref.rightCols(n);
}

bool is_invertible(const RatMatrix& m) {
  return m.rows() == m.cols() && rank(m) == m.rows();
}

}  // namespace waringlab
