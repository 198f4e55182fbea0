#include "waringlab/forms.hpp"

#include <stdexcept>

namespace waringlab {

LinVec::LinVec(RatVector coords) : coords_(std::move(coords)) {
  if (coords_.size() == 0) throw std::invalid_argument("zero linear form");
  bool nonzero = false;
  for (Eigen::Index i = 0; i < coords_.size(); ++i) nonzero = nonzero || !coords_(i).is_zero();
  if (!nonzero) throw std::invalid_argument("zero linear form");
}

Form::Form(int n, int d) : n_(n), d_(d) {
  if (n < 0 || d < 0) throw std::invalid_argument("Form: invalid dimensions");
}

Rat Form::coeff(const Exponents& a) const {
  const auto it = terms_.find(a);
  return it == terms_.end() ? Rat(0) : it->second;
}

void Form::set_coeff(const Exponents& a, Rat c) {
  if (static_cast<int>(a.size()) != n_ + 1) throw std::invalid_argument("Form: exponent arity mismatch");
  int deg = 0;
  for (int ai : a) {
    if (ai < 0) throw std::invalid_argument("Form: negative exponent");
    deg += ai;
  }
  if (deg != d_) throw std::invalid_argument("Form: exponent degree mismatch");
  if (c.is_zero())
    terms_.erase(a);
  else
    terms_[a] = std::move(c);
}

void Form::add_to_coeff(const Exponents& a, const Rat& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(a, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

RatVector Form::coefficient_vector() const {
  const auto& basis = monomial_basis(n_, d_);
  RatVector v(static_cast<Eigen::Index>(basis.size()));
  v.setConstant(Rat(0));
  for (const auto& [a, c] : terms_) v(monomial_index(n_, d_, a)) = c;
  return v;
}

Form Form::from_coefficient_vector(int n, int d, const RatVector& v) {
  const auto& basis = monomial_basis(n, d);
  if (v.size() != static_cast<Eigen::Index>(basis.size()))
    throw std::invalid_argument("from_coefficient_vector: length mismatch");
  Form f(n, d);
  for (Eigen::Index k = 0; k < v.size(); ++k)
    if (!v(k).is_zero()) f.terms_[basis[static_cast<std::size_t>(k)]] = v(k);
  return f;
}

Form& Form::operator+=(const Form& o) {
  if (n_ != o.n_ || d_ != o.d_) throw std::invalid_argument("Form addition: shape mismatch");
  for (const auto& [a, c] : o.terms_) add_to_coeff(a, c);
  return *this;
}

Form& Form::operator-=(const Form& o) {
  if (n_ != o.n_ || d_ != o.d_) throw std::invalid_argument("Form subtraction: shape mismatch");
  for (const auto& [a, c] : o.terms_) add_to_coeff(a, -c);
  return *this;
}

Form& Form::operator*=(const Rat& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [a, v] : terms_) v *= c;
  return *this;
}

Form power(const LinVec& l, int d) {
  if (d < 1) throw std::invalid_argument("power: degree must be at least 1");
  const int n = l.n();
  Form f(n, d);
  for (const auto& a : monomial_basis(n, d)) {
    Rat c = multinomial(d, a);
    for (int i = 0; i <= n && !c.is_zero(); ++i)
      for (int k = 0; k < a[static_cast<std::size_t>(i)]; ++k) c *= l[i];
    if (!c.is_zero()) f.set_coeff(a, std::move(c));
  }
  return f;
}

Form combine(std::span<const LinVec> points, std::span<const Rat> coeffs, int d) {
  if (points.size() != coeffs.size()) throw std::invalid_argument("combine: length mismatch");
  if (points.empty()) throw std::invalid_argument("combine: empty input");
  Form f(points[0].n(), d);
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    Form p = power(points[i], d);
    p *= coeffs[i];
    f += p;
  }
  return f;
}

Form partial_derivative(const Form& f, int i) {
  if (i < 0 || i > f.n()) throw std::invalid_argument("partial_derivative: index out of range");
  if (f.d() < 1) throw std::invalid_argument("partial_derivative: degree must be at least 1");
  Form g(f.n(), f.d() - 1);
  for (const auto& [a, c] : f.terms()) {
    const int ai = a[static_cast<std::size_t>(i)];
    if (ai == 0) continue;
    Exponents b = a;
    b[static_cast<std::size_t>(i)] -= 1;
    g.add_to_coeff(b, Rat(ai) * c);
  }
  return g;
}

Form multiply_by_variable(const Form& f, int i) {
  if (i < 0 || i > f.n()) throw std::invalid_argument("multiply_by_variable: index out of range");
  Form g(f.n(), f.d() + 1);
  for (const auto& [a, c] : f.terms()) {
    Exponents b = a;
    b[static_cast<std::size_t>(i)] += 1;
    g.set_coeff(b, c);
  }
  return g;
}

RatMatrix first_catalecticant(const Form& f) {
  if (f.d() < 2) throw std::invalid_argument("first_catalecticant: degree must be at least 2");
  const int n = f.n();
  RatMatrix m(n + 1, monomial_count(n, f.d() - 1));
  for (int i = 0; i <= n; ++i) m.row(i) = partial_derivative(f, i).coefficient_vector().transpose();
  return m;
}

bool is_concise(const Form& f) { return rank(first_catalecticant(f)) == f.n() + 1; }

ConciseSupport concise_support(const Form& f) {
  if (f.is_zero()) throw std::invalid_argument("concise_support: zero form");
  if (f.d() < 2) throw std::invalid_argument("concise_support: degree must be at least 2");
  const int n = f.n();

  // Rows: every order-(d-1) partial derivative, each a linear form.
  const auto& orders = monomial_basis(n, f.d() - 1);
  RatMatrix derivs(static_cast<Eigen::Index>(orders.size()), n + 1);
  for (std::size_t k = 0; k < orders.size(); ++k) {
    Form g = f;
    for (int i = 0; i <= n; ++i)
      for (int rep = 0; rep < orders[k][static_cast<std::size_t>(i)]; ++rep) g = partial_derivative(g, i);
    derivs.row(static_cast<Eigen::Index>(k)) = g.coefficient_vector().transpose();
  }

  const Echelon e = reduced_row_echelon(derivs);
  const Eigen::Index dim = e.rank();

  ConciseSupport out{{}, Form(n, f.d())};
  for (Eigen::Index i = 0; i < dim; ++i) out.basis.emplace_back(RatVector(e.rref.row(i).transpose()));

  if (dim == n + 1) {
    out.reduced = f;
    return out;
  }

  // Complete the basis with the standard vectors of the free columns, then
  // pull f back through the inverse change of coordinates.
  RatMatrix p(n + 1, n + 1);
  p.setConstant(Rat(0));
  for (Eigen::Index i = 0; i < dim; ++i) p.col(i) = e.rref.row(i).transpose();
  Eigen::Index next = dim;
  std::vector<bool> is_pivot(static_cast<std::size_t>(n + 1), false);
  for (Eigen::Index c : e.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
  for (Eigen::Index j = 0; j <= n; ++j)
    if (!is_pivot[static_cast<std::size_t>(j)]) p(j, next++) = Rat(1);

  const Form moved = apply_linear(inverse(p), f);
  Form reduced(static_cast<int>(dim) - 1, f.d());
  for (const auto& [a, c] : moved.terms()) {
    Exponents head(a.begin(), a.begin() + dim);
    for (std::size_t j = static_cast<std::size_t>(dim); j < a.size(); ++j)
      if (a[j] != 0) throw std::logic_error("concise_support: rewrite left trailing variables");
    reduced.set_coeff(head, c);
  }
  out.reduced = std::move(reduced);
  return out;
}

Form apply_linear(const RatMatrix& g, const Form& f) {
  const int n = f.n();
  if (g.rows() != n + 1 || g.cols() != n + 1) throw std::invalid_argument("apply_linear: shape mismatch");
  if (!is_invertible(g)) throw std::invalid_argument("apply_linear: singular matrix");

  // x_j -> sum_i g(i, j) x_i, applied monomial by monomial.
  using TermMap = std::map<Exponents, Rat, MonomialOrder>;
  Form out(n, f.d());
  const Exponents unit(static_cast<std::size_t>(n + 1), 0);
  for (const auto& [a, c] : f.terms()) {
    TermMap acc;
    acc.emplace(unit, c);
    for (int j = 0; j <= n; ++j) {
      for (int rep = 0; rep < a[static_cast<std::size_t>(j)]; ++rep) {
        TermMap next;
        for (const auto& [e, v] : acc) {
          for (int i = 0; i <= n; ++i) {
            if (g(i, j).is_zero()) continue;
            Exponents e2 = e;
            e2[static_cast<std::size_t>(i)] += 1;
            auto [it, fresh] = next.try_emplace(std::move(e2), v * g(i, j));
            if (!fresh) it->second += v * g(i, j);
          }
        }
        acc = std::move(next);
      }
    }
    for (const auto& [e, v] : acc) out.add_to_coeff(e, v);
  }
  return out;
}

}  // namespace waringlab
