#include "waringlab/numsearch.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "waringlab/rng.hpp"

namespace waringlab {

namespace {

using Cplx = std::complex<double>;

constexpr double kDedupThreshold = 1e-6;
constexpr double kZeroVector = 1e-12;

Cplx cube_root_of_unity(int k) {
  const double phi = 2.0 * M_PI * k / 3.0;
  return {std::cos(phi), std::sin(phi)};
}

double pair_distance(const Eigen::VectorXcd& u, const Eigen::VectorXcd& v) {
  double best = std::numeric_limits<double>::infinity();
  for (int k = 0; k < 3; ++k) best = std::min(best, (u - cube_root_of_unity(k) * v).norm());
  return best / (1.0 + std::max(u.norm(), v.norm()));
}

}  // namespace

CubeFitProblem::CubeFitProblem(const Form& f, int r) : n_(f.n()), r_(r) {
  if (f.d() != 3) throw std::invalid_argument("CubeFitProblem: degree must be 3");
  if (r < 1) throw std::invalid_argument("CubeFitProblem: rank must be positive");
  basis_ = monomial_basis(n_, 3);
  const RatVector target = f.coefficient_vector();
  target_.resize(target.size());
  for (Eigen::Index i = 0; i < target.size(); ++i) target_(i) = Cplx(target(i).to_double(), 0.0);

  // Scale the target to unit peak coefficient; the residual tolerance is
  // meaningful on this scale regardless of how large the input form is.
  scale_ = target_.cwiseAbs().maxCoeff();
  if (scale_ <= 0.0) scale_ = 1.0;
  target_ /= scale_;

  multinomials_.reserve(basis_.size());
  for (const auto& a : basis_) multinomials_.push_back(multinomial(3, a).to_double());

  // Residual components live in the Bombieri inner product, where the cube
  // map is unitarily symmetric: component a is the coefficient difference
  // times sqrt(mult(3,a)) of the monomial written in the orthonormal basis.
  weights_.resize(static_cast<Eigen::Index>(basis_.size()));
  for (std::size_t m = 0; m < basis_.size(); ++m)
    weights_(static_cast<Eigen::Index>(m)) = 1.0 / std::sqrt(multinomials_[m]);
}

Eigen::VectorXcd CubeFitProblem::residual(const Eigen::VectorXcd& x) const {
  Eigen::VectorXcd out = -target_;
  for (int i = 0; i < r_; ++i) {
    const auto l = x.segment(static_cast<Eigen::Index>(i) * (n_ + 1), n_ + 1);
    for (std::size_t m = 0; m < basis_.size(); ++m) {
      Cplx term(multinomials_[m], 0.0);
      for (int j = 0; j <= n_ && term != Cplx(0.0, 0.0); ++j)
        for (int rep = 0; rep < basis_[m][static_cast<std::size_t>(j)]; ++rep) term *= l(j);
      out(static_cast<Eigen::Index>(m)) += term;
    }
  }
  return weights_.asDiagonal() * out;
}

Eigen::MatrixXcd CubeFitProblem::jacobian(const Eigen::VectorXcd& x) const {
  Eigen::MatrixXcd jac = Eigen::MatrixXcd::Zero(outputs(), params());
  for (int i = 0; i < r_; ++i) {
    const auto l = x.segment(static_cast<Eigen::Index>(i) * (n_ + 1), n_ + 1);
    for (std::size_t m = 0; m < basis_.size(); ++m) {
      const auto& a = basis_[m];
      for (int k = 0; k <= n_; ++k) {
        if (a[static_cast<std::size_t>(k)] == 0) continue;
        // d/dL_k of mult(3;a) L^a = mult(3;a) a_k L^(a - e_k)
        Cplx term(multinomials_[m] * a[static_cast<std::size_t>(k)], 0.0);
        for (int j = 0; j <= n_; ++j) {
          const int reps = a[static_cast<std::size_t>(j)] - (j == k ? 1 : 0);
          for (int rep = 0; rep < reps; ++rep) term *= l(j);
        }
        jac(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(i) * (n_ + 1) + k) =
            weights_(static_cast<Eigen::Index>(m)) * term;
      }
    }
  }
  return jac;
}

NumDecomp canonical_numdecomp(std::vector<Eigen::VectorXcd> vectors, double residual) {
  for (auto& v : vectors) {
    const double peak = v.cwiseAbs().maxCoeff();
    if (peak < kZeroVector) continue;
    Eigen::Index lead = 0;
    while (std::abs(v(lead)) <= 1e-9 * peak) ++lead;
    double arg = std::arg(v(lead));
    if (arg < 0) arg += 2.0 * M_PI;
    const int k = std::min(2, static_cast<int>(arg / (2.0 * M_PI / 3.0)));
    v *= cube_root_of_unity((3 - k) % 3);
  }
  std::sort(vectors.begin(), vectors.end(), [](const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
    for (Eigen::Index i = 0; i < a.size(); ++i) {
      if (a(i).real() != b(i).real()) return a(i).real() < b(i).real();
      if (a(i).imag() != b(i).imag()) return a(i).imag() < b(i).imag();
    }
    return false;
  });
  return {std::move(vectors), residual};
}

double matching_distance(const NumDecomp& a, const NumDecomp& b) {
  if (a.vectors.size() != b.vectors.size()) return std::numeric_limits<double>::infinity();
  const std::size_t r = a.vectors.size();
  if (r == 0) return 0.0;

  if (r <= 8) {
    std::vector<std::size_t> perm(r);
    std::iota(perm.begin(), perm.end(), 0);
    double best = std::numeric_limits<double>::infinity();
    do {
      double worst = 0.0;
      for (std::size_t i = 0; i < r && worst < best; ++i)
        worst = std::max(worst, pair_distance(a.vectors[i], b.vectors[perm[i]]));
      best = std::min(best, worst);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
  }

  // Greedy fallback for large r.
  std::vector<bool> used(r, false);
  double worst = 0.0;
  for (std::size_t i = 0; i < r; ++i) {
    double local = std::numeric_limits<double>::infinity();
    std::size_t pick = r;
    for (std::size_t j = 0; j < r; ++j) {
      if (used[j]) continue;
      const double d = pair_distance(a.vectors[i], b.vectors[j]);
      if (d < local) {
        local = d;
        pick = j;
      }
    }
    used[pick] = true;
    worst = std::max(worst, local);
  }
  return worst;
}

SearchReport decompose_numeric(const Form& f, int r, int restarts, double tol, std::uint64_t seed) {
  const CubeFitProblem problem(f, r);
  SearchReport report;
  report.restarts = restarts;

  for (int run = 0; run < restarts; ++run) {
    Rng rng(sub_seed(seed, static_cast<std::uint64_t>(run)));
    Eigen::VectorXcd x(problem.params());
    for (Eigen::Index i = 0; i < x.size(); ++i) x(i) = rng.complex_gaussian();

    Eigen::VectorXcd res = problem.residual(x);
    double obj = res.squaredNorm();
    double damping = 1e-3;

    for (int iter = 0; iter < 500 && obj >= tol; ++iter) {
      const Eigen::MatrixXcd jac = problem.jacobian(x);
      const Eigen::MatrixXcd normal = jac.adjoint() * jac;
      const Eigen::VectorXcd grad = jac.adjoint() * res;

      Eigen::MatrixXcd damped = normal;
      damped.diagonal().array() += Cplx(damping, 0.0);
      const Eigen::VectorXcd step = damped.ldlt().solve(-grad);

      // Backtrack on the step length when the full damped step overshoots.
      bool accepted = false;
      double t = 1.0;
      for (int bt = 0; bt < 8 && !accepted; ++bt, t *= 0.5) {
        const Eigen::VectorXcd x2 = x + t * step;
        const Eigen::VectorXcd res2 = problem.residual(x2);
        const double obj2 = res2.squaredNorm();
        if (obj2 < obj) {
          x = x2;
          res = res2;
          obj = obj2;
          if (bt == 0) damping = std::max(damping / 3.0, 1e-16);
          accepted = true;
        }
      }
      if (!accepted) {
        damping *= 2.0;
        if (damping > 1e18) break;
      }
    }

    if (!(obj < tol)) continue;
    ++report.converged;

    NumDecomp nd = canonical_numdecomp(problem.from_internal(x), obj);

    bool merged = false;
    for (std::size_t c = 0; c < report.classes.size(); ++c) {
      if (matching_distance(report.classes[c], nd) < kDedupThreshold) {
        ++report.class_counts[c];
        if (nd.residual < report.classes[c].residual) report.classes[c] = nd;
        merged = true;
        break;
      }
    }
    if (!merged) {
      report.classes.push_back(std::move(nd));
      report.class_counts.push_back(1);
    }
  }

  // Canonical class order: lexicographic on the sorted vectors.
  std::vector<std::size_t> order(report.classes.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    const auto& u = report.classes[i].vectors;
    const auto& v = report.classes[j].vectors;
    for (std::size_t k = 0; k < u.size(); ++k)
      for (Eigen::Index t = 0; t < u[k].size(); ++t) {
        if (u[k](t).real() != v[k](t).real()) return u[k](t).real() < v[k](t).real();
        if (u[k](t).imag() != v[k](t).imag()) return u[k](t).imag() < v[k](t).imag();
      }
    return false;
  });
  SearchReport sorted;
  sorted.converged = report.converged;
  sorted.restarts = report.restarts;
  for (std::size_t i : order) {
    sorted.classes.push_back(std::move(report.classes[i]));
    sorted.class_counts.push_back(report.class_counts[i]);
  }
  return sorted;
}

std::vector<Eigen::VectorXcd> CubeFitProblem::from_internal(const Eigen::VectorXcd& x) const {
  const double lift = std::cbrt(scale_);
  std::vector<Eigen::VectorXcd> out;
  out.reserve(static_cast<std::size_t>(r_));
  for (int i = 0; i < r_; ++i)
    out.push_back(lift * x.segment(static_cast<Eigen::Index>(i) * (n_ + 1), n_ + 1));
  return out;
}

NumDecomp numdecomp_from_exact(const Decomposition& dec, const Form& target) {
  const CubeFitProblem problem(target, static_cast<int>(dec.pts.size()));
  const double drop = std::cbrt(problem.scale());
  std::vector<Eigen::VectorXcd> vecs;
  Eigen::VectorXcd x(problem.params());
  for (Eigen::Index i = 0; i < dec.pts.size(); ++i) {
    const RatVector& c = dec.pts[i].coords();
    Eigen::VectorXcd v(c.size());
    const double scale = std::cbrt(dec.coeffs[static_cast<std::size_t>(i)].to_double());
    for (Eigen::Index j = 0; j < c.size(); ++j) v(j) = Cplx(scale * c(j).to_double(), 0.0);
    x.segment(i * (dec.pts.n() + 1), dec.pts.n() + 1) = v / drop;
    vecs.push_back(std::move(v));
  }
  return canonical_numdecomp(std::move(vecs), problem.residual(x).squaredNorm());
}

namespace {

int numerical_rank(const Eigen::MatrixXcd& m, double tol) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  int r = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) >= tol) ++r;
  return r;
}

}  // namespace

NumStructure numeric_structure(const NumDecomp& nd, double tol) {
  std::vector<Eigen::VectorXcd> pts;
  for (const auto& v : nd.vectors)
    if (v.norm() > kZeroVector) pts.push_back(v / v.norm());
  const int m = static_cast<int>(pts.size());
  NumStructure out;
  if (m == 0) {
    out.collinear = out.two_lines = out.two_planes = true;
    return out;
  }
  const int n = static_cast<int>(pts[0].size()) - 1;

  const auto mask_matrix = [&](std::uint32_t mask) {
    Eigen::MatrixXcd sub(std::popcount(mask), n + 1);
    Eigen::Index row = 0;
    for (int i = 0; i < m; ++i)
      if ((mask >> i) & 1u) sub.row(row++) = pts[static_cast<std::size_t>(i)].transpose();
    return sub;
  };
  const auto mask_rank_le = [&](std::uint32_t mask, int bound) {
    return std::popcount(mask) <= bound || numerical_rank(mask_matrix(mask), tol) <= bound;
  };

  // Numerical Kruskal rank: largest k with every k-subset of full rank.
  const int cap = std::min(m, n + 1);
  int kruskal = cap;
  for (int k = 2; k <= cap && kruskal == cap; ++k) {
    std::vector<int> idx(static_cast<std::size_t>(k));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      std::uint32_t mask = 0;
      for (int i : idx) mask |= 1u << i;
      if (numerical_rank(mask_matrix(mask), tol) < k) {
        kruskal = k - 1;
        break;
      }
      int i = k - 1;
      while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - k + i) --i;
      if (i < 0) break;
      ++idx[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  out.kruskal = kruskal;

  const std::uint32_t full = (1u << m) - 1u;
  out.collinear = mask_rank_le(full, 2);
  for (std::uint32_t mask = 0; mask <= full / 2; ++mask) {
    if (!out.two_lines && mask_rank_le(mask, 2) && mask_rank_le(full & ~mask, 2)) out.two_lines = true;
    if (!out.two_planes && mask_rank_le(mask, 3) && mask_rank_le(full & ~mask, 3)) out.two_planes = true;
    if (out.two_lines && out.two_planes) break;
  }
  return out;
}

}  // namespace waringlab
