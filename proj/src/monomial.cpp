#include "waringlab/monomial.hpp"

#include <mutex>
#include <stdexcept>

namespace waringlab {

namespace {

struct BasisCache {
  std::vector<Exponents> tuples;
  std::map<Exponents, Eigen::Index> index;
};

void enumerate(int vars_left, int rem, Exponents& cur, std::vector<Exponents>& out) {
  if (vars_left == 1) {
    cur.push_back(rem);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int k = rem; k >= 0; --k) {
    cur.push_back(k);
    enumerate(vars_left - 1, rem - k, cur, out);
    cur.pop_back();
  }
}

const BasisCache& cache_for(int n, int d) {
  static std::map<std::pair<int, int>, BasisCache> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto [it, fresh] = cache.try_emplace({n, d});
  if (fresh) {
    Exponents cur;
    enumerate(n + 1, d, cur, it->second.tuples);
    for (std::size_t k = 0; k < it->second.tuples.size(); ++k)
      it->second.index.emplace(it->second.tuples[k], static_cast<Eigen::Index>(k));
  }
  return it->second;
}

}  // namespace

Eigen::Index monomial_count(int n, int d) {
  if (n < 0 || d < 0) throw std::invalid_argument("monomial_count: negative arguments");
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n + d), static_cast<unsigned long>(d));
  return static_cast<Eigen::Index>(b.get_ui());
}

const std::vector<Exponents>& monomial_basis(int n, int d) { return cache_for(n, d).tuples; }

Eigen::Index monomial_index(int n, int d, const Exponents& a) {
  const auto& idx = cache_for(n, d).index;
  const auto it = idx.find(a);
  if (it == idx.end()) throw std::invalid_argument("monomial_index: tuple not in basis");
  return it->second;
}

Rat multinomial(int d, const Exponents& a) {
  mpz_class v;
  mpz_fac_ui(v.get_mpz_t(), static_cast<unsigned long>(d));
  for (int ai : a) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(ai));
    mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), f.get_mpz_t());
  }
  return Rat(std::move(v));
}

}  // namespace waringlab
