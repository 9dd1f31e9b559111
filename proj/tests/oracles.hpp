#ifndef HOPFKIT_TESTS_ORACLES_HPP
#define HOPFKIT_TESTS_ORACLES_HPP

// Independent reference computations used to cross-check the library.
// Nothing here calls into the cyclotomic reduction code.

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <vector>

#include "hopfkit/cyclotomic.hpp"

namespace oracle {

using Poly = std::vector<mpq_class>;  // lowest degree first

inline void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

inline Poly sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// Long division; returns {quotient, remainder}.
inline std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
  trim(a);
  Poly q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, 0);
  while (a.size() >= b.size() && !a.empty()) {
    std::size_t shift = a.size() - b.size();
    mpq_class c = a.back() / b.back();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
    trim(a);
  }
  trim(q);
  return {q, a};
}

inline int mobius(int n) {
  int m = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      m = -m;
    }
  }
  if (n > 1) m = -m;
  return m;
}

// Phi_n = prod_{d | n} (t^d - 1)^{mu(n/d)}.
inline Poly cyclotomic_mobius(int n) {
  Poly num{1}, den{1};
  for (int d = 1; d <= n; ++d) {
    if (n % d) continue;
    Poly f(d + 1, 0);
    f[0] = -1;
    f[d] = 1;
    int mu = mobius(n / d);
    if (mu == 1) num = mul(num, f);
    if (mu == -1) den = mul(den, f);
  }
  auto [q, r] = divmod(num, den);
  return q;
}

// Inverse of a mod m in Q[t] by the extended Euclidean algorithm.
inline Poly inverse_mod(const Poly& a, const Poly& m) {
  Poly r0 = m, r1 = a, s0{}, s1{1};
  trim(r1);
  while (!(r1.size() == 1)) {
    auto [q, r] = divmod(r0, r1);
    Poly s = sub(s0, mul(q, s1));
    r0 = r1;
    r1 = r;
    s0 = s1;
    s1 = s;
    if (r1.empty()) return {};  // not invertible
  }
  for (auto& c : s1) c /= r1[0];
  return divmod(s1, m).second;
}

inline Poly to_poly(const hopfkit::CycNumber& x) {
  Poly p(x.coeffs().begin(), x.coeffs().end());
  trim(p);
  return p;
}

inline hopfkit::CycNumber random_cyc(std::mt19937& rng, int conductor) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  std::vector<mpq_class> c(hopfkit::euler_phi(conductor));
  for (auto& x : c) {
    x = mpq_class(num(rng), den(rng));
    x.canonicalize();
  }
  return hopfkit::CycNumber::from_canonical(conductor, c);
}

}  // namespace oracle

#endif
