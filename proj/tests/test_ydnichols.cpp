#include <cstdlib>

#include "doctest.h"
#include "hopfkit/catalog.hpp"
#include "hopfkit/errors.hpp"

using namespace hopfkit;

namespace {

// [n, k]_q as the inversion generating function over 0/1 words with k ones
CycNumber q_binomial_by_inversions(unsigned n, unsigned k, const CycNumber& q) {
  CycNumber s(q.conductor());
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<unsigned>(__builtin_popcount(mask)) != k) continue;
    unsigned inv = 0;
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = i + 1; j < n; ++j)
        if ((mask >> i & 1) && !(mask >> j & 1)) ++inv;
    s += q.pow(inv);
  }
  return s;
}

// (c (x) 1)(1 (x) c)(c (x) 1) = (1 (x) c)(c (x) 1)(1 (x) c) entry by entry
bool braid_by_indices(const Matrix& c, std::size_t v) {
  const std::size_t n = v * v * v;
  auto c12 = [&](std::size_t out, std::size_t in) {
    // indices a*v*v + b*v + d, c acting on (a,b)
    if (out % v != in % v) return CycNumber(c.conductor());
    return c(out / v, in / v);
  };
  auto c23 = [&](std::size_t out, std::size_t in) {
    if (out / (v * v) != in / (v * v)) return CycNumber(c.conductor());
    return c(out % (v * v), in % (v * v));
  };
  auto prod = [&](auto f, auto g) {
    Matrix m(n, n, c.conductor());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        const CycNumber a = f(i, k);
        if (a.is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) m(i, j) += a * g(k, j);
      }
    return m;
  };
  auto as_fn = [](const Matrix& m) { return [&m](std::size_t i, std::size_t j) { return m(i, j); }; };
  const Matrix l1 = prod(c12, c23), r1 = prod(c23, c12);
  const Matrix lhs = prod(as_fn(l1), c12), rhs = prod(as_fn(r1), c23);
  return lhs == rhs;
}

// S as the convolution inverse of id: solve sum S(h_1) h_2 = eps(h) 1 for
// the dim^2 entries of S.
Matrix antipode_by_solve(const HopfAlgebra& h) {
  const std::size_t n = h.dim;
  Matrix a(n * n, n * n, h.conductor);
  Vec rhs(n * n, CycNumber(h.conductor));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) rhs[i * n + k] = h.counit[i] * h.unit[k];
    for (const auto& t : h.comult[i])
      for (std::size_t j = 0; j < n; ++j)
        for (const auto& pr : h.product(j, t.right))
          a(i * n + pr.index, j * n + t.left) += t.coeff * pr.coeff;  // unknown S(j, l) at j*n + l
  }
  const auto sol = solve(a, rhs);
  REQUIRE(sol.has_value());
  Matrix s(n, n, h.conductor);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t l = 0; l < n; ++l) s(j, l) = (*sol)[j * n + l];
  return s;
}

Matrix scalar_braiding(const CycNumber& q) {
  Matrix c(1, 1, q.conductor());
  c(0, 0) = q;
  return c;
}

}  // namespace

TEST_CASE("q-binomials") {
  const CycNumber two(1, 2L);
  const CycNumber z7 = CycNumber::root_of_unity(7, 1);
  const CycNumber z5 = CycNumber::root_of_unity(5, 2);
  for (const CycNumber& q : {two, z7, z5, CycNumber(1, -1L)})
    for (unsigned n = 0; n <= 7; ++n)
      for (unsigned k = 0; k <= n; ++k) {
        CAPTURE(n);
        CAPTURE(k);
        CHECK(q_binomial(n, k, q) == q_binomial_by_inversions(n, k, q));
        // the other Pascal rule
        if (k > 0 && k < n)
          CHECK(q_binomial(n, k, q) == q.pow(n - k) * q_binomial(n - 1, k - 1, q) + q_binomial(n - 1, k, q));
      }
  // product formula where the factorials are invertible
  for (unsigned n = 1; n <= 6; ++n)
    for (unsigned k = 0; k <= n; ++k)
      CHECK(q_binomial(n, k, z7) * q_factorial(k, z7) * q_factorial(n - k, z7) == q_factorial(n, z7));
  // at a primitive N-th root the middle coefficients vanish
  const CycNumber z6 = CycNumber::root_of_unity(6, 1);
  for (unsigned k = 1; k < 6; ++k) CHECK(q_binomial(6, k, z6).is_zero());
  CHECK(q_int(3, CycNumber::root_of_unity(3, 1)).is_zero());
  CHECK(*root_order(z5) == 5);
  CHECK(*root_order(CycNumber(1, 1L)) == 1);
  CHECK_FALSE(root_order(two).has_value());
}

TEST_CASE("Nichols algebras of rank one") {
  SUBCASE("c = -1 gives the exterior algebra") {
    const auto r = nichols_dims(scalar_braiding(CycNumber(1, -1L)), 1, 8);
    CHECK(r.truncated);
    CHECK(r.total_dim == 2);
  }
  for (int N : {2, 3, 4, 6}) {
    CAPTURE(N);
    const CycNumber q = CycNumber::root_of_unity(N, 1);
    const auto r = nichols_dims(scalar_braiding(q), 1, 8);
    CHECK(r.truncated);
    CHECK(r.total_dim == static_cast<std::size_t>(N));
    // degree n survives iff (n)_q! != 0
    for (unsigned n = 0; n < r.ranks.size(); ++n) CHECK((r.ranks[n] == 1) == !q_factorial(n, q).is_zero());
  }
  SUBCASE("c = 1 does not truncate") {
    const auto r = nichols_dims(scalar_braiding(CycNumber(1, 1L)), 1, 8);
    CHECK_FALSE(r.truncated);
    CHECK(r.ranks == std::vector<std::size_t>(9, 1));
    CHECK(r.note.find("no truncation") != std::string::npos);
  }
}

TEST_CASE("Yetter-Drinfeld modules over Gamma_20") {
  const int p = 5;
  std::vector<YDModule> mods;
  for (int s = 0; s < 4; ++s) mods.push_back(yd_module_gamma4p(p, GammaClass::kY, 1, s));
  for (int m = 1; m < 4; ++m)
    for (int k = 0; k < 4; ++k) mods.push_back(yd_module_gamma4p(p, GammaClass::kX, m, k));
  for (int i = 0; i < 5; ++i) mods.push_back(yd_module_gamma4p(p, GammaClass::kTrivial, 0, i));
  for (const auto& m : mods) {
    CAPTURE(m.label);
    const auto r = verify_yd(m);
    CHECK(r.passed);
    const Matrix c = braiding(m);
    CHECK(braid_equation_check(c, m.dim));
    if (m.dim <= 4) CHECK(braid_by_indices(c, m.dim));
    CHECK(rank(c) == m.dim * m.dim);
  }
  // x v_j = w^k v_{j l + 1} breaks the grading
  const auto shifted = yd_module_gamma4p(p, GammaClass::kX, 1, 1, XActionConvention::kShifted);
  const auto r = verify_yd(shifted);
  CHECK_FALSE(r.passed);
  CHECK(r.detail.find("degree") != std::string::npos);
  CHECK_THROWS_AS(yd_module_gamma4p(3, GammaClass::kY, 1, 0), InvalidParameter);
  CHECK_THROWS_AS(yd_module_gamma4p(p, GammaClass::kX, 0, 0), InvalidParameter);
}

TEST_CASE("M(O_y, psi_1) is of diagonal type") {
  const auto m = yd_module_gamma4p(5, GammaClass::kY, 1, 1);
  const auto dt = diagonal_type(braiding(m), m.dim);
  REQUIRE(dt.has_value());
  // q_rt = zeta_5^(2^(r+4-t))
  const CycNumber z5 = embed(CycNumber::root_of_unity(5, 1), (*dt)[0][0].conductor());
  for (int r = 0; r < 4; ++r)
    for (int t = 0; t < 4; ++t) {
      const unsigned e = 1u << (r + 4 - t);
      CHECK((*dt)[r][t] == z5.pow(e % 5));
    }
  // O_{x^m} modules are not diagonal in the given basis
  const auto x = yd_module_gamma4p(5, GammaClass::kX, 1, 1);
  CHECK_FALSE(diagonal_type(braiding(x), x.dim).has_value());
}

TEST_CASE("braid equation oracle agrees on a non-braiding") {
  // c = flip composed with a non-scalar twist on the first factor
  Matrix c(4, 4, 1);
  c(0, 0) = CycNumber(1, 1L);
  c(1, 2) = CycNumber(1, 1L);
  c(2, 1) = CycNumber(1, 1L);
  c(3, 3) = CycNumber(1, 1L);
  c(0, 1) = CycNumber(1, 1L);
  CHECK(braid_equation_check(c, 2) == braid_by_indices(c, 2));
  CHECK_FALSE(braid_by_indices(c, 2));
}

TEST_CASE("symmetrizer ranks do not depend on the reduced words") {
  for (const auto& m : {yd_module_gamma4p(5, GammaClass::kY, 1, 1), yd_module_gamma4p(5, GammaClass::kX, 1, 1),
                        yd_module_gamma4p(5, GammaClass::kTrivial, 0, 4)}) {
    CAPTURE(m.label);
    const Matrix c = braiding(m);
    for (unsigned n = 2; n <= 3; ++n)
      CHECK(symmetrizer_rank(c, m.dim, n, WordOrder::kInsertionSort) == symmetrizer_rank(c, m.dim, n, WordOrder::kReversed));
  }
  // the trivial braiding symmetrizes to symmetric tensors
  const auto t = yd_module_gamma4p(5, GammaClass::kTrivial, 0, 4);
  CHECK(symmetrizer_rank(braiding(t), 4, 3) == 20);
}

TEST_CASE("memory guard") {
  ::setenv("HOPFKIT_NICHOLS_GUARD_MB", "1", 1);
  const auto m = yd_module_gamma4p(5, GammaClass::kX, 1, 1);
  const auto r = nichols_dims(braiding(m), m.dim, 6);
  ::unsetenv("HOPFKIT_NICHOLS_GUARD_MB");
  CHECK(r.guard_hit);
  CHECK_FALSE(r.truncated);
  CHECK(r.note.find("memory guard") != std::string::npos);
  CHECK(nichols_guard_mb() == 512);
  CHECK(default_cutoff(1) == 8);
  CHECK(default_cutoff(2) == 6);
  CHECK(default_cutoff(5) == 4);
}

TEST_CASE("YD data") {
  for (int p : {3, 5}) {
    CAPTURE(p);
    CHECK(validate_yd_datum(fun_dic_datum(p)).passed);
    CHECK(validate_yd_datum(a4p_datum(p, A4pDatum::kChi2)).passed);
    CHECK(validate_yd_datum(a4p_datum(p, A4pDatum::kChi3)).passed);
    // the other pairing of group-likes and characters gives chi(g) = 1
    for (auto w : {A4pDatum::kChi2OnU, A4pDatum::kChi3OnUa}) {
      const auto r = yd_datum_conditions(a4p_datum(p, w));
      CHECK_FALSE(r.passed());
      CHECK_FALSE(r.chi_g_is_q);
      CHECK(r.commutation);
    }
    // chi(x) = +1 makes chi the counit: commutation holds, chi(g) = q does not
    const auto flip = yd_datum_conditions(fun_dic_datum(p, true));
    CHECK_FALSE(flip.passed());
    CHECK(flip.chi_algebra_map);
    CHECK(flip.commutation);
    CHECK_FALSE(flip.chi_g_is_q);
  }
  const auto c = cyclic_datum(4, 1);
  CHECK(validate_yd_datum(c).passed);
  YDDatum wrong = c;
  wrong.q = CycNumber::root_of_unity(4, 3);
  CHECK_FALSE(validate_yd_datum(wrong).passed);
  YDDatum one = c;
  one.chi = c.algebra.counit;
  one.q = CycNumber(c.q.conductor(), 1L);
  const auto r = yd_datum_conditions(one);
  CHECK_FALSE(r.q_root_of_unity);
}

TEST_CASE("bosonizations") {
  CHECK(same_tensors(bosonize(fun_dic_datum(3)), h8p(3, 0).algebra));
  for (int N : {2, 3, 4}) CHECK(same_tensors(bosonize(cyclic_datum(N, 1)), taft(N).algebra));
  const HopfAlgebra b = bosonize(a4p_datum(3, A4pDatum::kChi2));
  CHECK(b.dim == 24);
  CHECK(tr_s_squared(b).is_zero());
  CHECK(coradical(b).dim() == 12);
  CHECK(chevalley_check(b).holds);
  CHECK_THROWS_AS(bosonize(fun_dic_datum(3, true)), VerificationFailure);
}

TEST_CASE("bosonization antipode matches the convolution inverse of id") {
  for (int N : {2, 3, 4}) {
    const HopfAlgebra b = bosonize(cyclic_datum(N, N - 1));
    CHECK(antipode_by_solve(b) == b.antipode);
  }
}
