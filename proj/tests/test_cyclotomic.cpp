#include <random>

#include "doctest.h"
#include "hopfkit/cyclotomic.hpp"
#include "hopfkit/errors.hpp"
#include "oracles.hpp"

using namespace hopfkit;

namespace {

CycNumber z(int n, std::int64_t k) { return CycNumber::root_of_unity(n, k); }
CycNumber q(int n, long v) { return CycNumber(n, v); }

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<std::int64_t>{-1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<std::int64_t>{1, 0, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<std::int64_t>{1, 0, -1, 0, 1});
  for (int n = 1; n <= 105; ++n) {
    auto lib = cyclotomic_polynomial(n);
    auto ref = oracle::cyclotomic_mobius(n);
    REQUIRE(lib.size() == ref.size());
    for (std::size_t i = 0; i < lib.size(); ++i) CHECK(mpq_class(lib[i]) == ref[i]);
    CHECK(static_cast<int>(lib.size()) - 1 == euler_phi(n));
  }
}

TEST_CASE("roots of unity") {
  CHECK(z(4, 2) == q(4, -1));
  CHECK(z(7, 0) == q(7, 1));
  CHECK(z(3, 1) + z(3, 2) == q(3, -1));
  CHECK(z(4, 1) * z(4, 1) == q(4, -1));
  for (int n : {1, 2, 3, 5, 8, 12, 20}) {
    CHECK(z(n, 1).pow(n).is_one());
    CHECK(z(n, n) == q(n, 1));
    CHECK(z(n, -1) == z(n, n - 1));
    for (int k = 0; k < n; ++k) CHECK(z(n, k).inverse() == z(n, n - k));
    // Phi_n(zeta) = 0
    auto phi = cyclotomic_polynomial(n);
    CycNumber acc(n);
    for (std::size_t i = 0; i < phi.size(); ++i) acc += CycNumber(n, static_cast<long>(phi[i])) * z(n, i);
    CHECK(acc.is_zero());
  }
}

TEST_CASE("inverse agrees with extended Euclid") {
  CycNumber a = q(5, 1) + z(5, 1);
  CHECK((a * a.inverse()).is_one());
  auto ref = oracle::inverse_mod(oracle::to_poly(a), oracle::cyclotomic_mobius(5));
  CHECK(oracle::to_poly(a.inverse()) == ref);

  std::mt19937 rng(7);
  for (int n : {1, 2, 3, 4, 8, 12, 20, 60}) {
    for (int t = 0; t < 100; ++t) {
      CycNumber x = oracle::random_cyc(rng, n);
      if (x.is_zero()) continue;
      CycNumber xi = x.inverse();
      CHECK((xi * x).is_one());
      if (t < 10) CHECK(oracle::to_poly(xi) == oracle::inverse_mod(oracle::to_poly(x), oracle::cyclotomic_mobius(n)));
    }
  }
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(CycNumber(4).inverse(), DivisionByZero);
  CHECK_THROWS_AS(z(4, 1) + z(3, 1), ConductorMismatch);
  CHECK_THROWS_AS(z(4, 1) / CycNumber(4), DivisionByZero);
  CHECK_THROWS_AS(embed(z(4, 1), 6), InvalidParameter);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
}

TEST_CASE("rational text round trip") {
  CHECK(rational_to_string(Rational(-1, 2)) == "-1/2");
  CHECK(rational_to_string(Rational(-4)) == "-4/1");
  CHECK(parse_rational("-2/4") == Rational(-1, 2));
  CHECK(parse_rational("7") == Rational(7));
  CHECK(rational_to_string(parse_rational("123456789012345678901234567891/7")) == "123456789012345678901234567891/7");
}

TEST_CASE("embedding") {
  CHECK(embed(z(4, 1), 12) == z(12, 3));
  CHECK(embed(q(1, 1), 60) == q(60, 1));
  CHECK(embed(z(3, 1) + z(3, 2), 12) == q(12, -1));
  std::mt19937 rng(11);
  for (auto [n, m] : std::vector<std::pair<int, int>>{{3, 12}, {4, 12}, {4, 20}, {5, 20}, {6, 60}, {2, 8}}) {
    for (int t = 0; t < 100; ++t) {
      CycNumber a = oracle::random_cyc(rng, n), b = oracle::random_cyc(rng, n);
      CHECK(embed(a * b, m) == embed(a, m) * embed(b, m));
      CHECK(embed(a + b, m) == embed(a, m) + embed(b, m));
    }
  }
}

TEST_CASE("canonical form is stable") {
  std::mt19937 rng(3);
  for (int n : {3, 8, 12, 15}) {
    for (int t = 0; t < 20; ++t) {
      CycNumber a = oracle::random_cyc(rng, n);
      CHECK(CycNumber::from_canonical(n, a.coeffs()) == a);
      CHECK(CycNumber::from_powers(n, a.coeffs()) == a);
      CHECK(a - a == CycNumber(n));
    }
  }
  // z^N reduces to 1 through from_powers.
  std::vector<Rational> c(13, 0);
  c[12] = 1;
  CHECK(CycNumber::from_powers(12, c).is_one());
}

TEST_CASE("display") {
  CHECK(CycNumber(12).str() == "0");
  CHECK(q(12, 1).str() == "1");
  CHECK(z(4, 1).str() == "z4");
}
