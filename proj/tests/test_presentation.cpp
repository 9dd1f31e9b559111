#include "doctest.h"
#include "hopfkit/catalog.hpp"
#include "hopfkit/errors.hpp"

using namespace hopfkit;

namespace {

const Presentation& pres(const Family& f) {
  REQUIRE(f.presentation.has_value());
  return *f.presentation;
}

}  // namespace

TEST_CASE("normal monomials reduce to themselves") {
  for (const Family& f : {taft(3), h8p(3, 1), a4p(3)}) {
    const Presentation& p = pres(f);
    NormalForm nf(p);
    for (std::size_t i = 0; i < p.normal_monomials.size(); ++i) {
      const SparseVec v = nf.reduce(p.normal_monomials[i]);
      REQUIRE(v.size() == 1);
      CHECK(v[0].index == i);
      CHECK(v[0].coeff.is_one());
      CHECK(p.label(p.normal_monomials[i]) == f.algebra.labels[i]);
    }
  }
}

TEST_CASE("reduction is compatible with the realized product") {
  const Family f = h8p(3, 1);
  const Presentation& p = pres(f);
  NormalForm nf(p);
  // concatenating two normal words and reducing must give e_i e_j
  for (std::size_t i = 0; i < p.normal_monomials.size(); i += 5)
    for (std::size_t j = 0; j < p.normal_monomials.size(); j += 3) {
      const Vec lhs = nf.reduce(word(p, concat(p.normal_monomials[i], p.normal_monomials[j])));
      CHECK(lhs == multiply(f.algebra, basis_element(f.algebra, i), basis_element(f.algebra, j)));
    }
  // reduction is idempotent on arbitrary words
  const int a = p.generator("a"), x = p.generator("x"), z = p.generator("z");
  const Word w{z, x, a, z, x, x, a, z, x};
  const Vec once = nf.reduce(word(p, w));
  WordComb back;
  for (std::size_t i = 0; i < once.size(); ++i)
    if (!once[i].is_zero()) back = back + word(p, p.normal_monomials[i], once[i]);
  CHECK(nf.reduce(back) == once);
}

TEST_CASE("relations hold in H_8p") {
  const Family f = h8p(3, 1);
  const Presentation& p = pres(f);
  NormalForm nf(p);
  const int a = p.generator("a"), x = p.generator("x"), z = p.generator("z");
  CHECK(nf.reduce(word(p, {z, z})) == nf.reduce(word(p, {a}) - word(p, {})));
  CHECK(nf.reduce(word(p, {x, z})) == nf.reduce(scale(CycNumber(p.conductor, -1L), word(p, {z, x}))));
  CHECK(nf.reduce(word(p, letter_power(x, 6))) == nf.reduce(word(p, {})));
  CHECK(nf.reduce(word(p, {a, a})) == nf.reduce(word(p, {})));
}

TEST_CASE("step guard and stuck words") {
  Presentation p;
  p.name = "loop";
  p.generators = {"x"};
  p.normal_monomials = {{}, {0}};
  p.rules = {{{0, 0}, word(p, {0, 0, 0})}};
  p.step_limit = 200;
  NormalForm nf(p);
  CHECK_THROWS_AS(nf.reduce(Word{0, 0}), VerificationFailure);

  Presentation q;
  q.name = "stuck";
  q.generators = {"x"};
  q.normal_monomials = {{}, {0}};
  NormalForm nq(q);
  CHECK_THROWS_AS(nq.reduce(Word{0, 0}), VerificationFailure);
}

TEST_CASE("the plus sign on e_1 x in S(x) breaks the antipode axiom") {
  Presentation p = pres(fun_dic(3));
  const int a = p.generator("a"), x = p.generator("x");
  const Rational half(1, 2);
  const WordComb e1 = word(p, {}, CycNumber(p.conductor, half)) - word(p, {a}, CycNumber(p.conductor, half));
  // e_0 x^-1 + e_1 x = (e_0 x^-1 - e_1 x) + 2 e_1 x
  p.images[x].antipode = p.images[x].antipode + scale(CycNumber(p.conductor, 2L), e1 * word(p, {x}));
  const HopfAlgebra h = realize(p, {false});
  const AxiomReport r = verify_hopf(h);
  CHECK_FALSE(r.passed());
  CHECK(r.first_failure().find("antipode") != std::string::npos);
  CHECK_THROWS_AS(realize(p), VerificationFailure);
  // the sign actually used passes
  CHECK(verify_hopf(fun_dic(3).algebra).passed());
}
