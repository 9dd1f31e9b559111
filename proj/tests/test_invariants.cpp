#include "doctest.h"
#include "hopfkit/catalog.hpp"
#include "hopfkit/errors.hpp"

using namespace hopfkit;

namespace {

// f -> h = sum h_1 f(h_2) and h <- f = sum f(h_1) h_2
Vec hit_left(const HopfAlgebra& h, const Vec& f, const Vec& v) {
  Vec out(h.dim, CycNumber(h.conductor));
  for (const auto& [k, c] : comultiply(h, v)) out[k.first] += c * f[k.second];
  return out;
}
Vec hit_right(const HopfAlgebra& h, const Vec& f, const Vec& v) {
  Vec out(h.dim, CycNumber(h.conductor));
  for (const auto& [k, c] : comultiply(h, v)) out[k.second] += c * f[k.first];
  return out;
}

// Radford: S^4(h) = a (alpha^-1 -> h <- alpha) a^-1, with a and alpha the
// distinguished group-likes of H and H* both taken from right integrals of
// the dual (so alpha is the inverse of the left-integral modular function).
// Only the Taft algebra below tells the four sign choices apart.
void check_radford(const HopfAlgebra& h) {
  const Vec a = distinguished_grouplike(h);
  const Vec alpha = distinguished_grouplike(dual(h));
  const Vec alpha_inv = apply_antipode(dual(h), alpha);
  const Vec a_inv = *inverse(h, a);
  const Matrix s2 = h.antipode * h.antipode;
  const Matrix s4 = s2 * s2;
  for (std::size_t i = 0; i < h.dim; ++i) {
    const Vec e = basis_element(h, i);
    const Vec mid = hit_right(h, alpha, hit_left(h, alpha_inv, e));
    CAPTURE(h.labels[i]);
    CHECK(s4.apply(e) == multiply(h, multiply(h, a, mid), a_inv));
  }
}

void check_integral_definitions(const HopfAlgebra& h) {
  const Integrals ints = integrals(h);
  const Vec& t = ints.left.basis().front();
  const Vec& r = ints.right.basis().front();
  for (std::size_t i = 0; i < h.dim; ++i) {
    const Vec e = basis_element(h, i);
    const CycNumber eps = counit(h, e);
    Vec lt = t, rt = r;
    for (auto& c : lt) c *= eps;
    for (auto& c : rt) c *= eps;
    CHECK(multiply(h, e, t) == lt);
    CHECK(multiply(h, r, e) == rt);
  }
}

}  // namespace

TEST_CASE("group algebras") {
  const Family f = build_family("dihedral", {.n = 4});
  const HopfAlgebra& h = f.algebra;
  CHECK(jacobson_radical(h).dim() == 0);
  CHECK(coradical(h).dim() == 8);
  CHECK(coradical_filtration(h).size() == 1);
  for (std::size_t i = 0; i < h.dim; ++i) CHECK(is_grouplike(h, basis_element(h, i)));
  CHECK(distinguished_grouplike(h) == h.unit);
  // the integral is the sum of the group
  Vec sum(h.dim, CycNumber(h.conductor, 1L));
  CHECK(integrals(h).left.contains(sum));
  CHECK(integrals(h).right.contains(sum));
  CHECK(chevalley_check(h).holds);
  CHECK_FALSE(is_commutative(h));
  CHECK(*antipode_order(h) == 2);
  // the dual of a nonabelian group algebra is commutative and not pointed
  const HopfAlgebra d = dual(h);
  CHECK(is_commutative(d));
  CHECK(coradical(d).dim() == 8);
}

TEST_CASE("Taft algebras") {
  for (int N : {2, 3, 4}) {
    CAPTURE(N);
    const Family f = taft(N);
    const HopfAlgebra& h = f.algebra;
    const std::size_t n = static_cast<std::size_t>(N);
    CHECK(jacobson_radical(h).dim() == n * n - n);
    const auto filt = coradical_filtration(h);
    REQUIRE(filt.size() == n);
    for (std::size_t k = 0; k < n; ++k) CHECK(filt[k].dim() == n * (k + 1));
    CHECK(tr_s_squared(h).is_zero());
    CHECK_FALSE(is_semisimple(h));
    CHECK(*antipode_order(h) == 2 * n);
    CHECK(chevalley_check(h).holds);
    check_integral_definitions(h);
    const Vec g = basis_element(h, "g");
    // distinguished group-like of T_q is g^-1
    CHECK(distinguished_grouplike(h) == *inverse(h, g));
    const Subspace p = skew_primitive_space(h, h.unit, g);
    CHECK(p.contains(basis_element(h, "x")));
    CHECK(has_nontrivial_skew_primitive(h, p, h.unit, g));
    // (1,1)-primitives are trivial in a finite-dimensional Hopf algebra
    const Subspace prim = skew_primitive_space(h, h.unit, h.unit);
    CHECK(prim.dim() == 0);
    CHECK_FALSE(has_nontrivial_skew_primitive(h, prim, h.unit, h.unit));
  }
}

TEST_CASE("Radford's formula for S^4") {
  check_radford(taft(3).algebra);
  check_radford(pointed4p(Pointed4p::kA10Dual, 3).algebra);
  check_radford(pointed4p(Pointed4p::kA11, 3).algebra);
  check_radford(h8p(3, 1).algebra);
}

TEST_CASE("group-like verification") {
  const Family f = h8p(3, 1);
  const auto& c = f.candidates;
  auto r = verify_grouplikes(f.algebra, c.grouplikes);
  CHECK(r.passed);
  CHECK(r.orders == std::vector<unsigned>{1, 4, 2, 4});
  // a skew-primitive is not group-like
  auto bad = c.grouplikes;
  bad.push_back(basis_element(f.algebra, "z"));
  CHECK_FALSE(verify_grouplikes(f.algebra, bad).passed);
  // a set not closed under products
  CHECK_FALSE(verify_grouplikes(f.algebra, {c.grouplikes[0], c.grouplikes[1]}).passed);
  CHECK(*element_order(f.algebra, c.grouplikes[1], 16) == 4);
}

TEST_CASE("H_8p structure") {
  const HopfAlgebra h = h8p(3, 1).algebra;
  CHECK(h.dim == 24);
  const auto filt = coradical_filtration(h);
  REQUIRE(filt.size() == 2);
  CHECK(filt[0].dim() == 12);
  CHECK(jacobson_radical(h).dim() == 6);
  CHECK(coradical(dual(h)).dim() == 18);
  CHECK(*antipode_order(h) == 4);
  CHECK_FALSE((h.antipode * h.antipode).is_identity());
  // the coradical is the span of the a^i x^j
  std::vector<Vec> ax;
  for (std::size_t i = 0; i < 12; ++i) ax.push_back(basis_element(h, i));
  CHECK(Subspace::span(h.dim, h.conductor, ax) == filt[0]);
  CHECK(chevalley_check(h, filt[0]).holds);
}

TEST_CASE("Hopf maps and coinvariants") {
  const YDDatum d = a4p_datum(3, A4pDatum::kChi2);
  const HopfAlgebra b = bosonize(d);
  const Matrix pi = bosonization_projection(d);
  CHECK_NOTHROW(check_hopf_map(b, d.algebra, pi));
  const Subspace co = coinvariants(b, d.algebra, pi);
  CHECK(co.dim() == 2);
  CHECK(co.contains(b.unit));
  // sending y to 1 instead of 0 is not a coalgebra map
  Matrix wrong = pi;
  const std::size_t y = b.index_of("y");
  wrong(0, y) = CycNumber(b.conductor, 1L);
  CHECK_THROWS_AS(check_hopf_map(b, d.algebra, wrong), VerificationFailure);
}
