#include <algorithm>

#include "doctest.h"
#include "hopfkit/catalog.hpp"
#include "hopfkit/errors.hpp"

using namespace hopfkit;

namespace {

const ModuleSpec& spec_named(const CandidateData& c, const std::string& label) {
  auto it = std::find_if(c.simples.begin(), c.simples.end(), [&](const ModuleSpec& m) { return m.label == label; });
  REQUIRE(it != c.simples.end());
  return *it;
}

RepModule direct_sum(const RepModule& a, const RepModule& b, int conductor) {
  RepModule s{a.label + "+" + b.label, a.dim + b.dim, {}};
  for (std::size_t i = 0; i < a.action.size(); ++i) {
    Matrix m(s.dim, s.dim, conductor);
    for (std::size_t r = 0; r < a.dim; ++r)
      for (std::size_t c = 0; c < a.dim; ++c) m(r, c) = a.action[i](r, c);
    for (std::size_t r = 0; r < b.dim; ++r)
      for (std::size_t c = 0; c < b.dim; ++c) m(a.dim + r, a.dim + c) = b.action[i](r, c);
    s.action.push_back(m);
  }
  return s;
}

}  // namespace

TEST_CASE("H_8p simples") {
  const Family f = h8p(3, 1);
  const HopfAlgebra& h = f.algebra;
  std::vector<RepModule> mods;
  for (const auto& s : f.candidates.simples) {
    mods.push_back(expand_module(h, s));
    CHECK(verify_module(h, mods.back()).passed);
    CHECK(is_simple_certified(mods.back()));
  }
  // Schur: Hom between representatives is zero off the diagonal
  for (std::size_t i = 0; i < mods.size(); ++i)
    for (std::size_t j = 0; j < mods.size(); ++j) CHECK(hom_space(mods[i], mods[j]).dim() == (i == j ? 1u : 0u));
  const auto wc = wedderburn_certificate(h, mods);
  CHECK(wc.passed);
  CHECK(wc.sum_of_squares == 18);
  CHECK(wc.profile == std::vector<std::size_t>{1, 1, 1, 1, 1, 1, 2, 2, 2});
  for (const auto& cp : f.candidates.isomorphic_copies)
    CHECK(are_isomorphic(expand_module(h, cp.module), mods[cp.partner]));

  // dropping a simple or repeating an isomorphic copy breaks the certificate
  auto fewer = mods;
  fewer.pop_back();
  CHECK_FALSE(wedderburn_certificate(h, fewer).passed);
  auto dup = mods;
  dup.back() = expand_module(h, f.candidates.isomorphic_copies.back().module);
  dup.push_back(mods.back());
  CHECK_FALSE(wedderburn_certificate(h, dup).passed);
}

TEST_CASE("a wrong sign on z in U_0 fails at (z,z)") {
  const Family f = h8p(3, 1);
  ModuleSpec u0 = spec_named(f.candidates, "U_0");
  for (auto& [gen, m] : u0.generators)
    if (gen == "z") m(0, 1) = CycNumber(m.conductor(), 2L);
  const RepModule m = expand_module(f.algebra, u0);
  const auto r = verify_module(f.algebra, m);
  CHECK_FALSE(r.passed);
  CHECK(r.detail.find("(z,z)") != std::string::npos);
}

TEST_CASE("direct sums are not simple") {
  const Family f = h8p(3, 1);
  const RepModule w0 = expand_module(f.algebra, spec_named(f.candidates, "W_0"));
  const RepModule w1 = expand_module(f.algebra, spec_named(f.candidates, "W_1"));
  const RepModule s = direct_sum(w0, w1, f.algebra.conductor);
  CHECK(verify_module(f.algebra, s).passed);
  CHECK_FALSE(is_simple_certified(s));
  CHECK(hom_space(w0, s).dim() == 1);
  CHECK(character(s) == [&] {
    Vec v = character(w0);
    const Vec b = character(w1);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += b[i];
    return v;
  }());
}

TEST_CASE("coradical blocks give simple comodules") {
  for (const Family& f : {fun_dic(3), h8p(3, 1), a4p(3), b4p(3)}) {
    CAPTURE(f.name);
    const HopfAlgebra d = dual(f.algebra);
    for (const auto& b : f.candidates.coradical_blocks) {
      CHECK(is_multiplicative_matrix(f.algebra, b.entries));
      const RepModule m = dual_module_from_matrix(f.algebra, b.label, b.entries);
      CHECK(verify_module(d, m).passed);
      CHECK(is_simple_certified(m));
    }
  }
  // a perturbed block is rejected
  auto blk = fun_dic(3).candidates.coradical_blocks.front();
  std::swap(blk.entries[0][1], blk.entries[1][0]);
  CHECK_FALSE(is_multiplicative_matrix(fun_dic(3).algebra, blk.entries));
}

TEST_CASE("A(-1,1) has profile {1,1,2,2}") {
  const Family f = pointed4p(Pointed4p::kA11, 3);
  std::vector<RepModule> mods;
  for (const auto& s : f.candidates.simples) mods.push_back(expand_module(f.algebra, s));
  const auto wc = wedderburn_certificate(f.algebra, mods, jacobson_radical(f.algebra).dim());
  CHECK(wc.passed);
  CHECK(wc.sum_of_squares == 10);
  CHECK(wc.profile == std::vector<std::size_t>{1, 1, 2, 2});
}

TEST_CASE("module specs are checked") {
  const Family f = taft(3);
  ModuleSpec bad{"bad", 1, {{"nope", Matrix::identity(1, f.algebra.conductor)}}};
  CHECK_THROWS_AS(expand_module(f.algebra, bad), InvalidParameter);
}
