// One line per acceptance criterion.  Exit status is nonzero when any
// criterion fails; failing lines carry the computed values.

#include <algorithm>
#include <functional>
#include <iostream>
#include <sstream>

#include "hopfkit/certify.hpp"
#include "hopfkit/errors.hpp"

using namespace hopfkit;

namespace {

struct Outcome {
  bool passed = true;
  std::vector<std::string> notes;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      notes.push_back(what);
    }
  }
};

const Claim* find_claim(const CertifySuite& s, const std::string& id) {
  for (const auto& c : s.claims)
    if (c.id == id) return &c;
  return nullptr;
}

void require_claim(Outcome& o, const CertifySuite& s, const std::string& id) {
  const Claim* c = find_claim(s, id);
  if (!c) o.require(false, s.family + ": no claim " + id);
  else o.require(c->passed, s.family + " " + id + ": expected " + c->expected + ", computed " + c->computed);
}

std::vector<std::pair<std::string, FamilyParams>> catalog(int p) {
  std::vector<std::pair<std::string, FamilyParams>> out;
  auto add = [&](const std::string& name, FamilyParams fp) { out.emplace_back(name, fp); };
  FamilyParams base;
  base.p = p;
  for (int n : {1, 2, 6}) add("c_n", {.n = n, .p = p});
  add("product", {.p = p, .orders = {2, 2}});
  add("product", {.p = p, .orders = {2, 3}});
  add("dihedral", {.n = p, .p = p});
  add("dihedral", {.n = 2 * p, .p = p});
  add("dicyclic", {.n = p, .p = p});
  add("q8", base);
  if (p % 4 == 1) add("gamma4p", base);
  for (const char* g : {"dicyclic", "dihedral", "q8"}) add("dual-group", {.n = p, .p = p, .group = g});
  for (int N : {2, 3, 4}) add("taft", {.p = p, .N = N});
  add("taft", {.p = p, .N = 2 * p, .k = 1});
  for (int k : {1, 2 * p - 1}) add("a-m10-dual", {.p = p, .k = k});
  for (const char* n : {"a-m10", "a-m11", "h4xcp", "a4p", "b4p", "b8", "fun-dic"}) add(n, base);
  for (int alpha : {0, 1}) add("h8p", {.p = p, .alpha = alpha});
  return out;
}

Outcome criterion1() {
  Outcome o;
  std::size_t count = 0;
  for (int p : {3, 5}) {
    for (const auto& [name, fp] : catalog(p)) {
      const Family f = build_family(name, fp);
      ++count;
      const auto r = verify_hopf(f.algebra);
      o.require(r.passed(), name + " " + describe_params(name, fp) + ": " + r.first_failure());
    }
    for (const YDDatum& d : {fun_dic_datum(p), a4p_datum(p, A4pDatum::kChi2), a4p_datum(p, A4pDatum::kChi3)}) {
      ++count;
      const auto r = verify_hopf(bosonize(d));
      o.require(r.passed(), "bosonization of " + d.label + ": " + r.first_failure());
    }
  }
  o.notes.insert(o.notes.begin(), std::to_string(count) + " algebras");
  return o;
}

Outcome criterion2() {
  Outcome o;
  const Family f = h8p(3, 1);
  const HopfAlgebra& h = f.algebra;
  o.require(h.dim == 24, "dim " + std::to_string(h.dim));
  // g = (e_0 + sqrt(-1) e_1) x^3 built from the basis, not from the sidecar
  const int cond = h.conductor;
  const Vec a = basis_element(h, "a");
  Vec e0 = one(h), e1 = one(h);
  for (std::size_t i = 0; i < h.dim; ++i) {
    e0[i] = (e0[i] + a[i]) * CycNumber(cond, Rational(1, 2));
    e1[i] = (e1[i] - a[i]) * CycNumber(cond, Rational(1, 2));
  }
  const CycNumber i4 = CycNumber::root_of_unity(4, 1);
  Vec coef = e0;
  for (std::size_t i = 0; i < h.dim; ++i) coef[i] += embed(i4, cond) * e1[i];
  const Vec g = multiply(h, coef, basis_element(h, "x^3"));
  o.require(is_grouplike(h, g), "g is not group-like");
  o.require(element_order(h, g, 64) == 4u, "g does not have order 4");
  o.require(g == f.candidates.grouplikes[1], "sidecar generator differs from (e_0 + i e_1) x^3");
  const CertifySuite s = certify(f);
  for (const char* id : {"grouplikes_verified", "grouplike_count", "grouplike_completeness", "coradical_dim",
                         "coradical_span", "chevalley", "tr_s2_zero", "radical_dim", "wedderburn", "simple_profile"})
    require_claim(o, s, id);
  std::size_t copies = 0;
  for (const auto& c : s.claims)
    if (c.id.rfind("isomorphic:", 0) == 0) {
      ++copies;
      o.require(c.passed, c.id + " not isomorphic to " + c.expected);
    }
  o.require(copies == 3, "expected 3 copies U_{i+3}");
  const Claim* w = find_claim(s, "wedderburn");
  o.require(w && w->computed == "18", "Wedderburn sum " + (w ? w->computed : std::string("?")));
  return o;
}

Outcome criterion3() {
  Outcome o;
  const Family f = h8p(3, 1);
  const CertifySuite s = certify(f);
  require_claim(o, s, "dual_coradical_dim");
  require_claim(o, s, "dual_grouplike_count");
  const HopfAlgebra d = dual(f.algebra);
  const std::size_t c = coradical(d).dim();
  o.require(c == 18, "coradical of the dual has dim " + std::to_string(c));
  o.require(f.candidates.expected.at("dual_grouplike_count") == 6, "sidecar dual group-like count is not 6");
  return o;
}

Outcome criterion4() {
  Outcome o;
  const int p = 3;
  const std::vector<std::pair<std::string, Pointed4p>> fams = {
      {"A(-1,0)", Pointed4p::kA10}, {"A(-1,0)*", Pointed4p::kA10Dual}, {"A(-1,1)", Pointed4p::kA11}, {"H_4 x C_p", Pointed4p::kH4xCp}};
  for (const auto& [label, v] : fams) {
    const HopfAlgebra h = pointed4p(v, p).algebra;
    const Matrix s2 = h.antipode * h.antipode;
    const auto ord = antipode_order(h);
    o.require(ord && 4 % *ord == 0, label + ": ord(S) does not divide 4");
    o.require((s2 * s2).is_identity(), label + ": S^4 != id");
    o.require(!s2.is_identity(), label + ": S^2 = id");
  }
  // expected g, g, g^p
  const int expect_pow[3] = {1, 1, p};
  for (int i = 0; i < 3; ++i) {
    const Family f = pointed4p(fams[i].second, p);
    const Vec g = f.candidates.grouplikes[1];
    const Vec want = power(f.algebra, g, expect_pow[i]);
    const Vec got = distinguished_grouplike(f.algebra);
    o.require(got == want, fams[i].first + ": distinguished group-like is " + format_element(f.algebra, got) +
                               ", expected " + format_element(f.algebra, want));
  }
  const CertifySuite s = certify(pointed4p(Pointed4p::kA11, p));
  require_claim(o, s, "simple_profile");
  require_claim(o, s, "wedderburn");
  require_claim(o, s, "radical_dim");
  return o;
}

Outcome criterion5() {
  Outcome o;
  const int p = 3;
  std::vector<Family> fams = {a4p(p), b4p(p), fun_dic(p), build_family("dual-group", {.n = p, .p = p, .group = "dicyclic"}),
                              build_family("dual-group", {.n = 2 * p, .p = p, .group = "dihedral"})};
  for (const Family& f : fams) {
    const CycNumber tr = tr_s_squared(f.algebra);
    o.require(tr == CycNumber(f.algebra.conductor, static_cast<long>(f.algebra.dim)), f.name + ": Tr(S^2) = " + tr.str());
    o.require(jacobson_radical(f.algebra).dim() == 0, f.name + ": nonzero radical");
  }
  auto orders = [](const Family& f) {
    auto r = verify_grouplikes(f.algebra, f.candidates.grouplikes);
    return r.passed ? r.orders : std::vector<unsigned>{};
  };
  auto show = [](const std::vector<unsigned>& v) {
    std::string s;
    for (auto x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
    return "{" + s + "}";
  };
  for (const Family* f : {&fams[0], &fams[1]}) {
    const CertifySuite s = certify(f->name, "p=3", f->algebra, f->candidates);
    require_claim(o, s, "grouplike_completeness");
    require_claim(o, s, "grouplike_count");
  }
  const auto oa = orders(fams[0]), ob = orders(fams[1]);
  o.require(std::count(oa.begin(), oa.end(), 4u) > 0, "a4p group-like orders " + show(oa) + " contain no element of order 4");
  o.require(std::all_of(ob.begin(), ob.end(), [](unsigned x) { return x <= 2; }),
            "b4p group-like orders " + show(ob) + " are not all <= 2");
  return o;
}

Outcome criterion6() {
  Outcome o;
  FamilyParams fp;
  fp.p = 5;
  const Family f = build_family("gamma4p", fp);
  const CertifySuite s = certify(f);
  require_claim(o, s, "wedderburn");
  require_claim(o, s, "simple_profile");
  require_claim(o, s, "characters_independent");
  o.require(f.candidates.simples.size() == 5, "expected 5 simples");
  std::vector<RepModule> mods;
  for (const auto& m : f.candidates.simples) mods.push_back(expand_module(f.algebra, m));
  for (std::size_t i = 0; i < mods.size(); ++i)
    for (std::size_t j = i + 1; j < mods.size(); ++j)
      o.require(!are_isomorphic(mods[i], mods[j]), mods[i].label + " ~ " + mods[j].label);
  const auto wc = wedderburn_certificate(f.algebra, mods);
  o.require(wc.profile == std::vector<std::size_t>{1, 1, 1, 1, 4} && wc.sum_of_squares == 20, "profile or sum wrong");
  return o;
}

Outcome criterion7() {
  Outcome o;
  const int p = 5;
  std::size_t n = 0;
  auto run = [&](const YDModule& m) {
    ++n;
    const auto r = verify_yd(m);
    o.require(r.passed, r.detail);
    if (r.passed) o.require(braid_equation_check(braiding(m), m.dim), m.label + ": braid equation fails");
  };
  for (int s = 0; s < 4; ++s) run(yd_module_gamma4p(p, GammaClass::kY, 1, s));
  for (int m = 1; m < 4; ++m)
    for (int k = 0; k < 4; ++k) run(yd_module_gamma4p(p, GammaClass::kX, m, k));
  for (int i = 0; i < 5; ++i) run(yd_module_gamma4p(p, GammaClass::kTrivial, 0, i));
  const auto m = yd_module_gamma4p(p, GammaClass::kY, 1, 1);
  const auto dt = diagonal_type(braiding(m), m.dim);
  o.require(dt.has_value(), "M(O_y, psi_1) is not diagonal");
  if (dt) {
    const CycNumber z5 = embed(CycNumber::root_of_unity(5, 1), (*dt)[0][0].conductor());
    for (int r = 0; r < 4; ++r)
      for (int t = 0; t < 4; ++t)
        o.require((*dt)[r][t] == z5.pow((1 << (r + 4 - t)) % 5),
                  "q_" + std::to_string(r) + std::to_string(t) + " = " + (*dt)[r][t].str());
  }
  o.notes.insert(o.notes.begin(), std::to_string(n) + " modules");
  return o;
}

Outcome criterion8() {
  Outcome o;
  const int p = 3;
  for (const YDDatum& d : {fun_dic_datum(p), a4p_datum(p, A4pDatum::kChi2OnU), a4p_datum(p, A4pDatum::kChi3OnUa)}) {
    const auto r = validate_yd_datum(d);
    o.require(r.passed, r.detail);
  }
  for (int q : {3, 5}) {
    const auto flip = yd_datum_conditions(fun_dic_datum(q, true));
    std::string why;
    for (const auto& w : flip.failures) why += (why.empty() ? "" : "; ") + w;
    o.require(!flip.commutation, "flipped datum (p=" + std::to_string(q) + ") passes the commutation check; it fails only: " + why);
  }
  return o;
}

Outcome criterion9() {
  Outcome o;
  o.require(same_tensors(bosonize(fun_dic_datum(3)), h8p(3, 0).algebra), "R_-1 # k^Dic_3 differs from H_8p(0)");
  const YDDatum d = a4p_datum(3, A4pDatum::kChi2);
  const HopfAlgebra b = bosonize(d);
  o.require(b.dim == 24, "dim " + std::to_string(b.dim));
  o.require(tr_s_squared(b).is_zero(), "Tr(S^2) != 0");
  o.require(coradical(b).dim() == 12, "coradical dim " + std::to_string(coradical(b).dim()));
  o.require(chevalley_check(b).holds, "Chevalley fails");
  o.require(same_tensors(bosonize(cyclic_datum(2, 1)), taft(2).algebra), "R_-1 # kC_2 differs from T_-1");
  return o;
}

Outcome criterion10() {
  Outcome o;
  const YDDatum d = a4p_datum(3, A4pDatum::kChi2);
  const HopfAlgebra b = bosonize(d);
  const Subspace co = coinvariants(b, d.algebra, bosonization_projection(d));
  o.require(co.dim() == 2, "dim " + std::to_string(co.dim()));
  const Subspace sp = skew_primitive_space(b, b.unit, d.g);
  bool found = false;
  for (const auto& v : co.basis()) found |= sp.contains(v) && !Subspace::span(b.dim, b.conductor, {b.unit}).contains(v);
  o.require(found && has_nontrivial_skew_primitive(b, sp, b.unit, d.g), "no nontrivial skew-primitive in the basis");
  return o;
}

Outcome criterion11() {
  Outcome o;
  auto scalar = [](const CycNumber& q) {
    Matrix c(1, 1, q.conductor());
    c(0, 0) = q;
    return c;
  };
  const auto m1 = nichols_dims(scalar(CycNumber(1, -1L)), 1, 8);
  o.require(m1.truncated && m1.total_dim == 2, "c = -1: " + m1.note);
  for (int N : {2, 3, 4, 6}) {
    const auto r = nichols_dims(scalar(CycNumber::root_of_unity(N, 1)), 1, 8);
    o.require(r.truncated && r.total_dim == static_cast<std::size_t>(N), "N = " + std::to_string(N) + ": " + r.note);
  }
  const auto one = nichols_dims(scalar(CycNumber(1, 1L)), 1, 8);
  o.require(!one.truncated && one.ranks.size() == 9, "c = 1: " + one.note);
  return o;
}

Outcome criterion12() {
  Outcome o;
  std::size_t count = 0;
  for (int p : {3, 5})
    for (const auto& [name, fp] : catalog(p)) {
      const Family f = build_family(name, fp);
      ++count;
      const CertifySuite s = certify(f.name, describe_params(name, fp), f.algebra, f.candidates);
      for (const char* id : {"coradical_plus_dual_radical", "dual_involution", "semisimplicity_routes_agree", "nichols_zoeller"})
        require_claim(o, s, id);
    }
  o.notes.insert(o.notes.begin(), std::to_string(count) + " algebras");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"axiom suite over the catalog at p = 3, 5", criterion1},
      {"H_8p (p=3): group-likes, coradical, radical, simples", criterion2},
      {"H_8p* (p=3): coradical 18, six group-likes", criterion3},
      {"pointed 4p family: antipode, distinguished group-likes, A(-1,1) simples", criterion4},
      {"semisimple 4p catalog: Tr(S^2), radical, group-like types", criterion5},
      {"Gamma_20: five simples {1,1,1,1,4}", criterion6},
      {"YD modules over Gamma_20 and the diagonal braiding", criterion7},
      {"YD data and the flipped datum", criterion8},
      {"bosonizations", criterion9},
      {"coinvariants of the bosonization projection", criterion10},
      {"Nichols algebras of rank one", criterion11},
      {"cross-consistency over the catalog", criterion12},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.passed = false;
      o.notes = {std::string("exception: ") + e.what()};
    }
    if (!o.passed) ++failed;
    std::cout << (o.passed ? "PASS" : "FAIL") << "  criterion " << (i + 1) << ": " << criteria[i].first;
    for (const auto& n : o.notes) std::cout << "\n        " << n;
    std::cout << std::endl;
  }
  std::cout << (criteria.size() - failed) << " of " << criteria.size() << " criteria pass\n";
  return failed ? 1 : 0;
}
