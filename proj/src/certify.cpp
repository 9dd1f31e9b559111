#include "hopfkit/certify.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "hopfkit/errors.hpp"

namespace hopfkit {

namespace {

std::string str(std::size_t n) { return std::to_string(n); }
std::string str(bool b) { return b ? "true" : "false"; }

std::string join(const std::vector<std::size_t>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

std::optional<unsigned> order_of_square(const Matrix& s, std::size_t dim) {
  return operator_order(s * s, static_cast<unsigned>(16 * dim));
}

}  // namespace

InvariantReport compute_invariants(const HopfAlgebra& h, const CandidateData* candidates) {
  InvariantReport r;
  r.dim = h.dim;
  r.radical_dim = jacobson_radical(h).dim();
  for (const auto& s : coradical_filtration(h)) r.filtration_dims.push_back(s.dim());
  r.coradical_dim = r.filtration_dims.front();
  const Integrals ints = integrals(h);
  r.integral_left = ints.left.basis().front();
  r.integral_right = ints.right.basis().front();
  r.distinguished = distinguished_grouplike(h);
  r.tr_s2 = tr_s_squared(h);
  r.semisimple = !r.tr_s2.is_zero();
  r.cosemisimple = r.coradical_dim == h.dim;
  const auto ch = chevalley_check(h);
  r.chevalley = ch.holds;
  r.chevalley_witness = ch.witness;
  r.antipode_order = antipode_order(h);
  r.antipode_square_order = order_of_square(h.antipode, h.dim);
  if (candidates) {
    const auto gl = verify_grouplikes(h, candidates->grouplikes);
    if (gl.passed) {
      r.grouplike_count = candidates->grouplikes.size();
      r.grouplike_orders = gl.orders;
      for (std::size_t i = 1; i < candidates->grouplikes.size(); ++i) {
        const Vec& g = candidates->grouplikes[i];
        for (auto o : {SkewOrientation::kXg, SkewOrientation::kGx}) {
          const Subspace p = skew_primitive_space(h, h.unit, g, o);
          r.skew_primitive_dims.push_back(
              {"(1," + format_element(h, g) + ")", o, p.dim(), has_nontrivial_skew_primitive(h, p, h.unit, g)});
        }
      }
    }
  }
  return r;
}

Json to_json(const HopfAlgebra& h, const InvariantReport& r) {
  Json j;
  j["dim"] = r.dim;
  j["radical_dim"] = r.radical_dim;
  j["coradical_dim"] = r.coradical_dim;
  j["filtration_dims"] = r.filtration_dims;
  j["grouplike_count"] = r.grouplike_count ? Json(*r.grouplike_count) : Json(nullptr);
  j["grouplike_orders"] = r.grouplike_orders;
  Json sk = Json::array();
  for (const auto& s : r.skew_primitive_dims)
    sk.push_back(Json{{"pair", s.pair},
                      {"orientation", s.orientation == SkewOrientation::kXg ? "x(x)g+h(x)x" : "g(x)x+x(x)h"},
                      {"dim", s.dim},
                      {"nontrivial", s.nontrivial}});
  j["skew_primitive_dims"] = sk;
  j["integral_left"] = format_element(h, r.integral_left);
  j["integral_right"] = format_element(h, r.integral_right);
  j["distinguished_grouplike"] = format_element(h, r.distinguished);
  j["tr_s2"] = to_json(r.tr_s2);
  j["semisimple"] = r.semisimple;
  j["cosemisimple"] = r.cosemisimple;
  j["chevalley"] = r.chevalley;
  j["chevalley_witness"] = r.chevalley_witness;
  j["antipode_order"] = r.antipode_order ? Json(*r.antipode_order) : Json("exceeds bound");
  j["antipode_square_order"] = r.antipode_square_order ? Json(*r.antipode_square_order) : Json("exceeds bound");
  return j;
}

bool CertifySuite::passed() const {
  return std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return c.passed; });
}

std::string describe_params(const std::string& family, const FamilyParams& p) {
  std::ostringstream s;
  if (family == "c_n" || family == "dihedral" || family == "dicyclic") s << "n=" << p.n;
  else if (family == "product") {
    s << "orders=";
    for (std::size_t i = 0; i < p.orders.size(); ++i) s << (i ? "," : "") << p.orders[i];
  } else if (family == "taft") s << "N=" << p.N << " k=" << p.k;
  else if (family == "dual-group") {
    s << "group=" << p.group;
    if (p.group == "gamma4p") s << " p=" << p.p;
    else if (p.group == "product") {
      s << " orders=";
      for (std::size_t i = 0; i < p.orders.size(); ++i) s << (i ? "," : "") << p.orders[i];
    } else if (p.group != "q8") s << " n=" << p.n;
  } else if (family == "h8p") s << "p=" << p.p << " alpha=" << p.alpha;
  else if (family == "a-m10-dual") s << "p=" << p.p << " k=" << p.k;
  else if (family == "q8" || family == "b8") s << "-";
  else s << "p=" << p.p;
  return s.str();
}

CertifySuite certify(const std::string& family, const std::string& params, const HopfAlgebra& h,
                     const CandidateData& c) {
  CertifySuite suite{family, params, {}};
  auto add = [&](std::string id, std::string expected, std::string computed, bool ok, std::string detail = "") {
    suite.claims.push_back({std::move(id), std::move(expected), std::move(computed), ok, std::move(detail)});
  };
  auto expect_num = [&](const std::string& key, std::size_t computed, const std::string& detail = "") {
    auto it = c.expected.find(key);
    if (it == c.expected.end()) return;
    add(key, std::to_string(it->second), str(computed), it->second == static_cast<long>(computed), detail);
  };
  auto expect_flag = [&](const std::string& key, bool computed, const std::string& detail = "") {
    auto it = c.flags.find(key);
    if (it == c.flags.end()) return;
    add(key, str(it->second), str(computed), it->second == computed, detail);
  };

  const AxiomReport ax = verify_hopf(h);
  add("hopf_axioms", "pass", ax.passed() ? "pass" : "fail", ax.passed(), ax.first_failure());
  if (!ax.passed()) return suite;
  expect_num("dim", h.dim);

  const HopfAlgebra d = dual(h);
  add("dual_involution", "dual(dual(H)) = H", dual(d) == h ? "equal" : "differs", dual(d) == h);

  // radicals and coradicals, each computed independently on both sides
  const Subspace J = jacobson_radical(h);
  const Subspace Jd = jacobson_radical(d);
  const Subspace H0 = coradical(h);
  const Subspace H0d = coradical(d);
  expect_num("radical_dim", J.dim());
  expect_num("coradical_dim", H0.dim());
  expect_num("dual_coradical_dim", H0d.dim());
  add("coradical_plus_dual_radical", str(h.dim), str(H0.dim() + Jd.dim()), H0.dim() + Jd.dim() == h.dim);
  add("dual_coradical_plus_radical", str(h.dim), str(H0d.dim() + J.dim()), H0d.dim() + J.dim() == h.dim);
  if (!c.coradical_span.empty()) {
    const Subspace span = Subspace::span(h.dim, h.conductor, c.coradical_span);
    add("coradical_span", "H_0 = claimed span", span == H0 ? "equal" : "differs", span == H0,
        "claimed span dim " + str(span.dim()));
  }

  const CycNumber tr = tr_s_squared(h);
  expect_flag("tr_s2_zero", tr.is_zero(), "Tr(S^2) = " + tr.str());
  const auto filt_d = coradical_filtration(d);
  const bool routes = (!tr.is_zero()) == (J.dim() == 0) && (J.dim() == 0) == (filt_d.size() == 1);
  add("semisimplicity_routes_agree", "agree", routes ? "agree" : "disagree", routes,
      "Tr(S^2) " + std::string(tr.is_zero() ? "= 0" : "!= 0") + ", dim J = " + str(J.dim()) +
          ", dual filtration length " + str(filt_d.size()));

  const auto ch = chevalley_check(h, H0);
  expect_flag("chevalley", ch.holds, ch.witness);
  expect_flag("commutative", is_commutative(h));
  const Matrix s2 = h.antipode * h.antipode;
  expect_flag("s2_identity", s2.is_identity());
  expect_flag("s4_identity", (s2 * s2).is_identity());

  // group-likes and their completeness against the coradical
  const auto gl = verify_grouplikes(h, c.grouplikes);
  add("grouplikes_verified", "pass", gl.passed ? "pass" : "fail", gl.passed, gl.detail);
  if (gl.passed) {
    expect_num("grouplike_count", c.grouplikes.size());
    std::ostringstream orders;
    for (std::size_t i = 0; i < gl.orders.size(); ++i) orders << (i ? "," : "") << gl.orders[i];
    const unsigned maxo = gl.orders.empty() ? 0 : *std::max_element(gl.orders.begin(), gl.orders.end());
    expect_num("max_grouplike_order", maxo, "orders " + orders.str());
    add("nichols_zoeller", "|G| divides dim", str(c.grouplikes.size()) + " | " + str(h.dim), h.dim % c.grouplikes.size() == 0);

    std::vector<RepModule> dual_mods;
    bool blocks_ok = true;
    std::string block_detail;
    for (std::size_t i = 0; i < c.grouplikes.size(); ++i)
      dual_mods.push_back(dual_module_from_matrix(h, "G" + str(i), {{c.grouplikes[i]}}));
    std::size_t block_sq = 0;
    for (const auto& b : c.coradical_blocks) {
      if (!is_multiplicative_matrix(h, b.entries)) {
        blocks_ok = false;
        block_detail = b.label + " is not a multiplicative matrix";
        break;
      }
      dual_mods.push_back(dual_module_from_matrix(h, b.label, b.entries));
      block_sq += b.entries.size() * b.entries.size();
    }
    if (blocks_ok) {
      const auto wc = wedderburn_certificate(d, dual_mods, Jd.dim());
      const bool ok = wc.passed && c.grouplikes.size() + block_sq == H0.dim();
      add("grouplike_completeness", str(H0.dim()) + " = |G| + sum d^2",
          str(c.grouplikes.size()) + " + " + str(block_sq), ok, wc.detail);
    } else {
      add("grouplike_completeness", str(H0.dim()), "blocks rejected", false, block_detail);
    }

    const Vec a = distinguished_grouplike(h);
    const bool in_g = std::find(c.grouplikes.begin(), c.grouplikes.end(), a) != c.grouplikes.end();
    add("distinguished_in_G", "a in G(H)", format_element(h, a), in_g);
    if (c.distinguished)
      add("distinguished_grouplike", format_element(h, *c.distinguished), format_element(h, a), a == *c.distinguished);
  }

  if (c.skew) {
    const Subspace p = skew_primitive_space(h, c.skew->g, c.skew->h, c.skew->orientation);
    const bool member = p.contains(c.skew->x);
    const bool nontrivial = has_nontrivial_skew_primitive(h, p, c.skew->g, c.skew->h);
    add("skew_primitive", "nontrivial, contains witness", "dim " + str(p.dim()), member && nontrivial,
        "witness " + format_element(h, c.skew->x) + (member ? " lies in" : " is not in") + " the space");
  }

  // simple modules
  if (!c.simples.empty()) {
    std::vector<RepModule> mods;
    std::string err;
    for (const auto& spec : c.simples) {
      try {
        mods.push_back(expand_module(h, spec));
      } catch (const Error& e) {
        err = e.what();
        break;
      }
    }
    if (!err.empty()) {
      add("wedderburn", "pass", "fail", false, err);
    } else {
      const auto wc = wedderburn_certificate(h, mods, J.dim());
      add("wedderburn", str(h.dim - J.dim()) + " = sum m_i^2", str(wc.sum_of_squares), wc.passed, wc.detail);
      if (!c.profile.empty()) add("simple_profile", join(c.profile), join(wc.profile), wc.profile == c.profile);
      std::vector<Vec> chars;
      for (const auto& m : mods) chars.push_back(character(m));
      const std::size_t rk = rank(Matrix::from_rows(chars, h.dim, h.conductor));
      add("characters_independent", str(mods.size()), str(rk), rk == mods.size());
      std::size_t dual_g = 0;
      bool all_g = true;
      for (const auto& m : mods) {
        if (m.dim != 1) continue;
        Vec chi(h.dim);
        for (std::size_t i = 0; i < h.dim; ++i) chi[i] = m.action[i](0, 0);
        if (is_grouplike(d, chi)) ++dual_g;
        else all_g = false;
      }
      if (all_g) expect_num("dual_grouplike_count", dual_g);
      else add("dual_grouplike_count", "all one-dimensional simples group-like in H*", "some are not", false);
      for (const auto& cp : c.isomorphic_copies) {
        bool ok = false;
        std::string detail;
        try {
          const RepModule m = expand_module(h, cp.module);
          const auto vm = verify_module(h, m);
          ok = vm.passed && cp.partner < mods.size() && are_isomorphic(m, mods[cp.partner]);
          detail = vm.detail;
        } catch (const Error& e) {
          detail = e.what();
        }
        add("isomorphic:" + cp.module.label, cp.partner < c.simples.size() ? c.simples[cp.partner].label : "?",
            ok ? "isomorphic" : "not isomorphic", ok, detail);
      }
    }
  }
  return suite;
}

namespace {

void add_datum_claim(CertifySuite& suite, const YDDatum& d) {
  const auto r = validate_yd_datum(d);
  suite.claims.push_back({"yd_datum:" + d.label, "valid", r.passed ? "valid" : "invalid", r.passed, r.detail});
}

void add_bosonization_claims(CertifySuite& suite, const YDDatum& d, const std::string& tag) {
  if (!validate_yd_datum(d).passed) return;
  const HopfAlgebra b = bosonize(d);
  const std::size_t n = d.algebra.dim;
  const auto N = *root_order(d.q);
  const CycNumber tr = tr_s_squared(b);
  const Subspace h0 = coradical(b);
  const bool chev = chevalley_check(b, h0).holds;
  auto add = [&](std::string id, std::string e, std::string c, bool ok, std::string detail = "") {
    suite.claims.push_back({tag + ":" + id, std::move(e), std::move(c), ok, std::move(detail)});
  };
  add("dim", str(N * n), str(b.dim), b.dim == N * n);
  add("tr_s2_zero", "true", str(tr.is_zero()), tr.is_zero());
  add("coradical_dim", str(n), str(h0.dim()), h0.dim() == n);
  add("chevalley", "true", str(chev), chev);
  const Subspace co = coinvariants(b, d.algebra, bosonization_projection(d));
  bool skew = false;
  for (const auto& v : co.basis()) {
    const Subspace p = skew_primitive_space(b, b.unit, d.g, SkewOrientation::kXg);
    if (p.contains(v) && has_nontrivial_skew_primitive(b, p, b.unit, d.g)) skew = true;
  }
  add("coinvariants", "dim 2 with a skew-primitive", "dim " + str(co.dim()), co.dim() == 2 && skew);
}

}  // namespace

CertifySuite certify(const Family& f) {
  CertifySuite suite = certify(f.name, describe_params(f.name, f.params), f.algebra, f.candidates);
  const FamilyParams& p = f.params;
  if (f.name == "fun-dic") {
    const YDDatum d = fun_dic_datum(p.p);
    add_datum_claim(suite, d);
    if (validate_yd_datum(d).passed) {
      const bool same = same_tensors(bosonize(d), h8p(p.p, 0).algebra);
      suite.claims.push_back({"bosonization_is_h8p(0)", "tensor-identical", same ? "identical" : "differs", same, ""});
    }
    const auto flip = yd_datum_conditions(fun_dic_datum(p.p, true));
    std::string why;
    for (const auto& w : flip.failures) why += (why.empty() ? "" : "; ") + w;
    suite.claims.push_back({"flipped_datum_rejected", "rejected", flip.passed() ? "accepted" : "rejected",
                            !flip.passed(), why});
  } else if (f.name == "a4p") {
    for (auto w : {A4pDatum::kChi2, A4pDatum::kChi3, A4pDatum::kChi2OnU, A4pDatum::kChi3OnUa})
      add_datum_claim(suite, a4p_datum(p.p, w));
    add_bosonization_claims(suite, a4p_datum(p.p, A4pDatum::kChi2), "bosonization");
  } else if (f.name == "taft") {
    const YDDatum d = cyclic_datum(p.N, p.k);
    add_datum_claim(suite, d);
    if (validate_yd_datum(d).passed) {
      const bool same = same_tensors(bosonize(d), f.algebra);
      suite.claims.push_back({"bosonization_of_C_N", "tensor-identical", same ? "identical" : "differs", same, ""});
    }
  } else if (f.name == "gamma4p") {
    std::size_t total = 0, good = 0;
    std::string first;
    auto run = [&](const YDModule& m) {
      ++total;
      const auto r = verify_yd(m);
      const bool ok = r.passed && braid_equation_check(braiding(m), m.dim);
      if (ok) ++good;
      else if (first.empty()) first = r.passed ? m.label + ": braid equation fails" : r.detail;
    };
    const int l = (p.p - 1) / 2;
    std::vector<int> ys;
    for (int k = 1, seen = 0; k < p.p && seen < (p.p - 1) / 4; ++k) {
      // one k per orbit {k l^j}
      bool fresh = true;
      for (int y : ys)
        for (int j = 0, t = y; j < 4; ++j, t = static_cast<int>(mod(static_cast<long>(t) * l, p.p))) fresh &= t != k;
      if (fresh) {
        ys.push_back(k);
        ++seen;
      }
    }
    for (int k : ys)
      for (int s = 0; s < 4; ++s) run(yd_module_gamma4p(p.p, GammaClass::kY, k, s));
    for (int m = 1; m < 4; ++m)
      for (int k = 0; k < 4; ++k) run(yd_module_gamma4p(p.p, GammaClass::kX, m, k));
    const auto irr = gamma4p_irreps(gamma4p_group(p.p), p.p);
    for (std::size_t i = 0; i < irr.size(); ++i) run(yd_module_gamma4p(p.p, GammaClass::kTrivial, 0, static_cast<int>(i)));
    suite.claims.push_back({"yd_modules", str(total) + " pass YD axiom and braid equation", str(good), good == total, first});
  }
  return suite;
}

Json to_json(const CertifySuite& s) {
  Json claims = Json::array();
  for (const auto& c : s.claims)
    claims.push_back(Json{{"id", c.id}, {"expected", c.expected}, {"computed", c.computed}, {"passed", c.passed}, {"detail", c.detail}});
  return Json{{"family", s.family}, {"params", s.params}, {"passed", s.passed()}, {"claims", claims}};
}

std::string format_table(const CertifySuite& s) {
  std::ostringstream o;
  o << s.family << " (" << s.params << ")\n";
  std::size_t w = 5;
  for (const auto& c : s.claims) w = std::max(w, c.id.size());
  for (const auto& c : s.claims) {
    o << "  " << (c.passed ? "PASS " : "FAIL ") << std::left << std::setw(static_cast<int>(w)) << c.id
      << "  expected " << c.expected << ", computed " << c.computed;
    if (!c.passed && !c.detail.empty()) o << "  [" << c.detail << "]";
    o << "\n";
  }
  o << (s.passed() ? "all claims pass" : "some claims FAIL") << "\n";
  return o.str();
}

}  // namespace hopfkit
