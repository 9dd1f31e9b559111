#include "hopfkit/catalog.hpp"

#include <algorithm>
#include <numeric>

#include "hopfkit/errors.hpp"

namespace hopfkit {

namespace {

CycNumber num(int cond, long v) { return CycNumber(cond, v); }
CycNumber zeta(int cond, int n, long k) { return CycNumber::root_of_unity(cond, mod(k, n) * (cond / n)); }

Matrix scalar(int cond, const CycNumber& c) { return Matrix::from_rows({{c}}, 1, cond); }

Matrix mat2(int cond, const CycNumber& a, const CycNumber& b, const CycNumber& c, const CycNumber& d) {
  return Matrix::from_rows({{a, b}, {c, d}}, 2, cond);
}

void require_prime(int p, bool odd, const std::string& what) {
  if (!is_prime(p) || (odd && p == 2)) throw InvalidParameter(what + " needs an odd prime p, got " + std::to_string(p));
}

std::vector<std::size_t> sorted_dims(const std::vector<ModuleSpec>& mods) {
  std::vector<std::size_t> d;
  for (const auto& m : mods) d.push_back(m.dim);
  std::sort(d.begin(), d.end());
  return d;
}

void fill_standard(CandidateData& c, std::size_t dim, std::size_t radical) {
  c.profile = sorted_dims(c.simples);
  c.expected["dim"] = static_cast<long>(dim);
  c.expected["grouplike_count"] = static_cast<long>(c.grouplikes.size());
  c.expected["radical_dim"] = static_cast<long>(radical);
  c.expected["dual_coradical_dim"] = static_cast<long>(dim - radical);
  c.expected["dual_grouplike_count"] = static_cast<long>(std::count(c.profile.begin(), c.profile.end(), 1u));
  c.flags["tr_s2_zero"] = radical != 0;
}

Vec element(NormalForm& nf, const WordComb& w) { return nf.reduce(w); }

// Small DSL over a presentation under construction.
struct Builder {
  Presentation p;

  Builder(std::string name, int conductor, std::vector<std::string> gens) {
    p.name = std::move(name);
    p.conductor = conductor;
    p.generators = std::move(gens);
    p.images.resize(p.generators.size());
  }
  CycNumber c(long v) const { return num(p.conductor, v); }
  CycNumber c(const Rational& v) const { return CycNumber(p.conductor, v); }
  WordComb w(const Word& x) const { return word(p, x); }
  WordComb w(const Word& x, const CycNumber& k) const { return word(p, x, k); }
  WordComb one() const { return word(p, {}); }
  WordComb zero() const { return {}; }
  void rule(const Word& lhs, const WordComb& rhs) { p.rules.push_back({lhs, rhs}); }
  void image(int gen, std::vector<TensorTerm> delta, long eps, WordComb s) {
    p.images[gen] = GeneratorImage{std::move(delta), c(eps), std::move(s)};
  }
};

Word cat(std::initializer_list<Word> parts) {
  Word out;
  for (const auto& w : parts) out.insert(out.end(), w.begin(), w.end());
  return out;
}

HopfAlgebra group_hopf(const FiniteGroup& g) {
  const std::size_t n = g.order();
  const int cond = g.conductor;
  HopfAlgebra h;
  h.dim = n;
  h.conductor = cond;
  h.labels = g.labels;
  h.mult.assign(n * n, {});
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) h.mult[a * n + b] = {{g.mul(a, b), num(cond, 1)}};
  h.unit = unit_vec(n, g.identity, cond);
  h.counit.assign(n, num(cond, 1));
  h.comult.assign(n, {});
  h.antipode = Matrix(n, n, cond);
  for (std::size_t a = 0; a < n; ++a) {
    h.comult[a].push_back({a, a, num(cond, 1)});
    h.antipode(g.inv[a], a) = num(cond, 1);
  }
  normalize(h);
  return h;
}

ModuleSpec group_module(const FiniteGroup& g, const GroupRep& r) {
  ModuleSpec m{r.label, r.dim, {}};
  for (std::size_t i = 0; i < g.generators.size(); ++i) m.generators.emplace_back(g.labels[g.generators[i]], r.generator_images[i]);
  return m;
}

bool is_abelian(const FiniteGroup& g) {
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b)
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

std::vector<Vec> powers_of(const HopfAlgebra& h, const Vec& g, unsigned n) {
  std::vector<Vec> out{h.unit};
  for (unsigned i = 1; i < n; ++i) out.push_back(multiply(h, out.back(), g));
  return out;
}

}  // namespace

std::pair<FiniteGroup, std::vector<GroupRep>> named_group(const std::string& name, const FamilyParams& params) {
  if (name == "c_n") {
    if (params.n < 1) throw InvalidParameter("c_n needs n >= 1");
    FiniteGroup g = cyclic_group(params.n);
    return {g, cyclic_irreps(g, {params.n})};
  }
  if (name == "product") {
    if (params.orders.empty()) throw InvalidParameter("product needs at least one cyclic order");
    for (int o : params.orders)
      if (o < 1) throw InvalidParameter("cyclic orders must be positive");
    FiniteGroup g = product_of_cyclics(params.orders);
    return {g, cyclic_irreps(g, params.orders)};
  }
  if (name == "dihedral") {
    if (params.n < 3) throw InvalidParameter("dihedral needs n >= 3");
    FiniteGroup g = dihedral_group(params.n);
    return {g, dihedral_irreps(g, params.n)};
  }
  if (name == "dicyclic") {
    if (params.n < 2) throw InvalidParameter("dicyclic needs n >= 2");
    FiniteGroup g = dicyclic_group(params.n);
    return {g, dicyclic_irreps(g, params.n)};
  }
  if (name == "q8") {
    FiniteGroup g = quaternion_group();
    return {g, quaternion_irreps(g)};
  }
  if (name == "gamma4p") {
    FiniteGroup g = gamma4p_group(params.p);
    return {g, gamma4p_irreps(g, params.p)};
  }
  throw InvalidParameter("unknown group '" + name + "'");
}

Family group_algebra_family(const FiniteGroup& g, const std::vector<GroupRep>& irreps) {
  Family f;
  f.name = "k" + g.name;
  f.algebra = group_hopf(g);
  const std::size_t n = g.order();
  CandidateData& c = f.candidates;
  for (std::size_t i = 0; i < n; ++i) c.grouplikes.push_back(basis_element(f.algebra, i));
  for (const auto& r : irreps) c.simples.push_back(group_module(g, r));
  c.coradical_span = c.grouplikes;
  c.distinguished = f.algebra.unit;
  fill_standard(c, n, 0);
  c.expected["coradical_dim"] = static_cast<long>(n);
  c.flags["chevalley"] = true;
  c.flags["commutative"] = is_abelian(g);
  return f;
}

Family dual_group_family(const FiniteGroup& g, const std::vector<GroupRep>& irreps) {
  Family f;
  f.name = "k^" + g.name;
  f.algebra = dual(group_hopf(g));
  const HopfAlgebra& h = f.algebra;
  const std::size_t n = g.order();
  const int cond = h.conductor;
  CandidateData& c = f.candidates;
  for (const auto& r : irreps) {
    auto rho = expand_rep(g, r);
    if (r.dim == 1) {
      Vec v = zero_vec(n, cond);
      for (std::size_t e = 0; e < n; ++e) v[e] = rho[e](0, 0);
      c.grouplikes.push_back(v);
      continue;
    }
    CoradicalBlock b{r.label, std::vector<std::vector<Vec>>(r.dim, std::vector<Vec>(r.dim, zero_vec(n, cond)))};
    for (std::size_t i = 0; i < r.dim; ++i)
      for (std::size_t j = 0; j < r.dim; ++j)
        for (std::size_t e = 0; e < n; ++e) b.entries[i][j][e] = rho[e](i, j);
    c.coradical_blocks.push_back(std::move(b));
  }
  for (std::size_t a = 0; a < n; ++a) {
    ModuleSpec m{"ev_" + g.labels[a], 1, {}};
    for (std::size_t b = 0; b < n; ++b) m.generators.emplace_back(h.labels[b], scalar(cond, num(cond, a == b ? 1 : 0)));
    c.simples.push_back(std::move(m));
  }
  for (std::size_t i = 0; i < n; ++i) c.coradical_span.push_back(basis_element(h, i));
  c.distinguished = h.unit;
  fill_standard(c, n, 0);
  c.expected["coradical_dim"] = static_cast<long>(n);
  c.flags["chevalley"] = true;
  c.flags["commutative"] = true;
  return f;
}

Family taft(int N, int k, const std::string& g_name, const std::string& x_name) {
  if (N < 2) throw InvalidParameter("taft needs N >= 2");
  if (std::gcd(k, N) != 1) throw InvalidParameter("taft needs q = z_N^k primitive, gcd(k, N) = 1");
  Builder b("taft(" + std::to_string(N) + ")", N, {g_name, x_name});
  const int G = 0, X = 1;
  const CycNumber q = zeta(N, N, k);
  for (int j = 0; j < N; ++j)
    for (int i = 0; i < N; ++i) b.p.normal_monomials.push_back(cat({letter_power(X, j), letter_power(G, i)}));
  b.rule({G, X}, b.w({X, G}, q));
  b.rule(letter_power(G, N), b.one());
  b.rule(letter_power(X, N), b.zero());
  b.image(G, {{b.w({G}), b.w({G})}}, 1, b.w(letter_power(G, N - 1)));
  b.image(X, {{b.w({X}), b.one()}, {b.w({G}), b.w({X})}}, 0, b.w(cat({letter_power(G, N - 1), {X}}), b.c(-1)));

  Family f;
  f.name = "taft";
  f.params.N = N;
  f.params.k = k;
  f.algebra = realize(b.p);
  f.presentation = b.p;
  NormalForm nf(*f.presentation);
  CandidateData& c = f.candidates;
  for (int i = 0; i < N; ++i) c.grouplikes.push_back(element(nf, b.w(letter_power(G, i))));
  c.skew = SkewWitness{f.algebra.unit, element(nf, b.w({G})), element(nf, b.w({X})), SkewOrientation::kXg};
  for (int s = 0; s < N; ++s)
    c.simples.push_back({"S_" + std::to_string(s), 1, {{g_name, scalar(N, zeta(N, N, s))}, {x_name, scalar(N, num(N, 0))}}});
  c.coradical_span = c.grouplikes;
  fill_standard(c, static_cast<std::size_t>(N * N), static_cast<std::size_t>(N * N - N));
  c.expected["coradical_dim"] = N;
  c.flags["chevalley"] = true;
  return f;
}

Family pointed4p(Pointed4p variant, int p, int lambda_k) {
  require_prime(p, true, "pointed4p");
  const int cond = 2 * p;
  Family f;
  f.params.p = p;
  f.params.k = lambda_k;
  CandidateData& c = f.candidates;

  if (variant == Pointed4p::kH4xCp) {
    f.name = "h4xcp";
    HopfAlgebra h4 = taft(2, 1, "h", "x").algebra;
    f.algebra = tensor_product(h4, group_hopf(cyclic_group(p)));
    const HopfAlgebra& h = f.algebra;
    for (std::size_t e = 0; e < 2; ++e)
      for (int j = 0; j < p; ++j) c.grouplikes.push_back(basis_element(h, e * p + j));
    c.skew = SkewWitness{h.unit, basis_element(h, "h"), basis_element(h, "x"), SkewOrientation::kXg};
    for (int e = 0; e < 2; ++e)
      for (int j = 0; j < p; ++j)
        c.simples.push_back({"S_" + std::to_string(e) + "," + std::to_string(j), 1,
                             {{"h", scalar(cond, num(cond, e ? -1 : 1))},
                              {"g", scalar(cond, zeta(cond, p, j))},
                              {"x", scalar(cond, num(cond, 0))}}});
    c.coradical_span = c.grouplikes;
    fill_standard(c, 4 * p, 2 * p);
    c.expected["coradical_dim"] = 2 * p;
    c.flags["chevalley"] = true;
    c.flags["s4_identity"] = true;
    c.flags["s2_identity"] = false;
    return f;
  }

  if (variant == Pointed4p::kA10Dual && std::gcd(lambda_k, cond) != 1)
    throw InvalidParameter("lambda = z_2p^k needs gcd(k, 2p) = 1");
  static const char* names[] = {"a-m10", "a-m10-dual", "a-m11"};
  f.name = names[static_cast<int>(variant)];
  Builder b(f.name + "(p=" + std::to_string(p) + ")", cond, {"g", "x"});
  const int G = 0, X = 1;
  for (int i = 0; i < 2 * p; ++i)
    for (int e = 0; e < 2; ++e) b.p.normal_monomials.push_back(cat({letter_power(G, i), letter_power(X, e)}));
  b.rule(letter_power(G, 2 * p), b.one());
  const CycNumber swap = variant == Pointed4p::kA10Dual ? zeta(cond, cond, -lambda_k) : b.c(-1);
  b.rule({X, G}, b.w({G, X}, swap));
  b.rule({X, X}, variant == Pointed4p::kA11 ? b.w({G, G}) - b.one() : b.zero());
  const int gpow = variant == Pointed4p::kA10Dual ? p : 1;
  const Word gx = letter_power(G, gpow);
  b.image(G, {{b.w({G}), b.w({G})}}, 1, b.w(letter_power(G, 2 * p - 1)));
  b.image(X, {{b.w({X}), b.one()}, {b.w(gx), b.w({X})}}, 0,
          b.w(cat({letter_power(G, 2 * p - gpow), {X}}), b.c(-1)));
  f.algebra = realize(b.p);
  f.presentation = b.p;
  NormalForm nf(*f.presentation);
  for (int i = 0; i < 2 * p; ++i) c.grouplikes.push_back(element(nf, b.w(letter_power(G, i))));
  c.skew = SkewWitness{f.algebra.unit, element(nf, b.w(gx)), element(nf, b.w({X})), SkewOrientation::kXg};
  c.distinguished = element(nf, b.w(variant == Pointed4p::kA11 ? letter_power(G, p) : Word{G}));
  if (variant == Pointed4p::kA11) {
    for (int e = 0; e < 2; ++e)
      c.simples.push_back({"S_" + std::string(e ? "-" : "+"), 1,
                           {{"g", scalar(cond, num(cond, e ? -1 : 1))}, {"x", scalar(cond, num(cond, 0))}}});
    for (int k = 1; k < p; ++k) {
      const CycNumber mu = zeta(cond, cond, k);
      c.simples.push_back({"V_" + std::to_string(k), 2,
                           {{"g", mat2(cond, mu, num(cond, 0), num(cond, 0), -mu)},
                            {"x", mat2(cond, num(cond, 0), num(cond, 1), mu * mu - num(cond, 1), num(cond, 0))}}});
    }
    fill_standard(c, 4 * p, 2);
  } else {
    for (int k = 0; k < 2 * p; ++k)
      c.simples.push_back({"S_" + std::to_string(k), 1,
                           {{"g", scalar(cond, zeta(cond, cond, k))}, {"x", scalar(cond, num(cond, 0))}}});
    fill_standard(c, 4 * p, 2 * p);
  }
  c.coradical_span = c.grouplikes;
  c.expected["coradical_dim"] = 2 * p;
  c.flags["chevalley"] = true;
  c.flags["s4_identity"] = true;
  c.flags["s2_identity"] = false;
  return f;
}

namespace {

Word alternating(int first, int second, int len) {
  Word w;
  for (int i = 0; i < len; ++i) w.push_back(i % 2 == 0 ? first : second);
  return w;
}

// twisted: (s_+ s_-)^p = a instead of 1
Family semisimple4p(int p, bool twisted, const std::string& name) {
  const int cond = 4 * p;
  Builder b(name + "(p=" + std::to_string(p) + ")", cond, {"a", "s", "t"});
  const int A = 0, S = 1, T = 2;
  std::vector<Word> words{{}};
  for (int len = 1; len < p; ++len) {
    words.push_back(alternating(S, T, len));
    words.push_back(alternating(T, S, len));
  }
  const Word u = alternating(S, T, p), v = alternating(T, S, p);
  words.push_back(u);
  for (int i = 0; i < 2; ++i)
    for (const auto& w : words) b.p.normal_monomials.push_back(cat({letter_power(A, i), w}));
  b.rule({A, A}, b.one());
  b.rule({S, A}, b.w({A, S}));
  b.rule({T, A}, b.w({A, T}));
  b.rule({S, S}, b.one());
  b.rule({T, T}, b.one());
  b.rule(v, twisted ? b.w(cat({{A}, u})) : b.w(u));

  const Rational half(1, 2);
  const WordComb e0 = b.w({}, b.c(half)) + b.w({A}, b.c(half));
  const WordComb e1 = b.w({}, b.c(half)) - b.w({A}, b.c(half));
  b.image(A, {{b.w({A}), b.w({A})}}, 1, b.w({A}));
  b.image(S, {{b.w({S}), e0 * b.w({S})}, {b.w({T}), e1 * b.w({S})}}, 1, e0 * b.w({S}) + e1 * b.w({T}));
  b.image(T, {{b.w({T}), e0 * b.w({T})}, {b.w({S}), e1 * b.w({T})}}, 1, e0 * b.w({T}) + e1 * b.w({S}));

  Family f;
  f.name = name;
  f.params.p = p;
  f.algebra = realize(b.p);
  f.presentation = b.p;
  NormalForm nf(*f.presentation);
  CandidateData& c = f.candidates;
  const CycNumber i4 = zeta(cond, 4, 1);
  if (!twisted) {
    c.grouplikes = {f.algebra.unit, element(nf, b.w({A})), element(nf, b.w(u)), element(nf, b.w(cat({{A}, u})))};
  } else {
    c.grouplikes = {f.algebra.unit, element(nf, b.w({A})), element(nf, (e0 + scale(i4, e1)) * b.w(u)),
                    element(nf, (e0 - scale(i4, e1)) * b.w(u))};
  }
  for (int len = 1; len < p; ++len) {
    const WordComb w = b.w(alternating(S, T, len)), wb = b.w(alternating(T, S, len));
    c.coradical_blocks.push_back({"C_" + b.p.label(alternating(S, T, len)),
                                  {{element(nf, e0 * w), element(nf, e1 * wb)}, {element(nf, e1 * w), element(nf, e0 * wb)}}});
  }
  const CycNumber z0 = num(cond, 0), z1 = num(cond, 1);
  const Matrix flip = mat2(cond, z0, z1, z1, z0);
  if (!twisted) {
    for (int ea : {1, -1})
      for (int es : {1, -1})
        c.simples.push_back({"L_" + std::to_string(ea) + "," + std::to_string(es), 1,
                             {{"a", scalar(cond, num(cond, ea))}, {"s", scalar(cond, num(cond, es))},
                              {"t", scalar(cond, num(cond, es))}}});
    for (int ea : {1, -1})
      for (int k = 1; k <= (p - 1) / 2; ++k) {
        const CycNumber zk = zeta(cond, p, k);
        c.simples.push_back({"V_" + std::to_string(ea) + "," + std::to_string(k), 2,
                             {{"a", scale(num(cond, ea), Matrix::identity(2, cond))},
                              {"s", flip},
                              {"t", mat2(cond, z0, zk.inverse(), zk, z0)}}});
      }
  } else {
    for (int e1v : {1, -1})
      for (int e2v : {1, -1}) {
        const long av = (p % 2 == 1) ? e1v * e2v : 1;
        c.simples.push_back({"L_" + std::to_string(e1v) + "," + std::to_string(e2v), 1,
                             {{"a", scalar(cond, num(cond, av))}, {"s", scalar(cond, num(cond, e1v))},
                              {"t", scalar(cond, num(cond, e2v))}}});
      }
    for (int k = 1; k < p; ++k) {
      const CycNumber mu = zeta(cond, 2 * p, k);
      c.simples.push_back({"V_" + std::to_string(k), 2,
                           {{"a", scale(mu.pow(p), Matrix::identity(2, cond))},
                            {"s", flip},
                            {"t", mat2(cond, z0, mu.inverse(), mu, z0)}}});
    }
  }
  for (std::size_t i = 0; i < f.algebra.dim; ++i) c.coradical_span.push_back(basis_element(f.algebra, i));
  fill_standard(c, 4 * p, 0);
  c.expected["coradical_dim"] = 4 * p;
  c.flags["chevalley"] = true;
  return f;
}

}  // namespace

Family a4p(int p) {
  require_prime(p, true, "a4p");
  Family f = semisimple4p(p, false, "a4p");
  // coalgebra type kC_4 + M*(2)^(p-1): a group-like of order 4
  f.candidates.expected["max_grouplike_order"] = 4;
  f.candidates.notes.push_back("the claimed coalgebra type kC_4 + M*(2)^(p-1) needs a group-like of order 4");
  return f;
}

Family b4p(int p) {
  require_prime(p, true, "b4p");
  Family f = semisimple4p(p, true, "b4p");
  // coalgebra type k(C_2 x C_2) + M*(2)^(p-1)
  f.candidates.expected["max_grouplike_order"] = 2;
  f.candidates.notes.push_back("the claimed coalgebra type k(C_2 x C_2) + M*(2)^(p-1) needs all group-likes of order <= 2");
  return f;
}

Family b8() {
  Family f = semisimple4p(2, true, "b8");
  f.candidates.expected["max_grouplike_order"] = 2;
  return f;
}

namespace {

struct DicWords {
  WordComb e0, e1, g, ginv;
};

// Generators a, x (and z) with the k^Dic_p part of the rules and images.
DicWords add_fun_dic(Builder& b, int p, int A, int X) {
  const Rational half(1, 2);
  const int cond = b.p.conductor;
  DicWords d;
  d.e0 = b.w({}, b.c(half)) + b.w({A}, b.c(half));
  d.e1 = b.w({}, b.c(half)) - b.w({A}, b.c(half));
  const CycNumber i4 = zeta(cond, 4, 1);
  d.g = (d.e0 + scale(i4, d.e1)) * b.w(letter_power(X, p));
  d.ginv = (d.e0 - scale(i4, d.e1)) * b.w(letter_power(X, p));
  b.rule({A, A}, b.one());
  b.rule({X, A}, b.w({A, X}));
  b.rule(letter_power(X, 2 * p), b.one());
  const Word xinv = letter_power(X, 2 * p - 1);
  b.image(A, {{b.w({A}), b.w({A})}}, 1, b.w({A}));
  // S(x) = e_0 x^-1 - e_1 x; with +e_1 x the antipode axiom fails
  b.image(X, {{b.w({X}), d.e0 * b.w({X})}, {b.w(cat({{A}, xinv})), d.e1 * b.w({X})}}, 1, d.e0 * b.w(xinv) - d.e1 * b.w({X}));
  return d;
}

void add_dic_blocks(CandidateData& c, NormalForm& nf, const Builder& b, const DicWords& d, int p, int X) {
  for (int k = 1; k < p; ++k) {
    const WordComb xk = b.w(letter_power(X, k)), xmk = b.w(letter_power(X, 2 * p - k));
    const CycNumber sign = b.c(k % 2 == 0 ? 1 : -1);
    c.coradical_blocks.push_back({"C_x^" + std::to_string(k),
                                  {{element(nf, d.e0 * xk), element(nf, d.e1 * xmk)},
                                   {element(nf, scale(sign, d.e1 * xk)), element(nf, d.e0 * xmk)}}});
  }
}

std::vector<ModuleSpec> dic_characters(int p, int cond, bool with_z) {
  std::vector<ModuleSpec> out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2 * p; ++j) {
      ModuleSpec m{"V_" + std::to_string(i) + "," + std::to_string(j), 1,
                   {{"a", scalar(cond, num(cond, i ? -1 : 1))}, {"x", scalar(cond, zeta(cond, 2 * p, j))}}};
      if (with_z) m.generators.emplace_back("z", scalar(cond, num(cond, 0)));
      out.push_back(std::move(m));
    }
  return out;
}

}  // namespace

Family fun_dic(int p) {
  require_prime(p, true, "fun-dic");
  const int cond = 4 * p;
  Builder b("k^Dic(p=" + std::to_string(p) + ")", cond, {"a", "x"});
  const int A = 0, X = 1;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2 * p; ++j) b.p.normal_monomials.push_back(cat({letter_power(A, i), letter_power(X, j)}));
  const DicWords d = add_fun_dic(b, p, A, X);

  Family f;
  f.name = "fun-dic";
  f.params.p = p;
  f.algebra = realize(b.p);
  f.presentation = b.p;
  NormalForm nf(*f.presentation);
  CandidateData& c = f.candidates;
  c.grouplikes = powers_of(f.algebra, element(nf, d.g), 4);
  add_dic_blocks(c, nf, b, d, p, X);
  c.simples = dic_characters(p, cond, false);
  for (std::size_t i = 0; i < f.algebra.dim; ++i) c.coradical_span.push_back(basis_element(f.algebra, i));
  fill_standard(c, 4 * p, 0);
  c.expected["coradical_dim"] = 4 * p;
  c.expected["max_grouplike_order"] = 4;
  c.flags["chevalley"] = true;
  c.flags["commutative"] = true;
  return f;
}

Family h8p(int p, int alpha) {
  require_prime(p, true, "h8p");
  if (alpha != 0 && alpha != 1) throw InvalidParameter("h8p takes alpha in {0, 1}");
  const int cond = 4 * p;
  Builder b("H8p(p=" + std::to_string(p) + ",alpha=" + std::to_string(alpha) + ")", cond, {"a", "x", "z"});
  const int A = 0, X = 1, Z = 2;
  for (int e = 0; e < 2; ++e)
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2 * p; ++j)
        b.p.normal_monomials.push_back(cat({letter_power(Z, e), letter_power(A, i), letter_power(X, j)}));
  const DicWords d = add_fun_dic(b, p, A, X);
  b.rule({A, Z}, b.w({Z, A}));
  b.rule({X, Z}, b.w({Z, X}, b.c(-1)));
  b.rule({Z, Z}, alpha ? b.w({A}) - b.one() : b.zero());
  b.image(Z, {{d.g, b.w({Z})}, {b.w({Z}), b.one()}}, 0, scale(b.c(-1), d.ginv * b.w({Z})));

  Family f;
  f.name = "h8p";
  f.params.p = p;
  f.params.alpha = alpha;
  f.algebra = realize(b.p);
  f.presentation = b.p;
  NormalForm nf(*f.presentation);
  CandidateData& c = f.candidates;
  const Vec g = element(nf, d.g);
  c.grouplikes = powers_of(f.algebra, g, 4);
  c.skew = SkewWitness{f.algebra.unit, g, element(nf, b.w({Z})), SkewOrientation::kXg};
  add_dic_blocks(c, nf, b, d, p, X);
  for (std::size_t i = 0; i < static_cast<std::size_t>(4 * p); ++i) c.coradical_span.push_back(basis_element(f.algebra, i));
  const CycNumber z0 = num(cond, 0);
  if (alpha == 0) {
    c.simples = dic_characters(p, cond, true);
    fill_standard(c, 8 * p, 4 * p);
  } else {
    for (int j = 0; j < 2 * p; ++j)
      c.simples.push_back({"W_" + std::to_string(j), 1,
                           {{"a", scalar(cond, num(cond, 1))}, {"x", scalar(cond, zeta(cond, 2 * p, j))}, {"z", scalar(cond, z0)}}});
    auto u = [&](int i) {
      const CycNumber xi = zeta(cond, 2 * p, i);
      return ModuleSpec{"U_" + std::to_string(i), 2,
                        {{"a", scale(num(cond, -1), Matrix::identity(2, cond))},
                         {"x", mat2(cond, xi, z0, z0, -xi)},
                         {"z", mat2(cond, z0, num(cond, -2), num(cond, 1), z0)}}};
    };
    for (int i = 0; i < p; ++i) c.simples.push_back(u(i));
    for (int i = 0; i < p; ++i) c.isomorphic_copies.push_back({u(i + p), static_cast<std::size_t>(2 * p + i)});
    fill_standard(c, 8 * p, 2 * p);
  }
  c.expected["coradical_dim"] = 4 * p;
  c.expected["max_grouplike_order"] = 4;
  c.flags["chevalley"] = true;
  return f;
}

std::vector<std::string> family_names() {
  return {"c_n", "product", "dihedral", "dicyclic", "q8", "gamma4p", "dual-group", "taft", "a-m10",
          "a-m10-dual", "a-m11", "h4xcp", "a4p", "b4p", "b8", "fun-dic", "h8p"};
}

std::size_t family_dim(const std::string& name, const FamilyParams& params) {
  auto group_order = [&](const std::string& g, const char* what) -> std::size_t {
    if (g == "c_n") return static_cast<std::size_t>(std::max(params.n, 0));
    if (g == "product") {
      std::size_t o = 1;
      for (int k : params.orders) o *= static_cast<std::size_t>(std::max(k, 0));
      return o;
    }
    if (g == "dihedral") return 2 * static_cast<std::size_t>(std::max(params.n, 0));
    if (g == "dicyclic") return 4 * static_cast<std::size_t>(std::max(params.n, 0));
    if (g == "q8") return 8;
    if (g == "gamma4p") return 4 * static_cast<std::size_t>(std::max(params.p, 0));
    throw InvalidParameter(std::string("unknown ") + what + " '" + g + "'");
  };
  const auto p = static_cast<std::size_t>(std::max(params.p, 0));
  if (name == "dual-group") return group_order(params.group, "group");
  if (name == "taft") return static_cast<std::size_t>(params.N) * static_cast<std::size_t>(std::max(params.N, 0));
  if (name == "b8") return 8;
  if (name == "h8p") return 8 * p;
  if (name == "a-m10" || name == "a-m10-dual" || name == "a-m11" || name == "h4xcp" || name == "a4p" ||
      name == "b4p" || name == "fun-dic")
    return 4 * p;
  return group_order(name, "family");
}

Family build_family(const std::string& name, const FamilyParams& params) {
  Family f;
  if (name == "c_n" || name == "product" || name == "dihedral" || name == "dicyclic" || name == "q8" || name == "gamma4p") {
    auto [g, irreps] = named_group(name, params);
    f = group_algebra_family(g, irreps);
  } else if (name == "dual-group") {
    auto [g, irreps] = named_group(params.group, params);
    f = dual_group_family(g, irreps);
  } else if (name == "taft") {
    f = taft(params.N, params.k);
  } else if (name == "a-m10") {
    f = pointed4p(Pointed4p::kA10, params.p);
  } else if (name == "a-m10-dual") {
    f = pointed4p(Pointed4p::kA10Dual, params.p, params.k);
  } else if (name == "a-m11") {
    f = pointed4p(Pointed4p::kA11, params.p);
  } else if (name == "h4xcp") {
    f = pointed4p(Pointed4p::kH4xCp, params.p);
  } else if (name == "a4p") {
    f = a4p(params.p);
  } else if (name == "b4p") {
    f = b4p(params.p);
  } else if (name == "b8") {
    f = b8();
  } else if (name == "fun-dic") {
    f = fun_dic(params.p);
  } else if (name == "h8p") {
    f = h8p(params.p, params.alpha);
  } else {
    throw InvalidParameter("unknown family '" + name + "'");
  }
  f.name = name;
  f.params = params;
  return f;
}

YDDatum fun_dic_datum(int p, bool flip_x) {
  Family f = fun_dic(p);
  const int cond = f.algebra.conductor;
  YDDatum d;
  d.label = std::string("(k^Dic_") + std::to_string(p) + ", g, chi" + (flip_x ? " with chi(x) = 1)" : ")");
  d.algebra = f.algebra;
  d.g = f.candidates.grouplikes.at(1);
  d.chi = zero_vec(f.algebra.dim, cond);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2 * p; ++j) d.chi[i * 2 * p + j] = num(cond, flip_x || j % 2 == 0 ? 1 : -1);
  d.q = num(cond, -1);
  return d;
}

YDDatum a4p_datum(int p, A4pDatum which) {
  Family f = a4p(p);
  const Presentation& pr = *f.presentation;
  const int cond = f.algebra.conductor;
  const bool chi3 = which == A4pDatum::kChi3 || which == A4pDatum::kChi3OnUa;
  const bool times_a = which == A4pDatum::kChi2 || which == A4pDatum::kChi3OnUa;
  YDDatum d;
  d.label = std::string("(A_4p, ") + (times_a ? "s_+(p)a" : "s_+(p)") + ", " + (chi3 ? "chi_3" : "chi_2") + ")";
  d.algebra = f.algebra;
  d.g = f.candidates.grouplikes.at(times_a ? 3 : 2);
  d.chi = zero_vec(f.algebra.dim, cond);
  for (std::size_t i = 0; i < pr.normal_monomials.size(); ++i) {
    long v = 1;
    for (int letter : pr.normal_monomials[i])
      if (letter == 0 || chi3) v = -v;
    d.chi[i] = num(cond, v);
  }
  d.q = num(cond, -1);
  return d;
}

YDDatum cyclic_datum(int N, int k) {
  if (N < 2) throw InvalidParameter("cyclic datum needs N >= 2");
  FiniteGroup g = cyclic_group(N);
  YDDatum d;
  d.label = "(kC_" + std::to_string(N) + ", g, chi(g) = z^" + std::to_string(k) + ")";
  d.algebra = group_hopf(g);
  const int cond = d.algebra.conductor;
  d.g = basis_element(d.algebra, g.generators.at(0));
  d.chi = zero_vec(g.order(), cond);
  for (std::size_t e = 0; e < g.order(); ++e) d.chi[g.power(g.generators[0], static_cast<long>(e))] = zeta(cond, N, k * static_cast<long>(e));
  d.q = zeta(cond, N, k);
  return d;
}

std::vector<std::string> datum_names() {
  return {"fun-dic", "fun-dic-flip", "a4p-chi2", "a4p-chi3", "a4p-chi2-u", "a4p-chi3-ua", "c_n"};
}

YDDatum datum_by_name(const std::string& name, const FamilyParams& params) {
  if (name == "fun-dic") return fun_dic_datum(params.p);
  if (name == "fun-dic-flip") return fun_dic_datum(params.p, true);
  if (name == "a4p-chi2") return a4p_datum(params.p, A4pDatum::kChi2);
  if (name == "a4p-chi3") return a4p_datum(params.p, A4pDatum::kChi3);
  if (name == "a4p-chi2-u") return a4p_datum(params.p, A4pDatum::kChi2OnU);
  if (name == "a4p-chi3-ua") return a4p_datum(params.p, A4pDatum::kChi3OnUa);
  if (name == "c_n") return cyclic_datum(params.n > 0 ? params.n : params.N, params.k);
  throw InvalidParameter("unknown datum '" + name + "'");
}

}  // namespace hopfkit
