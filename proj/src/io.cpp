#include "hopfkit/io.hpp"

#include <fstream>
#include <sstream>

#include "hopfkit/errors.hpp"

namespace hopfkit {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

template <class T>
T get(const Json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ParseError(std::string("bad value for ") + what);
  }
}

std::size_t index_in(const Json& j, std::size_t dim, const char* what) {
  auto i = get<long long>(j, what);
  if (i < 0 || static_cast<std::size_t>(i) >= dim) throw ParseError(std::string(what) + " index out of range");
  return static_cast<std::size_t>(i);
}

Json vecs_json(const std::vector<Vec>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(to_json(v));
  return a;
}

std::vector<Vec> vecs_from(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of vectors");
  std::vector<Vec> out;
  for (const auto& v : j) out.push_back(vec_from_json(v));
  return out;
}

}  // namespace

Json to_json(const CycNumber& x) {
  Json c = Json::array();
  for (const auto& r : x.coeffs()) c.push_back(rational_to_string(r));
  return Json{{"conductor", x.conductor()}, {"coeffs", c}};
}

CycNumber cyc_from_json(const Json& j) {
  const int n = get<int>(field(j, "conductor"), "conductor");
  if (n < 1) throw ParseError("conductor must be positive");
  const Json& c = field(j, "coeffs");
  if (!c.is_array()) throw ParseError("coeffs must be an array");
  std::vector<Rational> coeffs;
  for (const auto& s : c) coeffs.push_back(parse_rational(get<std::string>(s, "coefficient")));
  if (coeffs.size() != static_cast<std::size_t>(euler_phi(n)))
    throw ParseError("coeffs must have phi(" + std::to_string(n) + ") entries");
  CycNumber x = CycNumber::from_canonical(n, coeffs);
  if (x.coeffs() != coeffs) throw ParseError("coefficients are not canonical");
  return x;
}

Json to_json(const Vec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

Vec vec_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected a vector");
  Vec v;
  for (const auto& x : j) v.push_back(cyc_from_json(x));
  return v;
}

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(to_json(m.row(r)));
  return rows;
}

Matrix matrix_from_json(const Json& j, int conductor) {
  if (!j.is_array()) throw ParseError("expected a matrix (array of rows)");
  std::vector<Vec> rows;
  for (const auto& r : j) {
    Vec v = vec_from_json(r);
    for (const auto& x : v)
      if (x.conductor() != conductor) throw ParseError("matrix entry has the wrong conductor");
    rows.push_back(v);
  }
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (const auto& r : rows)
    if (r.size() != cols) throw ParseError("ragged matrix");
  if (rows.empty()) return Matrix(0, 0, conductor);
  return Matrix::from_rows(rows, cols, conductor);
}

Json to_json(const HopfAlgebra& h) {
  Json mult = Json::array();
  for (std::size_t i = 0; i < h.dim; ++i)
    for (std::size_t j = 0; j < h.dim; ++j) {
      const SparseVec& s = h.product(i, j);
      if (s.empty()) continue;
      mult.push_back(Json::array({i, j, to_json(to_dense(s, h.dim, h.conductor))}));
    }
  Json comult = Json::array();
  for (std::size_t i = 0; i < h.dim; ++i)
    for (const auto& t : h.comult[i]) comult.push_back(Json::array({i, t.left, t.right, to_json(t.coeff)}));
  Json j;
  j["dim"] = h.dim;
  j["conductor"] = h.conductor;
  j["labels"] = h.labels;
  j["unit"] = to_json(h.unit);
  j["counit"] = to_json(h.counit);
  j["mult"] = mult;
  j["comult"] = comult;
  j["antipode"] = to_json(h.antipode);
  return j;
}

HopfAlgebra hopf_from_json(const Json& j) {
  HopfAlgebra h;
  const long long dim = get<long long>(field(j, "dim"), "dim");
  if (dim < 1) throw ParseError("dim must be positive");
  h.dim = static_cast<std::size_t>(dim);
  h.conductor = get<int>(field(j, "conductor"), "conductor");
  if (h.conductor < 1) throw ParseError("conductor must be positive");
  h.labels = get<std::vector<std::string>>(field(j, "labels"), "labels");
  h.unit = vec_from_json(field(j, "unit"));
  h.counit = vec_from_json(field(j, "counit"));
  if (h.labels.size() != h.dim || h.unit.size() != h.dim || h.counit.size() != h.dim)
    throw ParseError("labels, unit and counit must have dim entries");
  h.mult.assign(h.dim * h.dim, {});
  const Json& mult = field(j, "mult");
  if (!mult.is_array()) throw ParseError("mult must be an array");
  for (const auto& e : mult) {
    if (!e.is_array() || e.size() != 3) throw ParseError("mult entries are [i, j, vector]");
    const std::size_t a = index_in(e[0], h.dim, "mult"), b = index_in(e[1], h.dim, "mult");
    Vec v = vec_from_json(e[2]);
    if (v.size() != h.dim) throw ParseError("mult vector must have dim entries");
    h.mult[a * h.dim + b] = to_sparse(v);
  }
  h.comult.assign(h.dim, {});
  const Json& comult = field(j, "comult");
  if (!comult.is_array()) throw ParseError("comult must be an array");
  for (const auto& e : comult) {
    if (!e.is_array() || e.size() != 4) throw ParseError("comult entries are [i, j, k, coeff]");
    const std::size_t i = index_in(e[0], h.dim, "comult");
    h.comult[i].push_back({index_in(e[1], h.dim, "comult"), index_in(e[2], h.dim, "comult"), cyc_from_json(e[3])});
  }
  h.antipode = matrix_from_json(field(j, "antipode"), h.conductor);
  if (h.antipode.rows() != h.dim || h.antipode.cols() != h.dim) throw ParseError("antipode must be dim x dim");
  auto same = [&](const CycNumber& x) {
    if (x.conductor() != h.conductor) throw ParseError("coefficient conductor differs from the algebra's");
  };
  for (const auto& x : h.unit) same(x);
  for (const auto& x : h.counit) same(x);
  for (const auto& s : h.mult)
    for (const auto& t : s) same(t.coeff);
  for (const auto& l : h.comult)
    for (const auto& t : l) same(t.coeff);
  return h;
}

Json to_json(const ModuleSpec& m) {
  Json gens = Json::array();
  for (const auto& [label, mat] : m.generators) gens.push_back(Json{{"element", label}, {"matrix", to_json(mat)}});
  return Json{{"label", m.label}, {"dim", m.dim}, {"generators", gens}};
}

ModuleSpec module_from_json(const Json& j, int conductor) {
  ModuleSpec m;
  m.label = get<std::string>(field(j, "label"), "label");
  m.dim = get<std::size_t>(field(j, "dim"), "dim");
  for (const auto& g : field(j, "generators")) {
    Matrix mat = matrix_from_json(field(g, "matrix"), conductor);
    if (mat.rows() != m.dim || mat.cols() != m.dim) throw ParseError("module matrix has the wrong size");
    m.generators.emplace_back(get<std::string>(field(g, "element"), "element"), mat);
  }
  return m;
}

Json params_to_json(const FamilyParams& p) {
  return Json{{"n", p.n}, {"p", p.p}, {"N", p.N}, {"k", p.k}, {"alpha", p.alpha}, {"orders", p.orders}, {"group", p.group}};
}

FamilyParams params_from_json(const Json& j) {
  FamilyParams p;
  p.n = get<int>(field(j, "n"), "n");
  p.p = get<int>(field(j, "p"), "p");
  p.N = get<int>(field(j, "N"), "N");
  p.k = get<int>(field(j, "k"), "k");
  p.alpha = get<int>(field(j, "alpha"), "alpha");
  p.orders = get<std::vector<int>>(field(j, "orders"), "orders");
  p.group = get<std::string>(field(j, "group"), "group");
  return p;
}

Json to_json(const CandidateData& c) {
  Json j;
  j["grouplikes"] = vecs_json(c.grouplikes);
  if (c.skew) {
    j["skew_primitive"] = Json{{"g", to_json(c.skew->g)},
                               {"h", to_json(c.skew->h)},
                               {"x", to_json(c.skew->x)},
                               {"orientation", c.skew->orientation == SkewOrientation::kXg ? "x(x)g+h(x)x" : "g(x)x+x(x)h"}};
  } else {
    j["skew_primitive"] = nullptr;
  }
  Json simples = Json::array();
  for (const auto& m : c.simples) simples.push_back(to_json(m));
  j["simples"] = simples;
  Json copies = Json::array();
  for (const auto& cp : c.isomorphic_copies) copies.push_back(Json{{"module", to_json(cp.module)}, {"partner", cp.partner}});
  j["isomorphic_copies"] = copies;
  Json blocks = Json::array();
  for (const auto& b : c.coradical_blocks) {
    Json rows = Json::array();
    for (const auto& r : b.entries) rows.push_back(vecs_json(r));
    blocks.push_back(Json{{"label", b.label}, {"entries", rows}});
  }
  j["coradical_blocks"] = blocks;
  j["coradical_span"] = vecs_json(c.coradical_span);
  j["distinguished"] = c.distinguished ? to_json(*c.distinguished) : Json(nullptr);
  j["expected"] = c.expected;
  j["flags"] = c.flags;
  j["profile"] = c.profile;
  j["notes"] = c.notes;
  return j;
}

CandidateData candidates_from_json(const Json& j, int conductor) {
  CandidateData c;
  c.grouplikes = vecs_from(field(j, "grouplikes"));
  const Json& sk = field(j, "skew_primitive");
  if (!sk.is_null()) {
    SkewWitness w;
    w.g = vec_from_json(field(sk, "g"));
    w.h = vec_from_json(field(sk, "h"));
    w.x = vec_from_json(field(sk, "x"));
    const auto o = get<std::string>(field(sk, "orientation"), "orientation");
    if (o != "x(x)g+h(x)x" && o != "g(x)x+x(x)h") throw ParseError("unknown skew orientation '" + o + "'");
    w.orientation = o == "x(x)g+h(x)x" ? SkewOrientation::kXg : SkewOrientation::kGx;
    c.skew = w;
  }
  for (const auto& m : field(j, "simples")) c.simples.push_back(module_from_json(m, conductor));
  for (const auto& cp : field(j, "isomorphic_copies"))
    c.isomorphic_copies.push_back({module_from_json(field(cp, "module"), conductor), get<std::size_t>(field(cp, "partner"), "partner")});
  for (const auto& b : field(j, "coradical_blocks")) {
    CoradicalBlock blk;
    blk.label = get<std::string>(field(b, "label"), "label");
    for (const auto& r : field(b, "entries")) blk.entries.push_back(vecs_from(r));
    c.coradical_blocks.push_back(std::move(blk));
  }
  c.coradical_span = vecs_from(field(j, "coradical_span"));
  const Json& d = field(j, "distinguished");
  if (!d.is_null()) c.distinguished = vec_from_json(d);
  c.expected = get<std::map<std::string, long>>(field(j, "expected"), "expected");
  c.flags = get<std::map<std::string, bool>>(field(j, "flags"), "flags");
  c.profile = get<std::vector<std::size_t>>(field(j, "profile"), "profile");
  c.notes = get<std::vector<std::string>>(field(j, "notes"), "notes");
  return c;
}

Json sidecar_json(const Family& f) {
  return Json{{"family", f.name}, {"params", params_to_json(f.params)}, {"candidates", to_json(f.candidates)}};
}

Json to_json(const YDDatum& d) {
  return Json{{"label", d.label}, {"algebra", to_json(d.algebra)}, {"g", to_json(d.g)}, {"chi", to_json(d.chi)}, {"q", to_json(d.q)}};
}

YDDatum datum_from_json(const Json& j) {
  YDDatum d;
  d.label = get<std::string>(field(j, "label"), "label");
  d.algebra = hopf_from_json(field(j, "algebra"));
  d.g = vec_from_json(field(j, "g"));
  d.chi = vec_from_json(field(j, "chi"));
  d.q = cyc_from_json(field(j, "q"));
  return d;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return Json::parse(ss.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw InvalidParameter("cannot write " + path);
  out << j.dump(1) << "\n";
}

}  // namespace hopfkit
