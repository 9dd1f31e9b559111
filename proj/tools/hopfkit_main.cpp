// hopfkit: build, verify and certify finite-dimensional Hopf algebras.
//
// Exit codes: 0 pass, 1 a claim or check failed, 2 bad input.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "hopfkit/certify.hpp"
#include "hopfkit/errors.hpp"
#include "hopfkit/io.hpp"

using namespace hopfkit;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kBadInput = 2;

struct ParamArgs {
  FamilyParams p;
  int taft_n = 0;
  std::string orders;
};

void add_param_options(CLI::App* cmd, ParamArgs& a) {
  cmd->add_option("--n", a.p.n, "order parameter (c_n, dihedral, dicyclic; N for taft)");
  cmd->add_option("--p", a.p.p, "prime for the 4p and 8p families")->capture_default_str();
  cmd->add_option("--N", a.taft_n, "Taft order");
  cmd->add_option("--k", a.p.k, "root selector")->capture_default_str();
  cmd->add_option("--alpha", a.p.alpha, "H_8p parameter (0 or 1)")->capture_default_str();
  cmd->add_option("--orders", a.orders, "comma-separated cyclic orders for product");
  cmd->add_option("--group", a.p.group, "underlying group for dual-group");
}

FamilyParams resolve(const std::string& family, ParamArgs a) {
  if (a.taft_n > 0) a.p.N = a.taft_n;
  else if (family == "taft" && a.p.n > 0) a.p.N = a.p.n;
  if (!a.orders.empty()) {
    std::stringstream ss(a.orders);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        a.p.orders.push_back(std::stoi(tok));
      } catch (const std::exception&) {
        throw InvalidParameter("bad --orders entry '" + tok + "'");
      }
    }
  }
  return a.p;
}

std::size_t max_dim() {
  if (const char* s = std::getenv("HOPFKIT_MAX_DIM")) {
    try {
      return std::stoul(s);
    } catch (const std::exception&) {
      throw InvalidParameter(std::string("HOPFKIT_MAX_DIM is not a number: ") + s);
    }
  }
  return 64;
}

void guard_dim(const std::string& what, std::size_t dim) {
  if (dim > max_dim())
    throw InvalidParameter(what + " has dimension " + std::to_string(dim) + ", above HOPFKIT_MAX_DIM = " +
                           std::to_string(max_dim()));
}

std::string sidecar_path(const std::string& out) {
  const std::string ext = ".json";
  if (out.size() > ext.size() && out.compare(out.size() - ext.size(), ext.size(), ext) == 0)
    return out.substr(0, out.size() - ext.size()) + ".sidecar.json";
  return out + ".sidecar.json";
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

/// A catalog datum name or a JSON file holding one.
YDDatum load_datum(const std::string& spec, const FamilyParams& p) {
  const auto names = datum_names();
  if (std::find(names.begin(), names.end(), spec) != names.end()) return datum_by_name(spec, p);
  return datum_from_json(read_json_file(spec));
}

std::size_t datum_size(const std::string& spec, const FamilyParams& p) {
  if (spec == "c_n") return static_cast<std::size_t>(p.N) * static_cast<std::size_t>(std::max(p.N, 0));
  if (spec.rfind("fun-dic", 0) == 0) return 8 * static_cast<std::size_t>(p.p);
  if (spec.rfind("a4p", 0) == 0) return 8 * static_cast<std::size_t>(p.p);
  return 0;  // JSON input: size known only after loading
}

int cmd_build(const std::string& family, const ParamArgs& args, std::string out) {
  FamilyParams p = resolve(family, args);
  const std::string prefix = "bosonize:";
  if (family.rfind(prefix, 0) == 0) {
    const std::string spec = family.substr(prefix.size());
    guard_dim("bosonization of " + spec, datum_size(spec, p));
    const YDDatum d = load_datum(spec, p);
    const HopfAlgebra b = bosonize(d);
    guard_dim("bosonization of " + spec, b.dim);
    if (out.empty()) out = "bosonize-" + spec + ".json";
    Family f{family, p, b, std::nullopt, {}};
    f.candidates.expected["dim"] = static_cast<long>(b.dim);
    write_json_file(out, to_json(b));
    write_json_file(sidecar_path(out), sidecar_json(f));
    std::cout << "wrote " << out << " (dim " << b.dim << ") and " << sidecar_path(out) << "\n";
    return kPass;
  }
  guard_dim(family, family_dim(family, p));
  const Family f = build_family(family, p);
  if (out.empty()) out = family + ".json";
  write_json_file(out, to_json(f.algebra));
  write_json_file(sidecar_path(out), sidecar_json(f));
  std::cout << "wrote " << out << " (dim " << f.algebra.dim << ") and " << sidecar_path(out) << "\n";
  return kPass;
}

HopfAlgebra load_algebra(const std::string& path) {
  HopfAlgebra h = hopf_from_json(read_json_file(path));
  guard_dim(path, h.dim);
  return h;
}

int cmd_verify(const std::string& path) {
  const HopfAlgebra h = load_algebra(path);
  const AxiomReport r = verify_hopf(h);
  for (const auto& c : r.checks) {
    std::cout << (c.passed ? "PASS " : "FAIL ") << c.axiom;
    if (!c.passed) std::cout << ": " << c.detail;
    std::cout << "\n";
  }
  std::cout << (r.passed() ? "Hopf axioms hold" : "Hopf axioms FAIL") << " (dim " << h.dim << ")\n";
  return r.passed() ? kPass : kFail;
}

int cmd_invariants(const std::string& path, const std::string& expect) {
  const HopfAlgebra h = load_algebra(path);
  if (!verify_hopf(h).passed()) {
    std::cerr << "error: " << path << " fails the Hopf axioms: " << verify_hopf(h).first_failure() << "\n";
    return kFail;
  }
  if (expect.empty()) {
    print_json(to_json(h, compute_invariants(h)));
    return kPass;
  }
  const Json side = read_json_file(expect);
  if (!side.contains("candidates")) throw ParseError(expect + ": missing \"candidates\"");
  const CandidateData c = candidates_from_json(side["candidates"], h.conductor);
  const std::string family = side.value("family", std::string("?"));
  const std::string params = side.contains("params") ? describe_params(family, params_from_json(side["params"])) : "";
  const CertifySuite s = certify(family, params, h, c);
  Json j;
  j["invariants"] = to_json(h, compute_invariants(h, &c));
  j["comparison"] = to_json(s);
  print_json(j);
  return s.passed() ? kPass : kFail;
}

int cmd_dual(const std::string& path, const std::string& out) {
  const HopfAlgebra d = dual(load_algebra(path));
  if (out.empty()) print_json(to_json(d));
  else write_json_file(out, to_json(d));
  return kPass;
}

int cmd_simples(const std::string& path, const std::string& modules_path) {
  const HopfAlgebra h = load_algebra(path);
  const Json mj = read_json_file(modules_path);
  // either a bare array of modules or a sidecar
  Json arr = mj;
  if (mj.is_object()) {
    if (mj.contains("candidates") && mj["candidates"].contains("simples")) arr = mj["candidates"]["simples"];
    else if (mj.contains("simples")) arr = mj["simples"];
    else throw ParseError(modules_path + ": no module list");
  }
  if (!arr.is_array()) throw ParseError(modules_path + ": modules must be an array");
  std::vector<RepModule> mods;
  Json entries = Json::array();
  bool ok = true;
  for (const auto& e : arr) {
    const ModuleSpec spec = module_from_json(e, h.conductor);
    Json entry{{"label", spec.label}, {"dim", spec.dim}};
    try {
      const RepModule m = expand_module(h, spec);
      const auto vm = verify_module(h, m);
      entry["module"] = vm.passed;
      entry["simple"] = vm.passed && is_simple_certified(m);
      if (!vm.passed) entry["detail"] = vm.detail;
      ok = ok && vm.passed;
      mods.push_back(m);
    } catch (const Error& err) {
      entry["module"] = false;
      entry["detail"] = err.what();
      ok = false;
    }
    entries.push_back(entry);
  }
  Json j{{"dim", h.dim}, {"modules", entries}};
  if (ok) {
    const auto wc = wedderburn_certificate(h, mods);
    j["radical_dim"] = wc.radical_dim;
    j["sum_of_squares"] = wc.sum_of_squares;
    j["profile"] = wc.profile;
    j["passed"] = wc.passed;
    j["detail"] = wc.detail;
    ok = wc.passed;
  } else {
    j["passed"] = false;
  }
  print_json(j);
  return ok ? kPass : kFail;
}

std::pair<std::string, int> split_tag(const std::string& s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos) {
    try {
      return {"", std::stoi(s)};
    } catch (const std::exception&) {
      return {s, 0};
    }
  }
  try {
    return {s.substr(0, colon), std::stoi(s.substr(colon + 1))};
  } catch (const std::exception&) {
    throw InvalidParameter("bad tag '" + s + "', expected name:integer");
  }
}

struct NicholsArgs {
  std::string group = "gamma4p";
  int p = 5;
  int n = 2;
  std::string cls = "y:1";
  std::string rep = "psi:0";
  int cutoff = 0;
  std::string convention = "induced";
  std::string order = "insertion";
};

int cmd_nichols(const NicholsArgs& a) {
  Matrix c;
  std::size_t v = 0;
  Json j;
  const auto rep = split_tag(a.rep);
  if (a.group == "cyclic") {
    // one-dimensional braiding c = z_n^k from the datum (C_n, generator, chi_k)
    if (a.n < 1) throw InvalidParameter("--n must be positive");
    if (!rep.first.empty() && rep.first != "chi") throw InvalidParameter("cyclic reps are chi:k");
    const int k = rep.second;
    const CycNumber q = CycNumber::root_of_unity(a.n, k);
    v = 1;
    c = Matrix(1, 1, q.conductor());
    c(0, 0) = q;
    j["module"] = "kC_" + std::to_string(a.n) + " with chi_" + std::to_string(k);
    j["yd_axiom"] = true;
  } else if (a.group == "gamma4p") {
    const auto cls = split_tag(a.cls);
    GammaClass kind;
    if (cls.first == "y") kind = GammaClass::kY;
    else if (cls.first == "x") kind = GammaClass::kX;
    else if (cls.first == "trivial" || cls.first == "e") kind = GammaClass::kTrivial;
    else throw InvalidParameter("--class must be y:k, x:m or trivial");
    if (a.convention != "induced" && a.convention != "shifted")
      throw InvalidParameter("--convention must be induced or shifted");
    const auto conv = a.convention == "shifted" ? XActionConvention::kShifted : XActionConvention::kInduced;
    const YDModule m = yd_module_gamma4p(a.p, kind, cls.second, rep.second, conv);
    const YDCheck yd = verify_yd(m);
    j["module"] = m.label;
    j["yd_axiom"] = yd.passed;
    if (!yd.passed) {
      j["detail"] = yd.detail;
      print_json(j);
      return kFail;
    }
    v = m.dim;
    c = braiding(m);
  } else {
    throw InvalidParameter("--group must be gamma4p or cyclic");
  }
  j["dim"] = v;
  const bool braid = braid_equation_check(c, v);
  j["braid_equation"] = braid;
  if (auto dt = diagonal_type(c, v)) {
    Json rows = Json::array();
    for (const auto& row : *dt) rows.push_back(to_json(row));
    j["diagonal_type"] = rows;
  }
  if (a.order != "insertion" && a.order != "reversed") throw InvalidParameter("--order must be insertion or reversed");
  const unsigned cutoff = a.cutoff > 0 ? static_cast<unsigned>(a.cutoff) : default_cutoff(v);
  const auto r = nichols_dims(c, v, cutoff, a.order == "reversed" ? WordOrder::kReversed : WordOrder::kInsertionSort);
  j["cutoff"] = r.cutoff;
  j["ranks"] = r.ranks;
  j["truncated"] = r.truncated;
  if (r.truncated) j["total_dim"] = r.total_dim;
  j["guard_hit"] = r.guard_hit;
  j["note"] = r.note;
  print_json(j);
  return braid ? kPass : kFail;
}

Json conditions_json(const YDDatumConditions& r) {
  return Json{{"chi_algebra_map", r.chi_algebra_map}, {"g_grouplike", r.g_grouplike}, {"chi_g_is_q", r.chi_g_is_q},
              {"q_root_of_unity", r.q_root_of_unity}, {"commutation", r.commutation}, {"failures", r.failures}};
}

int cmd_yd_verify(const std::string& spec, const ParamArgs& args) {
  const FamilyParams p = resolve("taft", args);
  guard_dim(spec, datum_size(spec, p) / 2);
  const YDDatum d = load_datum(spec, p);
  const auto r = yd_datum_conditions(d);
  Json j{{"datum", d.label}, {"valid", r.passed()}};
  j["conditions"] = conditions_json(r);
  if (r.passed()) j["q_order"] = *root_order(d.q);
  print_json(j);
  return r.passed() ? kPass : kFail;
}

int cmd_bosonize(const std::string& spec, const ParamArgs& args, const std::string& out) {
  const FamilyParams p = resolve("taft", args);
  guard_dim("bosonization of " + spec, datum_size(spec, p));
  const YDDatum d = load_datum(spec, p);
  const auto check = validate_yd_datum(d);
  if (!check.passed) {
    std::cerr << "error: " << check.detail << "\n";
    return kFail;
  }
  const HopfAlgebra b = bosonize(d);
  guard_dim("bosonization of " + spec, b.dim);
  if (out.empty()) print_json(to_json(b));
  else {
    write_json_file(out, to_json(b));
    std::cout << "wrote " << out << " (dim " << b.dim << ")\n";
  }
  return kPass;
}

int cmd_certify(const std::string& family, const ParamArgs& args, const std::string& json_out) {
  const FamilyParams p = resolve(family, args);
  guard_dim(family, family_dim(family, p));
  const CertifySuite s = certify(build_family(family, p));
  if (json_out == "-") {
    print_json(to_json(s));
  } else {
    std::cout << format_table(s);
    if (!json_out.empty()) write_json_file(json_out, to_json(s));
  }
  return s.passed() ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hopfkit: exact computations with finite-dimensional Hopf algebras"};
  app.require_subcommand(1);

  std::string family, path, out, expect, modules, spec, json_out;
  ParamArgs pa;
  NicholsArgs na;

  auto* build = app.add_subcommand("build", "build a catalog family and its candidate sidecar");
  build->add_option("family", family, "family name, or bosonize:<datum>")->required();
  build->add_option("-o,--out", out, "output path (sidecar gets .sidecar.json)");
  add_param_options(build, pa);

  auto* verify = app.add_subcommand("verify", "check the Hopf axioms of an algebra file");
  verify->add_option("path", path)->required();

  auto* inv = app.add_subcommand("invariants", "compute invariants of an algebra file as JSON");
  inv->add_option("path", path)->required();
  inv->add_option("--expect", expect, "sidecar to compare against");

  auto* dl = app.add_subcommand("dual", "write the dual Hopf algebra");
  dl->add_option("path", path)->required();
  dl->add_option("-o,--out", out, "output path (stdout if omitted)");

  auto* simples = app.add_subcommand("simples", "certify a list of simple modules");
  simples->add_option("path", path)->required();
  simples->add_option("modules", modules, "modules JSON or sidecar")->required();

  auto* nichols = app.add_subcommand("nichols", "Nichols algebra graded dimensions of a YD module");
  nichols->add_option("--group", na.group, "gamma4p or cyclic")->capture_default_str();
  nichols->add_option("--p", na.p, "prime for gamma4p")->capture_default_str();
  nichols->add_option("--n", na.n, "order for cyclic")->capture_default_str();
  nichols->add_option("--class", na.cls, "y:k, x:m or trivial")->capture_default_str();
  nichols->add_option("--rep", na.rep, "psi:s, chi:k or an irrep index")->capture_default_str();
  nichols->add_option("--cutoff", na.cutoff, "highest degree (default by dimension)");
  nichols->add_option("--convention", na.convention, "x-action on O_{x^m}: induced or shifted")->capture_default_str();
  nichols->add_option("--order", na.order, "reduced-word order: insertion or reversed")->capture_default_str();

  auto* ydv = app.add_subcommand("yd-verify", "validate a YD datum (catalog name or JSON file)");
  ydv->add_option("datum", spec)->required();
  add_param_options(ydv, pa);

  auto* bos = app.add_subcommand("bosonize", "bosonize a YD datum");
  bos->add_option("datum", spec)->required();
  bos->add_option("-o,--out", out, "output path (stdout if omitted)");
  add_param_options(bos, pa);

  auto* cert = app.add_subcommand("certify", "build a family and re-verify every sidecar claim");
  cert->add_option("family", family)->required();
  cert->add_option("--json", json_out, "also write the suite as JSON ('-' prints JSON only)");
  add_param_options(cert, pa);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  try {
    if (*build) return cmd_build(family, pa, out);
    if (*verify) return cmd_verify(path);
    if (*inv) return cmd_invariants(path, expect);
    if (*dl) return cmd_dual(path, out);
    if (*simples) return cmd_simples(path, modules);
    if (*nichols) return cmd_nichols(na);
    if (*ydv) return cmd_yd_verify(spec, pa);
    if (*bos) return cmd_bosonize(spec, pa, out);
    if (*cert) return cmd_certify(family, pa, json_out);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kBadInput;
  } catch (const InvalidParameter& e) {
    std::cerr << "invalid parameter: " << e.what() << "\n";
    return kBadInput;
  } catch (const VerificationFailure& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return kFail;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return kBadInput;
}
