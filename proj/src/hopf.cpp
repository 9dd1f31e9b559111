#include "hopfkit/hopf.hpp"

#include <algorithm>
#include <sstream>

#include "hopfkit/errors.hpp"

namespace hopfkit {

namespace {

void add_scaled(SparseVec& acc, const SparseVec& v, const CycNumber& c) {
  for (const auto& t : v) add_term(acc, t.index, c.is_one() ? t.coeff : c * t.coeff);
}

void add_to3(Tensor3& t, std::size_t a, std::size_t b, std::size_t c, const CycNumber& x) {
  if (x.is_zero()) return;
  auto [it, inserted] = t.try_emplace({a, b, c}, x);
  if (!inserted) it->second += x;
}

template <class Map>
void prune_map(Map& m) {
  for (auto it = m.begin(); it != m.end();) {
    if (it->second.is_zero()) {
      it = m.erase(it);
    } else {
      ++it;
    }
  }
}

std::string lbl(const HopfAlgebra& h, std::size_t i) { return h.labels.at(i); }

std::vector<SparseVec> antipode_columns(const HopfAlgebra& h) {
  std::vector<SparseVec> cols(h.dim);
  for (std::size_t j = 0; j < h.dim; ++j) {
    for (std::size_t i = 0; i < h.dim; ++i) {
      if (!h.antipode(i, j).is_zero()) cols[j].push_back({i, h.antipode(i, j)});
    }
  }
  return cols;
}

// Sparse product of two sparse elements.
SparseVec sparse_multiply(const HopfAlgebra& h, const SparseVec& a, const SparseVec& b) {
  SparseVec out;
  for (const auto& x : a) {
    for (const auto& y : b) {
      const SparseVec& p = h.product(x.index, y.index);
      if (p.empty()) continue;
      add_scaled(out, p, x.coeff * y.coeff);
    }
  }
  prune(out);
  return out;
}

SparseVec unit_sparse(const HopfAlgebra& h) { return to_sparse(h.unit); }

}  // namespace

std::size_t HopfAlgebra::index_of(const std::string& label) const {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw InvalidParameter("no basis element labelled '" + label + "'");
  return static_cast<std::size_t>(it - labels.begin());
}

SparseVec to_sparse(const Vec& v) {
  SparseVec s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) s.push_back({i, v[i]});
  }
  return s;
}

Vec to_dense(const SparseVec& v, std::size_t dim, int conductor) {
  Vec d = zero_vec(dim, conductor);
  for (const auto& t : v) d.at(t.index) = t.coeff;
  return d;
}

void add_term(SparseVec& v, std::size_t idx, const CycNumber& c) {
  if (c.is_zero()) return;
  auto it = std::lower_bound(v.begin(), v.end(), idx, [](const Term& t, std::size_t i) { return t.index < i; });
  if (it != v.end() && it->index == idx) {
    it->coeff += c;
  } else {
    v.insert(it, Term{idx, c});
  }
}

void prune(SparseVec& v) {
  v.erase(std::remove_if(v.begin(), v.end(), [](const Term& t) { return t.coeff.is_zero(); }), v.end());
}

void add_to(Tensor2& t, std::size_t a, std::size_t b, const CycNumber& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = t.try_emplace({a, b}, c);
  if (!inserted) it->second += c;
}

void prune(Tensor2& t) { prune_map(t); }

void normalize(HopfAlgebra& h) {
  for (auto& d : h.comult) {
    Tensor2 acc;
    for (const auto& t : d) add_to(acc, t.left, t.right, t.coeff);
    prune(acc);
    d.clear();
    for (const auto& [k, c] : acc) d.push_back({k.first, k.second, c});
  }
  for (auto& p : h.mult) prune(p);
}

void check_shape(const HopfAlgebra& h) {
  const std::size_t n = h.dim;
  auto fail = [](const std::string& m) { throw InvalidParameter("malformed Hopf algebra data: " + m); };
  if (n == 0) fail("dimension must be positive");
  if (h.labels.size() != n) fail("label count");
  if (h.mult.size() != n * n) fail("multiplication table size");
  if (h.unit.size() != n) fail("unit length");
  if (h.counit.size() != n) fail("counit length");
  if (h.comult.size() != n) fail("comultiplication size");
  if (h.antipode.rows() != n || h.antipode.cols() != n) fail("antipode shape");
  if (h.antipode.conductor() != h.conductor) fail("antipode conductor");
  auto check_c = [&](const CycNumber& x) {
    if (x.conductor() != h.conductor) fail("mixed conductors");
  };
  for (const auto& p : h.mult) {
    for (const auto& t : p) {
      if (t.index >= n) fail("product index out of range");
      check_c(t.coeff);
    }
  }
  for (const auto& x : h.unit) check_c(x);
  for (const auto& x : h.counit) check_c(x);
  for (const auto& d : h.comult) {
    for (const auto& t : d) {
      if (t.left >= n || t.right >= n) fail("coproduct index out of range");
      check_c(t.coeff);
    }
  }
}

Vec basis_element(const HopfAlgebra& h, std::size_t i) { return unit_vec(h.dim, i, h.conductor); }

Vec basis_element(const HopfAlgebra& h, const std::string& label) { return basis_element(h, h.index_of(label)); }

Vec one(const HopfAlgebra& h) { return h.unit; }

Vec multiply(const HopfAlgebra& h, const Vec& a, const Vec& b) {
  return to_dense(sparse_multiply(h, to_sparse(a), to_sparse(b)), h.dim, h.conductor);
}

Vec power(const HopfAlgebra& h, const Vec& a, unsigned n) {
  Vec r = h.unit;
  for (unsigned i = 0; i < n; ++i) r = multiply(h, r, a);
  return r;
}

std::optional<Vec> inverse(const HopfAlgebra& h, const Vec& a) {
  auto x = solve(left_mult_matrix(h, a), h.unit);
  if (!x) return std::nullopt;
  // In a finite-dimensional algebra a right inverse is two-sided; check anyway.
  if (multiply(h, *x, a) != h.unit) return std::nullopt;
  return x;
}

Tensor2 comultiply(const HopfAlgebra& h, const Vec& a) {
  Tensor2 t;
  for (std::size_t i = 0; i < h.dim; ++i) {
    if (a[i].is_zero()) continue;
    for (const auto& c : h.comult[i]) add_to(t, c.left, c.right, a[i] * c.coeff);
  }
  prune(t);
  return t;
}

CycNumber counit(const HopfAlgebra& h, const Vec& a) {
  CycNumber s(h.conductor);
  for (std::size_t i = 0; i < h.dim; ++i) {
    if (!a[i].is_zero() && !h.counit[i].is_zero()) s += a[i] * h.counit[i];
  }
  return s;
}

Vec apply_antipode(const HopfAlgebra& h, const Vec& a) { return h.antipode.apply(a); }

Matrix left_mult_matrix(const HopfAlgebra& h, const Vec& a) {
  Matrix m(h.dim, h.dim, h.conductor);
  for (std::size_t i = 0; i < h.dim; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < h.dim; ++j) {
      for (const auto& t : h.product(i, j)) m(t.index, j) += a[i] * t.coeff;
    }
  }
  return m;
}

Matrix right_mult_matrix(const HopfAlgebra& h, const Vec& a) {
  Matrix m(h.dim, h.dim, h.conductor);
  for (std::size_t i = 0; i < h.dim; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < h.dim; ++j) {
      for (const auto& t : h.product(j, i)) m(t.index, j) += a[i] * t.coeff;
    }
  }
  return m;
}

Tensor2 tensor(const Vec& a, const Vec& b) {
  Tensor2 t;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (!b[j].is_zero()) add_to(t, i, j, a[i] * b[j]);
    }
  }
  return t;
}

Tensor2 multiply(const HopfAlgebra& h, const Tensor2& a, const Tensor2& b) {
  Tensor2 out;
  for (const auto& [ka, ca] : a) {
    for (const auto& [kb, cb] : b) {
      const SparseVec& l = h.product(ka.first, kb.first);
      if (l.empty()) continue;
      const SparseVec& r = h.product(ka.second, kb.second);
      if (r.empty()) continue;
      const CycNumber c = ca * cb;
      for (const auto& x : l) {
        const CycNumber cx = c * x.coeff;
        for (const auto& y : r) add_to(out, x.index, y.index, cx * y.coeff);
      }
    }
  }
  prune(out);
  return out;
}

std::string format_element(const HopfAlgebra& h, const Vec& a) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (a[i].is_one()) {
      os << h.labels[i];
    } else {
      os << "(" << a[i].str() << ")*" << h.labels[i];
    }
  }
  if (first) os << "0";
  return os.str();
}

std::string format_tensor(const HopfAlgebra& h, const Tensor2& t) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : t) {
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*" << h.labels[k.first] << "(x)" << h.labels[k.second];
  }
  if (first) os << "0";
  return os.str();
}

// ---------------------------------------------------------------------------

bool AxiomReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.passed; });
}

std::string AxiomReport::first_failure() const {
  for (const auto& c : checks) {
    if (!c.passed) return c.axiom + ": " + c.detail;
  }
  return {};
}

void AxiomReport::append(const AxiomReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

AxiomReport verify_algebra(const HopfAlgebra& h) {
  check_shape(h);
  AxiomReport rep;
  const std::size_t n = h.dim;
  const SparseVec u = unit_sparse(h);

  AxiomCheck assoc{"associativity", true, ""};
  for (std::size_t i = 0; i < n && assoc.passed; ++i) {
    for (std::size_t j = 0; j < n && assoc.passed; ++j) {
      const SparseVec& ij = h.product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        SparseVec left;
        for (const auto& t : ij) add_scaled(left, h.product(t.index, k), t.coeff);
        prune(left);
        SparseVec right;
        for (const auto& t : h.product(j, k)) add_scaled(right, h.product(i, t.index), t.coeff);
        prune(right);
        if (left != right) {
          assoc.passed = false;
          assoc.detail = "(" + lbl(h, i) + "*" + lbl(h, j) + ")*" + lbl(h, k) + " != " + lbl(h, i) + "*(" +
                         lbl(h, j) + "*" + lbl(h, k) + ")";
          break;
        }
      }
    }
  }
  rep.checks.push_back(assoc);

  AxiomCheck unit{"unit", true, ""};
  for (std::size_t i = 0; i < n && unit.passed; ++i) {
    SparseVec e{{i, CycNumber(h.conductor, 1L)}};
    if (sparse_multiply(h, u, e) != e) {
      unit.passed = false;
      unit.detail = "1*" + lbl(h, i) + " != " + lbl(h, i);
    } else if (sparse_multiply(h, e, u) != e) {
      unit.passed = false;
      unit.detail = lbl(h, i) + "*1 != " + lbl(h, i);
    }
  }
  rep.checks.push_back(unit);
  return rep;
}

AxiomReport verify_coalgebra(const HopfAlgebra& h) {
  check_shape(h);
  AxiomReport rep;
  const std::size_t n = h.dim;

  AxiomCheck coassoc{"coassociativity", true, ""};
  for (std::size_t i = 0; i < n; ++i) {
    Tensor3 left;
    Tensor3 right;
    for (const auto& t : h.comult[i]) {
      for (const auto& s : h.comult[t.left]) add_to3(left, s.left, s.right, t.right, t.coeff * s.coeff);
      for (const auto& s : h.comult[t.right]) add_to3(right, t.left, s.left, s.right, t.coeff * s.coeff);
    }
    prune_map(left);
    prune_map(right);
    if (left != right) {
      coassoc.passed = false;
      coassoc.detail = "(Delta(x)id)Delta != (id(x)Delta)Delta on " + lbl(h, i);
      break;
    }
  }
  rep.checks.push_back(coassoc);

  AxiomCheck cou{"counit", true, ""};
  for (std::size_t i = 0; i < n && cou.passed; ++i) {
    SparseVec left;
    SparseVec right;
    for (const auto& t : h.comult[i]) {
      add_term(left, t.right, h.counit[t.left] * t.coeff);
      add_term(right, t.left, h.counit[t.right] * t.coeff);
    }
    prune(left);
    prune(right);
    SparseVec e{{i, CycNumber(h.conductor, 1L)}};
    if (left != e) {
      cou.passed = false;
      cou.detail = "(eps(x)id)Delta(" + lbl(h, i) + ") != " + lbl(h, i);
    } else if (right != e) {
      cou.passed = false;
      cou.detail = "(id(x)eps)Delta(" + lbl(h, i) + ") != " + lbl(h, i);
    }
  }
  rep.checks.push_back(cou);
  return rep;
}

AxiomReport verify_bialgebra(const HopfAlgebra& h) {
  check_shape(h);
  AxiomReport rep;
  const std::size_t n = h.dim;

  AxiomCheck dmult{"comultiplication multiplicative", true, ""};
  for (std::size_t i = 0; i < n && dmult.passed; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Tensor2 lhs;
      for (const auto& t : h.product(i, j)) {
        for (const auto& c : h.comult[t.index]) add_to(lhs, c.left, c.right, t.coeff * c.coeff);
      }
      prune(lhs);
      Tensor2 rhs;
      for (const auto& a : h.comult[i]) {
        for (const auto& b : h.comult[j]) {
          const SparseVec& l = h.product(a.left, b.left);
          if (l.empty()) continue;
          const SparseVec& r = h.product(a.right, b.right);
          if (r.empty()) continue;
          const CycNumber c = a.coeff * b.coeff;
          for (const auto& x : l) {
            const CycNumber cx = c * x.coeff;
            for (const auto& y : r) add_to(rhs, x.index, y.index, cx * y.coeff);
          }
        }
      }
      prune(rhs);
      if (lhs != rhs) {
        dmult.passed = false;
        dmult.detail = "Delta(" + lbl(h, i) + "*" + lbl(h, j) + ") != Delta(" + lbl(h, i) + ")Delta(" + lbl(h, j) + ")";
        break;
      }
    }
  }
  rep.checks.push_back(dmult);

  AxiomCheck emult{"counit multiplicative", true, ""};
  for (std::size_t i = 0; i < n && emult.passed; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      CycNumber lhs(h.conductor);
      for (const auto& t : h.product(i, j)) lhs += t.coeff * h.counit[t.index];
      if (lhs != h.counit[i] * h.counit[j]) {
        emult.passed = false;
        emult.detail = "eps(" + lbl(h, i) + "*" + lbl(h, j) + ") != eps(" + lbl(h, i) + ")eps(" + lbl(h, j) + ")";
        break;
      }
    }
  }
  rep.checks.push_back(emult);

  AxiomCheck dunit{"comultiplication unital", true, ""};
  Tensor2 d1 = comultiply(h, h.unit);
  if (d1 != tensor(h.unit, h.unit)) {
    dunit.passed = false;
    dunit.detail = "Delta(1) = " + format_tensor(h, d1);
  }
  rep.checks.push_back(dunit);

  AxiomCheck eunit{"counit unital", true, ""};
  if (!counit(h, h.unit).is_one()) {
    eunit.passed = false;
    eunit.detail = "eps(1) = " + counit(h, h.unit).str();
  }
  rep.checks.push_back(eunit);
  return rep;
}

AxiomReport verify_antipode(const HopfAlgebra& h) {
  check_shape(h);
  AxiomReport rep;
  const auto scol = antipode_columns(h);
  const SparseVec u = unit_sparse(h);
  AxiomCheck anti{"antipode", true, ""};
  for (std::size_t i = 0; i < h.dim && anti.passed; ++i) {
    SparseVec expect;
    add_scaled(expect, u, h.counit[i]);
    prune(expect);
    SparseVec left;
    SparseVec right;
    for (const auto& t : h.comult[i]) {
      SparseVec e_right{{t.right, t.coeff}};
      SparseVec e_left{{t.left, t.coeff}};
      add_scaled(left, sparse_multiply(h, scol[t.left], e_right), CycNumber(h.conductor, 1L));
      add_scaled(right, sparse_multiply(h, e_left, scol[t.right]), CycNumber(h.conductor, 1L));
    }
    prune(left);
    prune(right);
    if (left != expect) {
      anti.passed = false;
      anti.detail = "m(S(x)id)Delta(" + lbl(h, i) + ") != eps(" + lbl(h, i) + ")1";
    } else if (right != expect) {
      anti.passed = false;
      anti.detail = "m(id(x)S)Delta(" + lbl(h, i) + ") != eps(" + lbl(h, i) + ")1";
    }
  }
  rep.checks.push_back(anti);
  return rep;
}

AxiomReport verify_hopf(const HopfAlgebra& h) {
  AxiomReport rep = verify_algebra(h);
  rep.append(verify_coalgebra(h));
  rep.append(verify_bialgebra(h));
  rep.append(verify_antipode(h));
  return rep;
}

void require_hopf(const HopfAlgebra& h, const std::string& what) {
  AxiomReport rep = verify_hopf(h);
  if (!rep.passed()) throw VerificationFailure(what + " fails the Hopf axioms: " + rep.first_failure());
}

// ---------------------------------------------------------------------------

bool same_tensors(const HopfAlgebra& a, const HopfAlgebra& b) {
  return a.dim == b.dim && a.conductor == b.conductor && a.mult == b.mult && a.unit == b.unit &&
         a.counit == b.counit && a.comult == b.comult && a.antipode == b.antipode;
}

HopfAlgebra dual(const HopfAlgebra& h) {
  check_shape(h);
  const std::size_t n = h.dim;
  HopfAlgebra d;
  d.dim = n;
  d.conductor = h.conductor;
  d.labels.reserve(n);
  for (const auto& l : h.labels) {
    d.labels.push_back(!l.empty() && l.back() == '*' ? l.substr(0, l.size() - 1) : l + "*");
  }
  d.mult.assign(n * n, {});
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& t : h.comult[i]) add_term(d.mult[t.left * n + t.right], i, t.coeff);
  }
  for (auto& p : d.mult) prune(p);
  d.unit = h.counit;
  d.counit = h.unit;
  d.comult.assign(n, {});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& t : h.product(i, j)) d.comult[t.index].push_back({i, j, t.coeff});
    }
  }
  d.antipode = h.antipode.transpose();
  normalize(d);
  return d;
}

HopfAlgebra embedded(const HopfAlgebra& h, int conductor) {
  if (conductor == h.conductor) return h;
  HopfAlgebra e = h;
  e.conductor = conductor;
  for (auto& p : e.mult) {
    for (auto& t : p) t.coeff = embed(t.coeff, conductor);
  }
  e.unit = embed(h.unit, conductor);
  e.counit = embed(h.counit, conductor);
  for (auto& d : e.comult) {
    for (auto& t : d) t.coeff = embed(t.coeff, conductor);
  }
  e.antipode = h.antipode.embedded(conductor);
  return e;
}

HopfAlgebra tensor_product(const HopfAlgebra& a0, const HopfAlgebra& b0) {
  const int cond = lcm_conductor(a0.conductor, b0.conductor);
  const HopfAlgebra a = embedded(a0, cond);
  const HopfAlgebra b = embedded(b0, cond);
  const std::size_t na = a.dim;
  const std::size_t nb = b.dim;
  auto idx = [nb](std::size_t i, std::size_t j) { return i * nb + j; };
  HopfAlgebra t;
  t.dim = na * nb;
  t.conductor = cond;
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < nb; ++j) {
      const std::string& la = a.labels[i];
      const std::string& lb = b.labels[j];
      if (la == "1") {
        t.labels.push_back(lb);
      } else if (lb == "1") {
        t.labels.push_back(la);
      } else {
        t.labels.push_back(la + "." + lb);
      }
    }
  }
  t.mult.assign(t.dim * t.dim, {});
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < nb; ++j) {
      for (std::size_t k = 0; k < na; ++k) {
        for (std::size_t l = 0; l < nb; ++l) {
          SparseVec& out = t.mult[idx(i, j) * t.dim + idx(k, l)];
          for (const auto& x : a.product(i, k)) {
            for (const auto& y : b.product(j, l)) add_term(out, idx(x.index, y.index), x.coeff * y.coeff);
          }
          prune(out);
        }
      }
    }
  }
  t.unit = zero_vec(t.dim, cond);
  t.counit = zero_vec(t.dim, cond);
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < nb; ++j) {
      t.unit[idx(i, j)] = a.unit[i] * b.unit[j];
      t.counit[idx(i, j)] = a.counit[i] * b.counit[j];
    }
  }
  t.comult.assign(t.dim, {});
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < nb; ++j) {
      Tensor2 acc;
      for (const auto& x : a.comult[i]) {
        for (const auto& y : b.comult[j]) {
          add_to(acc, idx(x.left, y.left), idx(x.right, y.right), x.coeff * y.coeff);
        }
      }
      prune(acc);
      for (const auto& [k, c] : acc) t.comult[idx(i, j)].push_back({k.first, k.second, c});
    }
  }
  t.antipode = kron(a.antipode, b.antipode);
  return t;
}

CycNumber tr_s_squared(const HopfAlgebra& h) {
  CycNumber tr(h.conductor);
  for (std::size_t i = 0; i < h.dim; ++i) {
    for (std::size_t j = 0; j < h.dim; ++j) {
      const CycNumber& a = h.antipode(i, j);
      const CycNumber& b = h.antipode(j, i);
      if (!a.is_zero() && !b.is_zero()) tr += a * b;
    }
  }
  return tr;
}

bool is_semisimple(const HopfAlgebra& h) { return !tr_s_squared(h).is_zero(); }

std::optional<unsigned> operator_order(const Matrix& m, unsigned bound) {
  Matrix p = m;
  for (unsigned k = 1; k <= bound; ++k) {
    if (p.is_identity()) return k;
    p = p * m;
  }
  return std::nullopt;
}

std::optional<unsigned> antipode_order(const HopfAlgebra& h, unsigned bound) {
  if (bound == 0) bound = static_cast<unsigned>(16 * h.dim);
  return operator_order(h.antipode, bound);
}

bool is_commutative(const HopfAlgebra& h) {
  for (std::size_t i = 0; i < h.dim; ++i) {
    for (std::size_t j = i + 1; j < h.dim; ++j) {
      if (h.product(i, j) != h.product(j, i)) return false;
    }
  }
  return true;
}

}  // namespace hopfkit
