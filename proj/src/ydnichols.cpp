#include "hopfkit/ydnichols.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>

#include "hopfkit/errors.hpp"
#include "hopfkit/invariants.hpp"

namespace hopfkit {

namespace {

CycNumber root_in(int conductor, int n, long k) {
  return CycNumber::root_of_unity(conductor, mod(k, n) * (conductor / n));
}

std::size_t gamma_elem(int p, long ypow, long xpow) {
  return static_cast<std::size_t>(mod(ypow, p) + p * mod(xpow, 4));
}

}  // namespace

YDCheck verify_yd(const YDModule& m) {
  std::vector<Matrix> rho;
  try {
    rho = expand_rep(m.group, GroupRep{m.label, m.dim, m.generator_action});
  } catch (const VerificationFailure& e) {
    return {false, e.what()};
  }
  if (m.grading.size() != m.dim) return {false, m.label + ": grading has the wrong length"};
  for (std::size_t g = 0; g < m.group.order(); ++g) {
    for (std::size_t b = 0; b < m.dim; ++b) {
      const std::size_t want = m.group.conjugate(g, m.grading[b]);
      for (std::size_t s = 0; s < m.dim; ++s) {
        if (rho[g](s, b).is_zero() || m.grading[s] == want) continue;
        return {false, m.label + ": " + m.group.labels[g] + " sends a vector of degree " + m.group.labels[m.grading[b]] +
                           " to degree " + m.group.labels[m.grading[s]] + ", expected " + m.group.labels[want]};
      }
    }
  }
  return {true, m.label + " is a Yetter-Drinfeld module"};
}

YDModule yd_module_gamma4p(int p, GammaClass kind, int cls, int rep, XActionConvention conv) {
  FiniteGroup grp = gamma4p_group(p);
  const int cond = grp.conductor;
  const long l = (p - 1) / 2;
  std::vector<long> lpow(4, 1);
  for (int i = 1; i < 4; ++i) lpow[i] = mod(lpow[i - 1] * l, p);
  YDModule m;
  m.group = grp;
  if (kind == GammaClass::kTrivial) {
    auto irreps = gamma4p_irreps(grp, p);
    if (rep < 0 || rep >= static_cast<int>(irreps.size()))
      throw InvalidParameter("Gamma_4p has " + std::to_string(irreps.size()) + " irreducible representations");
    m.label = "M(e," + irreps[rep].label + ")";
    m.dim = irreps[rep].dim;
    m.generator_action = irreps[rep].generator_images;
    m.grading.assign(m.dim, grp.identity);
    return m;
  }
  if (kind == GammaClass::kY) {
    if (mod(cls, p) == 0) throw InvalidParameter("O_{y^k} needs k != 0 mod p");
    if (rep < 0 || rep >= p) throw InvalidParameter("psi_s needs 0 <= s < p");
    m.label = "M(O_y^" + std::to_string(cls) + ",psi_" + std::to_string(rep) + ")";
    m.dim = 4;
    Matrix y(4, 4, cond), x(4, 4, cond);
    for (int j = 0; j < 4; ++j) {
      x((j + 1) % 4, j) = CycNumber(cond, 1L);
      y(j, j) = root_in(cond, p, rep * lpow[(4 - j) % 4]);
      m.grading.push_back(gamma_elem(p, cls * lpow[j], 0));
    }
    m.generator_action = {y, x};
    return m;
  }
  if (cls < 1 || cls > 3) throw InvalidParameter("O_{x^m} needs 0 < m < 4");
  if (rep < 0 || rep > 3) throw InvalidParameter("chi_k needs 0 <= k <= 3");
  m.label = "M(O_x^" + std::to_string(cls) + ",chi_" + std::to_string(rep) + ")";
  if (conv == XActionConvention::kShifted) m.label += "[shifted x-action]";
  m.dim = static_cast<std::size_t>(p);
  Matrix y(m.dim, m.dim, cond), x(m.dim, m.dim, cond);
  const long lm = lpow[cls];
  for (long j = 0; j < p; ++j) {
    y(mod(j + 1, p), j) = CycNumber(cond, 1L);
    long target = j * l + (conv == XActionConvention::kShifted ? 1 : 0);
    x(mod(target, p), j) = root_in(cond, 4, rep);
    m.grading.push_back(gamma_elem(p, j * (1 - lm), cls));
  }
  m.generator_action = {y, x};
  return m;
}

Matrix braiding(const YDModule& m) {
  const std::size_t v = m.dim;
  auto rho = expand_rep(m.group, GroupRep{m.label, m.dim, m.generator_action});
  const int cond = m.generator_action.empty() ? m.group.conductor : m.generator_action.front().conductor();
  Matrix c(v * v, v * v, cond);
  for (std::size_t r = 0; r < v; ++r) {
    const Matrix& g = rho[m.grading[r]];
    for (std::size_t t = 0; t < v; ++t)
      for (std::size_t s = 0; s < v; ++s)
        if (!g(s, t).is_zero()) c(s * v + r, r * v + t) = g(s, t);
  }
  return c;
}

bool braid_equation_check(const Matrix& c, std::size_t v) {
  const Matrix id = Matrix::identity(v, c.conductor());
  const Matrix c1 = kron(c, id), c2 = kron(id, c);
  return c1 * c2 * c1 == c2 * c1 * c2;
}

std::optional<std::vector<Vec>> diagonal_type(const Matrix& c, std::size_t v) {
  std::vector<Vec> q(v, zero_vec(v, c.conductor()));
  for (std::size_t r = 0; r < v; ++r) {
    for (std::size_t t = 0; t < v; ++t) {
      const std::size_t col = r * v + t;
      for (std::size_t row = 0; row < v * v; ++row) {
        if (c(row, col).is_zero()) continue;
        if (row != t * v + r) return std::nullopt;
        q[r][t] = c(row, col);
      }
    }
  }
  return q;
}

std::optional<unsigned> root_order(const CycNumber& q) {
  const unsigned bound = 2 * static_cast<unsigned>(q.conductor());
  CycNumber p = q;
  for (unsigned k = 1; k <= bound; ++k) {
    if (p.is_one()) return k;
    p *= q;
  }
  return std::nullopt;
}

YDDatumConditions yd_datum_conditions(const YDDatum& d) {
  YDDatumConditions r;
  const HopfAlgebra& h = d.algebra;
  const int cond = h.conductor;
  if (d.chi.size() != h.dim || d.g.size() != h.dim) {
    r.failures.push_back("vectors have the wrong length");
    return r;
  }
  r.shapes = true;
  auto chi = [&](const Vec& v) {
    CycNumber s(cond);
    for (std::size_t i = 0; i < h.dim; ++i)
      if (!v[i].is_zero()) s += v[i] * d.chi[i];
    return s;
  };
  r.chi_algebra_map = chi(h.unit).is_one();
  if (!r.chi_algebra_map) r.failures.push_back("chi(1) != 1");
  for (std::size_t i = 0; i < h.dim && r.chi_algebra_map; ++i)
    for (std::size_t j = 0; j < h.dim; ++j) {
      CycNumber lhs(cond);
      for (const auto& t : h.product(i, j)) lhs += t.coeff * d.chi[t.index];
      if (lhs != d.chi[i] * d.chi[j]) {
        r.chi_algebra_map = false;
        r.failures.push_back("chi is not multiplicative at (" + h.labels[i] + "," + h.labels[j] + ")");
        break;
      }
    }
  r.g_grouplike = is_grouplike(h, d.g);
  if (!r.g_grouplike) r.failures.push_back("g is not group-like");
  const CycNumber chig = chi(d.g);
  r.chi_g_is_q = chig == d.q;
  if (!r.chi_g_is_q) r.failures.push_back("chi(g) = " + chig.str() + " but q = " + d.q.str());
  auto ord = root_order(d.q);
  r.q_root_of_unity = ord && *ord >= 2;
  if (!r.q_root_of_unity) r.failures.push_back("q = " + d.q.str() + " is not a root of unity of order >= 2");
  r.commutation = true;
  for (std::size_t i = 0; i < h.dim; ++i) {
    Vec left = zero_vec(h.dim, cond), right = zero_vec(h.dim, cond);
    for (const auto& t : h.comult[i]) {
      add_product(left[t.left], t.coeff, d.chi[t.right]);   // chi(h_2) h_1
      add_product(right[t.right], t.coeff, d.chi[t.left]);  // chi(h_1) h_2
    }
    if (multiply(h, left, d.g) != multiply(h, d.g, right)) {
      r.commutation = false;
      r.failures.push_back("(chi -> h)g != g(h <- chi) at h = " + h.labels[i]);
      break;
    }
  }
  return r;
}

YDCheck validate_yd_datum(const YDDatum& d) {
  const auto r = yd_datum_conditions(d);
  if (!r.passed()) return {false, d.label + ": " + r.failures.front()};
  return {true, d.label + " is a YD datum with q of order " + std::to_string(*root_order(d.q))};
}

CycNumber q_int(unsigned n, const CycNumber& q) {
  CycNumber s(q.conductor()), p(q.conductor(), 1L);
  for (unsigned i = 0; i < n; ++i) {
    s += p;
    p *= q;
  }
  return s;
}

CycNumber q_factorial(unsigned n, const CycNumber& q) {
  CycNumber f(q.conductor(), 1L);
  for (unsigned i = 1; i <= n; ++i) f *= q_int(i, q);
  return f;
}

CycNumber q_binomial(unsigned n, unsigned k, const CycNumber& q) {
  if (k > n) return CycNumber(q.conductor());
  // row[j] = [m, j]_q
  std::vector<CycNumber> row{CycNumber(q.conductor(), 1L)};
  for (unsigned m = 1; m <= n; ++m) {
    std::vector<CycNumber> next(m + 1, CycNumber(q.conductor()));
    for (unsigned j = 0; j <= m; ++j) {
      if (j < m) next[j] += q.pow(j) * row[j];
      if (j > 0) next[j] += row[j - 1];
    }
    row = std::move(next);
  }
  return row[k];
}

HopfAlgebra bosonize(const YDDatum& d, const std::string& y_label) {
  auto check = validate_yd_datum(d);
  if (!check.passed) throw VerificationFailure("invalid YD datum: " + check.detail);
  const HopfAlgebra& L = d.algebra;
  const std::size_t n = L.dim;
  const int cond = L.conductor;
  const unsigned N = *root_order(d.q);
  const std::size_t dim = N * n;
  auto idx = [n](std::size_t m, std::size_t i) { return m * n + i; };

  // chi^k as values on the basis, and l -> chi^k(l_1) l_2
  std::vector<Vec> chik{L.counit};
  for (unsigned k = 1; k < N; ++k) {
    Vec next = zero_vec(n, cond);
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& t : L.comult[i]) add_product(next[i], t.coeff, chik.back()[t.left] * d.chi[t.right]);
    chik.push_back(next);
  }
  auto act = [&](unsigned k, std::size_t i) {
    Vec out = zero_vec(n, cond);
    for (const auto& t : L.comult[i]) add_product(out[t.right], t.coeff, chik[k][t.left]);
    return out;
  };
  std::vector<Vec> gpow{L.unit};
  for (unsigned k = 1; k < N; ++k) gpow.push_back(multiply(L, gpow.back(), d.g));

  HopfAlgebra h;
  h.dim = dim;
  h.conductor = cond;
  for (unsigned m = 0; m < N; ++m)
    for (std::size_t i = 0; i < n; ++i) {
      std::string y = m == 0 ? "" : (m == 1 ? y_label : y_label + "^" + std::to_string(m));
      if (y.empty()) {
        h.labels.push_back(L.labels[i]);
      } else {
        h.labels.push_back(L.labels[i] == "1" ? y : y + "#" + L.labels[i]);
      }
    }

  h.mult.assign(dim * dim, {});
  for (unsigned k = 0; k < N; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      const Vec moved = to_dense(to_sparse(act(k, i)), n, cond);
      for (std::size_t j = 0; j < n; ++j) {
        SparseVec prod;
        for (std::size_t t = 0; t < n; ++t) {
          if (moved[t].is_zero()) continue;
          for (const auto& term : L.product(t, j)) add_term(prod, term.index, moved[t] * term.coeff);
        }
        prune(prod);
        for (unsigned m = 0; m + k < N; ++m) {
          SparseVec& out = h.mult[idx(m, i) * dim + idx(k, j)];
          for (const auto& term : prod) out.push_back({idx(m + k, term.index), term.coeff});
        }
      }
    }
  }

  h.unit = zero_vec(dim, cond);
  h.counit = zero_vec(dim, cond);
  for (std::size_t i = 0; i < n; ++i) {
    h.unit[idx(0, i)] = L.unit[i];
    h.counit[idx(0, i)] = L.counit[i];
  }

  h.comult.assign(dim, {});
  for (unsigned m = 0; m < N; ++m) {
    for (std::size_t i = 0; i < n; ++i) {
      Tensor2 acc;
      for (unsigned s = 0; s <= m; ++s) {
        const CycNumber b = q_binomial(m, s, d.q);
        if (b.is_zero()) continue;
        for (const auto& t : L.comult[i]) {
          const Vec gl = multiply(L, gpow[m - s], basis_element(L, t.left));
          const CycNumber c = b * t.coeff;
          for (std::size_t u = 0; u < n; ++u)
            if (!gl[u].is_zero()) add_to(acc, idx(s, u), idx(m - s, t.right), c * gl[u]);
        }
      }
      prune(acc);
      for (const auto& [k, c] : acc) h.comult[idx(m, i)].push_back({k.first, k.second, c});
    }
  }

  // S(y^m # l) = (1 # S(l)) S(y # 1)^m with S(y # 1) = -(1 # g^-1)(y # 1).
  h.antipode = Matrix(dim, dim, cond);
  Vec sy = zero_vec(dim, cond);
  if (N > 1) {
    const Vec ginv = L.antipode.apply(d.g);
    Vec g1 = zero_vec(dim, cond), y1 = zero_vec(dim, cond);
    for (std::size_t i = 0; i < n; ++i) {
      g1[idx(0, i)] = ginv[i];
      y1[idx(1, i)] = L.unit[i];
    }
    sy = scale(CycNumber(cond, -1L), multiply(h, g1, y1));
  }
  for (std::size_t i = 0; i < n; ++i) {
    Vec sl = zero_vec(dim, cond);
    const Vec s = L.antipode.col(i);
    for (std::size_t u = 0; u < n; ++u) sl[idx(0, u)] = s[u];
    Vec cur = sl;
    for (unsigned m = 0; m < N; ++m) {
      for (std::size_t r = 0; r < dim; ++r) h.antipode(r, idx(m, i)) = cur[r];
      cur = multiply(h, cur, sy);
    }
  }
  normalize(h);
  require_hopf(h, "bosonization of " + d.label);
  return h;
}

Matrix bosonization_projection(const YDDatum& d) {
  const std::size_t n = d.algebra.dim;
  const unsigned N = root_order(d.q).value_or(1);
  Matrix pi(n, N * n, d.algebra.conductor);
  for (std::size_t i = 0; i < n; ++i) pi(i, i) = CycNumber(d.algebra.conductor, 1L);
  return pi;
}

std::size_t nichols_guard_mb() {
  if (const char* s = std::getenv("HOPFKIT_NICHOLS_GUARD_MB")) {
    char* end = nullptr;
    long v = std::strtol(s, &end, 10);
    if (end != s && v > 0) return static_cast<std::size_t>(v);
  }
  return 512;
}

unsigned default_cutoff(std::size_t v) {
  if (v <= 1) return 8;
  if (v == 2) return 6;
  return 4;
}

namespace {

using SparseMap = std::map<std::size_t, CycNumber>;

struct BraidAction {
  std::size_t v;
  unsigned n;
  std::vector<std::vector<std::pair<std::size_t, CycNumber>>> cols;  // c column per pair r*v+t
  std::vector<std::size_t> pw;                                       // v^k

  BraidAction(const Matrix& c, std::size_t v_, unsigned n_) : v(v_), n(n_) {
    cols.resize(v * v);
    for (std::size_t col = 0; col < v * v; ++col)
      for (std::size_t row = 0; row < v * v; ++row)
        if (!c(row, col).is_zero()) cols[col].emplace_back(row, c(row, col));
    pw.assign(n + 1, 1);
    for (unsigned k = 1; k <= n; ++k) pw[k] = pw[k - 1] * v;
  }

  // digit at tensor position i (0 = leftmost)
  std::size_t digit(std::size_t idx, unsigned i) const { return (idx / pw[n - 1 - i]) % v; }

  template <class F>
  void each_image(std::size_t idx, unsigned i, F f) const {
    const std::size_t r = digit(idx, i), t = digit(idx, i + 1);
    const std::size_t base = idx - r * pw[n - 1 - i] - t * pw[n - 2 - i];
    for (const auto& [row, c] : cols[r * v + t]) f(base + (row / v) * pw[n - 1 - i] + (row % v) * pw[n - 2 - i], c);
  }

  SparseMap apply(const SparseMap& x, unsigned i) const {
    SparseMap out;
    for (const auto& [idx, a] : x)
      each_image(idx, i, [&](std::size_t j, const CycNumber& c) {
        auto [it, ins] = out.try_emplace(j, a * c);
        if (!ins) it->second += a * c;
      });
    for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
  }
};

std::vector<std::vector<unsigned>> reduced_words(unsigned n, WordOrder order) {
  std::vector<std::vector<unsigned>> words;
  std::vector<unsigned> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  do {
    std::vector<unsigned> a = perm, w;
    if (order == WordOrder::kInsertionSort) {
      for (unsigned i = 1; i < n; ++i)
        for (unsigned j = i; j > 0 && a[j - 1] > a[j]; --j) {
          std::swap(a[j - 1], a[j]);
          w.push_back(j - 1);
        }
    } else {
      for (unsigned i = n - 1; i-- > 0;)
        for (unsigned j = i; j + 1 < n && a[j] > a[j + 1]; ++j) {
          std::swap(a[j], a[j + 1]);
          w.push_back(j);
        }
    }
    words.push_back(w);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return words;
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

struct Blocks {
  std::vector<std::vector<std::size_t>> members;
  std::size_t largest = 0;
};

Blocks braid_blocks(const BraidAction& b, std::size_t total) {
  std::vector<std::size_t> parent(total);
  std::iota(parent.begin(), parent.end(), 0);
  for (std::size_t idx = 0; idx < total; ++idx)
    for (unsigned i = 0; i + 1 < b.n; ++i)
      b.each_image(idx, i, [&](std::size_t j, const CycNumber&) {
        std::size_t a = find_root(parent, idx), c = find_root(parent, j);
        if (a != c) parent[a] = c;
      });
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t idx = 0; idx < total; ++idx) groups[find_root(parent, idx)].push_back(idx);
  Blocks out;
  for (auto& [r, m] : groups) {
    out.largest = std::max(out.largest, m.size());
    out.members.push_back(std::move(m));
  }
  return out;
}

std::size_t entry_bytes(int conductor) { return 48 + 32 * static_cast<std::size_t>(euler_phi(conductor)); }

}  // namespace

std::size_t symmetrizer_rank(const Matrix& c, std::size_t v, unsigned n, WordOrder order) {
  if (n == 0) return 1;
  if (n == 1) return v;
  const BraidAction act(c, v, n);
  const std::size_t total = act.pw[n];
  const auto words = reduced_words(n, order);
  const Blocks blocks = braid_blocks(act, total);
  std::size_t r = 0;
  for (const auto& block : blocks.members) {
    std::map<std::size_t, std::size_t> pos;
    for (std::size_t k = 0; k < block.size(); ++k) pos[block[k]] = k;
    std::vector<Vec> cols;
    for (std::size_t idx : block) {
      SparseMap acc;
      for (const auto& w : words) {
        SparseMap x{{idx, CycNumber(c.conductor(), 1L)}};
        for (auto it = w.rbegin(); it != w.rend() && !x.empty(); ++it) x = act.apply(x, *it);
        for (const auto& [j, a] : x) {
          auto [it2, ins] = acc.try_emplace(j, a);
          if (!ins) it2->second += a;
        }
      }
      Vec col = zero_vec(block.size(), c.conductor());
      for (const auto& [j, a] : acc) col[pos.at(j)] = a;
      cols.push_back(col);
    }
    r += rank(Matrix::from_cols(cols, block.size(), c.conductor()));
  }
  return r;
}

NicholsReport nichols_dims(const Matrix& c, std::size_t v, unsigned cutoff, WordOrder order) {
  if (c.rows() != v * v || c.cols() != v * v) throw InvalidParameter("braiding must be v^2 x v^2");
  NicholsReport rep;
  rep.cutoff = cutoff;
  const std::size_t guard = nichols_guard_mb() * 1024 * 1024;
  rep.ranks.push_back(1);
  for (unsigned n = 1; n <= cutoff; ++n) {
    if (n >= 2) {
      const BraidAction act(c, v, n);
      const std::size_t total = act.pw[n];
      const Blocks blocks = braid_blocks(act, total);
      std::size_t bytes = 0;
      for (const auto& b : blocks.members) bytes += b.size() * b.size() * entry_bytes(c.conductor());
      bytes += total * 64;
      if (bytes > guard) {
        rep.guard_hit = true;
        rep.note = "memory guard reached at degree " + std::to_string(n);
        break;
      }
    }
    const std::size_t r = symmetrizer_rank(c, v, n, order);
    rep.ranks.push_back(r);
    if (r == 0) {
      rep.truncated = true;
      break;
    }
  }
  if (rep.truncated) rep.total_dim = std::accumulate(rep.ranks.begin(), rep.ranks.end(), std::size_t{0});
  if (rep.note.empty())
    rep.note = rep.truncated ? "truncates in degree " + std::to_string(rep.ranks.size() - 1)
                             : "no truncation up to degree " + std::to_string(cutoff);
  return rep;
}

}  // namespace hopfkit
