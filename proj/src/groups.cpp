#include "hopfkit/groups.hpp"

#include <deque>
#include <functional>
#include <numeric>
#include <optional>

#include "hopfkit/errors.hpp"

namespace hopfkit {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

long mod(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

namespace {

std::string monomial(const std::vector<std::pair<std::string, long>>& parts) {
  std::string out;
  for (const auto& [g, e] : parts) {
    if (e == 0) continue;
    if (!out.empty()) out += "*";
    out += g;
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

// Builds the table from a multiplication on element indices.
FiniteGroup tabulate(std::string name, std::vector<std::string> labels,
                     const std::function<std::size_t(std::size_t, std::size_t)>& mul,
                     std::vector<std::size_t> gens, int conductor) {
  FiniteGroup g;
  g.name = std::move(name);
  g.labels = std::move(labels);
  const std::size_t n = g.labels.size();
  g.table.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) g.table[a * n + b] = mul(a, b);
  g.identity = 0;
  g.inv.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (g.mul(a, b) == g.identity) g.inv[a] = b;
  g.generators = std::move(gens);
  g.conductor = conductor;
  g.check();
  return g;
}

CycNumber root(int conductor, int n, long k) { return CycNumber::root_of_unity(conductor, mod(k, n) * (conductor / n)); }

Matrix mat(int conductor, std::initializer_list<std::initializer_list<CycNumber>> rows) {
  std::vector<Vec> r;
  for (auto row : rows) r.emplace_back(row);
  return Matrix::from_rows(r, r.front().size(), conductor);
}

Matrix scalar(int conductor, const CycNumber& c) { return mat(conductor, {{c}}); }

}  // namespace

std::size_t FiniteGroup::element_order(std::size_t a) const {
  std::size_t k = 1;
  for (std::size_t x = a; x != identity; x = mul(x, a)) ++k;
  return k;
}

std::size_t FiniteGroup::power(std::size_t a, long e) const {
  std::size_t base = e < 0 ? inv[a] : a;
  std::size_t r = identity;
  for (long i = 0; i < std::labs(e); ++i) r = mul(r, base);
  return r;
}

std::size_t FiniteGroup::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return i;
  throw InvalidParameter(name + " has no element '" + label + "'");
}

void FiniteGroup::check() const {
  const std::size_t n = order();
  if (table.size() != n * n || inv.size() != n) throw VerificationFailure(name + ": malformed table");
  for (std::size_t a = 0; a < n; ++a) {
    if (mul(identity, a) != a || mul(a, identity) != a) throw VerificationFailure(name + ": identity law fails at " + labels[a]);
    if (mul(a, inv[a]) != identity || mul(inv[a], a) != identity)
      throw VerificationFailure(name + ": no inverse for " + labels[a]);
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw VerificationFailure(name + ": not associative at " + labels[a] + "," + labels[b] + "," + labels[c]);
  }
  // generators must generate
  std::vector<bool> seen(n, false);
  std::deque<std::size_t> queue{identity};
  seen[identity] = true;
  while (!queue.empty()) {
    std::size_t a = queue.front();
    queue.pop_front();
    for (std::size_t s : generators) {
      std::size_t b = mul(a, s);
      if (!seen[b]) {
        seen[b] = true;
        queue.push_back(b);
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    if (!seen[a]) throw VerificationFailure(name + ": generators miss " + labels[a]);
}

std::vector<Matrix> expand_rep(const FiniteGroup& g, const GroupRep& r) {
  if (r.generator_images.size() != g.generators.size())
    throw InvalidParameter(r.label + ": expected one matrix per generator of " + g.name);
  const int cond = r.generator_images.empty() ? g.conductor : r.generator_images.front().conductor();
  std::vector<std::optional<Matrix>> out(g.order());
  out[g.identity] = Matrix::identity(r.dim, cond);
  std::deque<std::size_t> queue{g.identity};
  while (!queue.empty()) {
    std::size_t a = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < g.generators.size(); ++k) {
      std::size_t b = g.mul(a, g.generators[k]);
      Matrix m = *out[a] * r.generator_images[k];
      if (!out[b]) {
        out[b] = m;
        queue.push_back(b);
      } else if (!(*out[b] == m)) {
        throw VerificationFailure(r.label + " is not a representation of " + g.name + ": conflict at " + g.labels[a] + "*" +
                                  g.labels[g.generators[k]]);
      }
    }
  }
  std::vector<Matrix> res;
  for (auto& m : out) res.push_back(*m);
  return res;
}

FiniteGroup cyclic_group(int n) {
  if (n < 1) throw InvalidParameter("cyclic group order must be positive");
  return product_of_cyclics({n});
}

FiniteGroup product_of_cyclics(const std::vector<int>& orders) {
  if (orders.empty()) throw InvalidParameter("product of cyclic groups needs at least one factor");
  std::size_t n = 1;
  int cond = 1;
  for (int o : orders) {
    if (o < 1) throw InvalidParameter("cyclic factor orders must be positive");
    n *= static_cast<std::size_t>(o);
    cond = std::lcm(cond, o);
  }
  auto digits = [&](std::size_t idx) {
    std::vector<long> d(orders.size());
    for (std::size_t f = orders.size(); f-- > 0;) {
      d[f] = static_cast<long>(idx % orders[f]);
      idx /= orders[f];
    }
    return d;
  };
  auto index = [&](const std::vector<long>& d) {
    std::size_t idx = 0;
    for (std::size_t f = 0; f < orders.size(); ++f) idx = idx * orders[f] + static_cast<std::size_t>(mod(d[f], orders[f]));
    return idx;
  };
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    auto d = digits(i);
    std::vector<std::pair<std::string, long>> parts;
    for (std::size_t f = 0; f < orders.size(); ++f)
      parts.emplace_back(orders.size() == 1 ? "g" : "g" + std::to_string(f + 1), d[f]);
    labels.push_back(monomial(parts));
  }
  std::vector<std::size_t> gens;
  for (std::size_t f = 0; f < orders.size(); ++f) {
    std::vector<long> d(orders.size(), 0);
    d[f] = 1;
    gens.push_back(index(d));
  }
  std::string name = "C" + std::to_string(orders[0]);
  for (std::size_t f = 1; f < orders.size(); ++f) name += "xC" + std::to_string(orders[f]);
  return tabulate(
      name, labels,
      [&](std::size_t a, std::size_t b) {
        auto da = digits(a), db = digits(b);
        for (std::size_t f = 0; f < da.size(); ++f) da[f] += db[f];
        return index(da);
      },
      gens, cond);
}

FiniteGroup dihedral_group(int n) {
  if (n < 2) throw InvalidParameter("dihedral group needs n >= 2");
  // index i + n j for a^i y^j
  std::vector<std::string> labels;
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < n; ++i) labels.push_back(monomial({{"a", i}, {"y", j}}));
  return tabulate(
      "D" + std::to_string(n), labels,
      [n](std::size_t a, std::size_t b) {
        long i = static_cast<long>(a) % n, j = static_cast<long>(a) / n;
        long k = static_cast<long>(b) % n, l = static_cast<long>(b) / n;
        long e = j ? i - k : i + k;
        return static_cast<std::size_t>(mod(e, n) + n * ((j + l) % 2));
      },
      {1, static_cast<std::size_t>(n)}, n);
}

FiniteGroup dicyclic_group(int n) {
  if (n < 2) throw InvalidParameter("dicyclic group needs n >= 2");
  // index j + n i for y^j x^i
  std::vector<std::string> labels;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < n; ++j) labels.push_back(monomial({{"y", j}, {"x", i}}));
  return tabulate(
      "Dic" + std::to_string(n), labels,
      [n](std::size_t a, std::size_t b) {
        long j = static_cast<long>(a) % n, i = static_cast<long>(a) / n;
        long k = static_cast<long>(b) % n, l = static_cast<long>(b) / n;
        long e = i % 2 ? j - k : j + k;
        return static_cast<std::size_t>(mod(e, n) + n * ((i + l) % 4));
      },
      {1, static_cast<std::size_t>(n)}, std::lcm(n, 4));
}

FiniteGroup quaternion_group() {
  // index i + 4 j for x^i y^j
  std::vector<std::string> labels;
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < 4; ++i) labels.push_back(monomial({{"x", i}, {"y", j}}));
  return tabulate(
      "Q8", labels,
      [](std::size_t a, std::size_t b) {
        long i = static_cast<long>(a) % 4, j = static_cast<long>(a) / 4;
        long k = static_cast<long>(b) % 4, l = static_cast<long>(b) / 4;
        long e = j ? i - k : i + k;
        long y = j + l;
        if (y == 2) {
          e += 2;
          y = 0;
        }
        return static_cast<std::size_t>(mod(e, 4) + 4 * y);
      },
      {1, 4}, 4);
}

FiniteGroup gamma4p_group(int p) {
  if (!is_prime(p) || p % 4 != 1) throw InvalidParameter("Gamma_4p needs a prime p = 1 mod 4, got " + std::to_string(p));
  const long l = (p - 1) / 2;
  if (mod(l * l, p) != p - 1)
    throw InvalidParameter("Gamma_4p: l = (p-1)/2 = " + std::to_string(l) + " does not satisfy l^2 = -1 mod " +
                           std::to_string(p));
  std::vector<long> lpow(4, 1);
  for (int i = 1; i < 4; ++i) lpow[i] = mod(lpow[i - 1] * l, p);
  // index j + p i for y^j x^i
  std::vector<std::string> labels;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < p; ++j) labels.push_back(monomial({{"y", j}, {"x", i}}));
  return tabulate(
      "Gamma" + std::to_string(4 * p), labels,
      [p, lpow](std::size_t a, std::size_t b) {
        long j = static_cast<long>(a) % p, i = static_cast<long>(a) / p;
        long k = static_cast<long>(b) % p, m = static_cast<long>(b) / p;
        return static_cast<std::size_t>(mod(j + k * lpow[i], p) + p * ((i + m) % 4));
      },
      {1, static_cast<std::size_t>(p)}, 4 * p);
}

std::vector<GroupRep> cyclic_irreps(const FiniteGroup& g, const std::vector<int>& orders) {
  const int cond = g.conductor;
  std::vector<GroupRep> out;
  std::vector<long> k(orders.size(), 0);
  while (true) {
    GroupRep r;
    r.dim = 1;
    r.label = "chi";
    for (std::size_t f = 0; f < orders.size(); ++f) {
      r.label += (f ? "," : "_") + std::to_string(k[f]);
      r.generator_images.push_back(scalar(cond, root(cond, orders[f], k[f])));
    }
    out.push_back(r);
    std::size_t f = orders.size();
    while (f-- > 0) {
      if (++k[f] < orders[f]) break;
      k[f] = 0;
    }
    if (f == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

std::vector<GroupRep> dihedral_irreps(const FiniteGroup& g, int n) {
  const int c = g.conductor;
  const CycNumber one(c, 1L), zero(c), m1(c, -1L);
  std::vector<GroupRep> out;
  std::vector<long> a_signs = n % 2 ? std::vector<long>{1} : std::vector<long>{1, -1};
  for (long sa : a_signs)
    for (long sy : {1L, -1L})
      out.push_back({"lin_a" + std::to_string(sa) + "_y" + std::to_string(sy), 1,
                     {scalar(c, CycNumber(c, sa)), scalar(c, CycNumber(c, sy))}});
  for (int k = 1; 2 * k < n; ++k) {
    out.push_back({"rho_" + std::to_string(k), 2,
                   {mat(c, {{root(c, n, k), zero}, {zero, root(c, n, -k)}}), mat(c, {{zero, one}, {one, zero}})}});
  }
  return out;
}

std::vector<GroupRep> dicyclic_irreps(const FiniteGroup& g, int n) {
  const int c = g.conductor;
  const CycNumber one(c, 1L), zero(c);
  std::vector<GroupRep> out;
  // generators are (y, x)
  std::vector<long> y_signs = n % 2 ? std::vector<long>{1} : std::vector<long>{1, -1};
  for (long sy : y_signs)
    for (int m = 0; m < 4; ++m)
      out.push_back({"lin_y" + std::to_string(sy) + "_x" + std::to_string(m), 1,
                     {scalar(c, CycNumber(c, sy)), scalar(c, root(c, 4, m))}});
  for (int k = 1; 2 * k < n; ++k) {
    for (long eps : {1L, -1L}) {
      out.push_back({"rho_" + std::to_string(k) + (eps > 0 ? "+" : "-"), 2,
                     {mat(c, {{root(c, n, k), zero}, {zero, root(c, n, -k)}}), mat(c, {{zero, CycNumber(c, eps)}, {one, zero}})}});
    }
  }
  return out;
}

std::vector<GroupRep> quaternion_irreps(const FiniteGroup& g) {
  const int c = g.conductor;
  const CycNumber one(c, 1L), zero(c), m1(c, -1L);
  std::vector<GroupRep> out;
  for (long sx : {1L, -1L})
    for (long sy : {1L, -1L})
      out.push_back({"lin_x" + std::to_string(sx) + "_y" + std::to_string(sy), 1,
                     {scalar(c, CycNumber(c, sx)), scalar(c, CycNumber(c, sy))}});
  out.push_back({"rho", 2, {mat(c, {{root(c, 4, 1), zero}, {zero, root(c, 4, -1)}}), mat(c, {{zero, m1}, {one, zero}})}});
  return out;
}

std::vector<GroupRep> gamma4p_irreps(const FiniteGroup& g, int p) {
  const int c = g.conductor;
  const long l = (p - 1) / 2;
  const CycNumber one(c, 1L), zero(c);
  std::vector<GroupRep> out;
  // generators are (y, x)
  for (int m = 0; m < 4; ++m) out.push_back({"alpha_" + std::to_string(m), 1, {scalar(c, one), scalar(c, root(c, 4, m))}});
  // one four-dimensional module per orbit of multiplication by l on Z_p^*
  std::vector<bool> used(p, false);
  for (long s = 1; s < p; ++s) {
    if (used[s]) continue;
    long t = s;
    for (int i = 0; i < 4; ++i) {
      used[t] = true;
      t = mod(t * l, p);
    }
    Matrix y(4, 4, c), x(4, 4, c);
    for (int j = 0; j < 4; ++j) {
      long e = s;
      for (int i = 0; i < 4 - j; ++i) e = mod(e * l, p);  // s l^(4-j)
      y(j, j) = root(c, p, e);
      x((j + 1) % 4, j) = one;
    }
    out.push_back({"psi_" + std::to_string(s), 4, {y, x}});
  }
  return out;
}

}  // namespace hopfkit
