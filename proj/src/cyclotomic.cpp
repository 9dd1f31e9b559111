#include "hopfkit/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

#include "hopfkit/errors.hpp"

namespace hopfkit {

namespace {

// Per-conductor tables.  power_table[r] holds t^r mod Phi_N for 0 <= r < N.
struct FieldData {
  int n = 1;
  int phi = 1;
  std::vector<std::int64_t> poly;
  std::vector<std::vector<std::int64_t>> power_table;
};

std::vector<std::int64_t> poly_exact_div(std::vector<std::int64_t> num,
                                         const std::vector<std::int64_t>& den) {
  // den is monic
  const int dn = static_cast<int>(den.size()) - 1;
  const int top = static_cast<int>(num.size()) - 1;
  if (top < dn) return {0};
  std::vector<std::int64_t> quot(top - dn + 1, 0);
  for (int k = top; k >= dn; --k) {
    const std::int64_t c = num[k];
    quot[k - dn] = c;
    if (c != 0) {
      for (int i = 0; i <= dn; ++i) num[k - dn + i] -= c * den[i];
    }
  }
  for (int i = 0; i < dn; ++i) {
    if (num[i] != 0) throw Error("cyclotomic_polynomial: inexact division");
  }
  return quot;
}

FieldData build_field(int n) {
  FieldData f;
  f.n = n;
  f.poly = cyclotomic_polynomial(n);
  f.phi = static_cast<int>(f.poly.size()) - 1;
  f.power_table.assign(n, std::vector<std::int64_t>(f.phi, 0));
  std::vector<std::int64_t> cur(f.phi, 0);
  cur[0] = 1;
  for (int r = 0; r < n; ++r) {
    f.power_table[r] = cur;
    // multiply by t, reduce t^phi = -sum poly[i] t^i
    std::int64_t top = cur[f.phi - 1];
    for (int i = f.phi - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0) {
      for (int i = 0; i < f.phi; ++i) cur[i] -= top * f.poly[i];
    }
  }
  return f;
}

const FieldData& field(int n) {
  if (n < 1) throw InvalidParameter("conductor must be positive, got " + std::to_string(n));
  thread_local const FieldData* last = nullptr;
  if (last != nullptr && last->n == n) return *last;
  static std::mutex mu;
  static std::map<int, std::unique_ptr<FieldData>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) {
    it = cache.emplace(n, std::make_unique<FieldData>(build_field(n))).first;
  }
  last = it->second.get();
  return *last;
}

bool all_zero_from(const std::vector<Rational>& v, std::size_t start) {
  for (std::size_t i = start; i < v.size(); ++i) {
    if (sgn(v[i]) != 0) return false;
  }
  return true;
}

// Solves M x = rhs over Q by Gauss-Jordan; M is square and invertible.
std::vector<Rational> solve_rational(std::vector<std::vector<Rational>> m, std::vector<Rational> rhs) {
  const std::size_t n = rhs.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && sgn(m[piv][col]) == 0) ++piv;
    if (piv == n) throw DivisionByZero("inverse of zero in cyclotomic field");
    std::swap(m[piv], m[col]);
    std::swap(rhs[piv], rhs[col]);
    Rational inv = 1 / m[col][col];
    for (std::size_t j = col; j < n; ++j) m[col][j] *= inv;
    rhs[col] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sgn(m[r][col]) == 0) continue;
      Rational f = m[r][col];
      for (std::size_t j = col; j < n; ++j) m[r][j] -= f * m[col][j];
      rhs[r] -= f * rhs[col];
    }
  }
  return rhs;
}

}  // namespace

std::string rational_to_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ParseError("empty rational");
  auto valid_int = [](std::string_view t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i) {
      if (t[i] < '0' || t[i] > '9') return false;
    }
    return true;
  };
  auto slash = s.find('/');
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') {
    throw ParseError("malformed rational '" + s + "'");
  }
  if (num[0] == '+') num.erase(0, 1);
  Integer d(den);
  if (d == 0) throw ParseError("zero denominator in '" + s + "'");
  Rational r(Integer(num), d);
  r.canonicalize();
  return r;
}

int euler_phi(int n) {
  if (n < 1) throw InvalidParameter("euler_phi of non-positive integer");
  int result = n;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

std::vector<std::int64_t> cyclotomic_polynomial(int n) {
  if (n < 1) throw InvalidParameter("cyclotomic_polynomial needs n >= 1");
  static std::mutex mu;
  static std::map<int, std::vector<std::int64_t>> memo;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
  }
  std::vector<std::int64_t> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) num = poly_exact_div(num, cyclotomic_polynomial(d));
  }
  std::lock_guard<std::mutex> lock(mu);
  memo[n] = num;
  return num;
}

int lcm_conductor(int a, int b) { return std::lcm(a, b); }

CycNumber::CycNumber() : conductor_(1), coeffs_(1) {}

CycNumber::CycNumber(int conductor) : conductor_(conductor), coeffs_(field(conductor).phi) {}

CycNumber::CycNumber(int conductor, const Rational& value) : CycNumber(conductor) {
  coeffs_[0] = value;
}

CycNumber CycNumber::from_canonical(int conductor, std::vector<Rational> coeffs) {
  const FieldData& f = field(conductor);
  if (static_cast<int>(coeffs.size()) != f.phi) {
    throw InvalidParameter("coefficient vector length " + std::to_string(coeffs.size()) +
                           " does not match phi(" + std::to_string(conductor) + ") = " +
                           std::to_string(f.phi));
  }
  CycNumber x(conductor);
  for (auto& c : coeffs) c.canonicalize();
  x.coeffs_ = std::move(coeffs);
  return x;
}

CycNumber CycNumber::from_powers(int conductor, const std::vector<Rational>& coeffs) {
  const FieldData& f = field(conductor);
  CycNumber x(conductor);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (sgn(coeffs[k]) == 0) continue;
    const auto& row = f.power_table[k % f.n];
    for (int i = 0; i < f.phi; ++i) {
      if (row[i] != 0) x.coeffs_[i] += coeffs[k] * row[i];
    }
  }
  return x;
}

CycNumber CycNumber::root_of_unity(int n, std::int64_t k) {
  const FieldData& f = field(n);
  std::int64_t r = k % n;
  if (r < 0) r += n;
  CycNumber x(n);
  const auto& row = f.power_table[r];
  for (int i = 0; i < f.phi; ++i) x.coeffs_[i] = row[i];
  return x;
}

bool CycNumber::is_zero() const { return all_zero_from(coeffs_, 0); }

bool CycNumber::is_one() const { return coeffs_[0] == 1 && all_zero_from(coeffs_, 1); }

bool CycNumber::is_rational() const { return all_zero_from(coeffs_, 1); }

Rational CycNumber::rational_value() const {
  if (!is_rational()) throw InvalidParameter("value " + str() + " is not rational");
  return coeffs_[0];
}

void CycNumber::check_same(const CycNumber& rhs, const char* op) const {
  if (conductor_ != rhs.conductor_) {
    throw ConductorMismatch(std::string("conductor mismatch in ") + op + ": " +
                            std::to_string(conductor_) + " vs " + std::to_string(rhs.conductor_));
  }
}

CycNumber& CycNumber::operator+=(const CycNumber& rhs) {
  check_same(rhs, "+");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(rhs.coeffs_[i]) != 0) coeffs_[i] += rhs.coeffs_[i];
  }
  return *this;
}

CycNumber& CycNumber::operator-=(const CycNumber& rhs) {
  check_same(rhs, "-");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(rhs.coeffs_[i]) != 0) coeffs_[i] -= rhs.coeffs_[i];
  }
  return *this;
}

CycNumber& CycNumber::operator*=(const CycNumber& rhs) {
  check_same(rhs, "*");
  if (rhs.is_rational()) {
    const Rational& s = rhs.coeffs_[0];
    if (sgn(s) == 0) {
      for (auto& c : coeffs_) c = 0;
    } else if (s != 1) {
      for (auto& c : coeffs_) {
        if (sgn(c) != 0) c *= s;
      }
    }
    return *this;
  }
  if (is_rational()) {
    Rational s = coeffs_[0];
    coeffs_ = rhs.coeffs_;
    if (s != 1) {
      for (auto& c : coeffs_) {
        if (sgn(c) != 0) c *= s;
      }
    }
    return *this;
  }
  const FieldData& f = field(conductor_);
  const int phi = f.phi;
  std::vector<Rational> prod(2 * phi - 1);
  for (int i = 0; i < phi; ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (int j = 0; j < phi; ++j) {
      if (sgn(rhs.coeffs_[j]) == 0) continue;
      prod[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  for (int i = 0; i < phi; ++i) coeffs_[i] = prod[i];
  for (int k = phi; k < 2 * phi - 1; ++k) {
    if (sgn(prod[k]) == 0) continue;
    const auto& row = f.power_table[k % f.n];
    for (int i = 0; i < phi; ++i) {
      if (row[i] != 0) coeffs_[i] += prod[k] * row[i];
    }
  }
  return *this;
}

CycNumber& CycNumber::operator/=(const CycNumber& rhs) {
  check_same(rhs, "/");
  return *this *= rhs.inverse();
}

CycNumber CycNumber::operator-() const {
  CycNumber x = *this;
  for (auto& c : x.coeffs_) {
    if (sgn(c) != 0) c = -c;
  }
  return x;
}

CycNumber CycNumber::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in Q(zeta_" + std::to_string(conductor_) + ")");
  if (is_rational()) return CycNumber(conductor_, Rational(1 / coeffs_[0]));
  // Column j of the multiplication-by-this matrix is this * z^j.
  const FieldData& f = field(conductor_);
  const int phi = f.phi;
  std::vector<std::vector<Rational>> m(phi, std::vector<Rational>(phi));
  CycNumber col = *this;
  CycNumber z = root_of_unity(conductor_, 1);
  for (int j = 0; j < phi; ++j) {
    for (int i = 0; i < phi; ++i) m[i][j] = col.coeffs_[i];
    col *= z;
  }
  std::vector<Rational> rhs(phi);
  rhs[0] = 1;
  return from_canonical(conductor_, solve_rational(std::move(m), std::move(rhs)));
}

CycNumber CycNumber::pow(std::int64_t e) const {
  CycNumber base = e < 0 ? inverse() : *this;
  std::uint64_t k = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
  CycNumber result(conductor_, Rational(1));
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

std::string CycNumber::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << "z" << conductor_;
      if (i > 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  return os.str();
}

CycNumber embed(const CycNumber& a, int m) {
  if (m < 1 || m % a.conductor() != 0) {
    throw InvalidParameter("cannot embed Q(zeta_" + std::to_string(a.conductor()) + ") into Q(zeta_" +
                           std::to_string(m) + ")");
  }
  if (m == a.conductor()) return a;
  const int step = m / a.conductor();
  std::vector<Rational> powers(static_cast<std::size_t>(step) * a.coeffs().size());
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) powers[i * step] = a.coeffs()[i];
  return CycNumber::from_powers(m, powers);
}

void add_product(CycNumber& acc, const CycNumber& alpha, const CycNumber& b) {
  if (alpha.is_zero() || b.is_zero()) return;
  if (alpha.is_rational() && alpha.coeffs()[0] == 1) {
    acc += b;
    return;
  }
  acc += alpha * b;
}

std::ostream& operator<<(std::ostream& os, const CycNumber& x) { return os << x.str(); }

}  // namespace hopfkit
