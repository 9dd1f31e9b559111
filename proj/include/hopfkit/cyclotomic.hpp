#ifndef HOPFKIT_CYCLOTOMIC_HPP
#define HOPFKIT_CYCLOTOMIC_HPP

// Exact arithmetic in the cyclotomic field Q(zeta_N).
//
// A CycNumber stores its value in the power basis 1, z, ..., z^(phi(N)-1)
// of Q(z) = Q[t]/Phi_N(t), with GMP rationals as coefficients.  The
// representation is canonical, so equality is coefficient equality.

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace hopfkit {

using Rational = mpq_class;
using Integer = mpz_class;

/// "num/den" with decimal integers; the denominator is always written.
std::string rational_to_string(const Rational& r);
/// Accepts "num/den" or a bare integer.  Throws ParseError.
Rational parse_rational(std::string_view text);

int euler_phi(int n);

/// Coefficients of Phi_n, lowest degree first.
std::vector<std::int64_t> cyclotomic_polynomial(int n);

class CycNumber {
 public:
  /// Zero of Q (conductor 1).
  CycNumber();
  /// Zero of Q(zeta_n).
  explicit CycNumber(int conductor);
  CycNumber(int conductor, const Rational& value);
  CycNumber(int conductor, long value) : CycNumber(conductor, Rational(value)) {}

  /// Builds sum_i coeffs[i] * zeta^i for an arbitrary-length coefficient
  /// list, reducing exponents mod N and the result mod Phi_N.
  static CycNumber from_powers(int conductor, const std::vector<Rational>& coeffs);
  /// Takes an already-reduced coefficient vector of length phi(N).
  static CycNumber from_canonical(int conductor, std::vector<Rational> coeffs);
  /// zeta_n^k.
  static CycNumber root_of_unity(int n, std::int64_t k);

  int conductor() const { return conductor_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// Throws InvalidParameter when the value is irrational.
  Rational rational_value() const;

  CycNumber& operator+=(const CycNumber& rhs);
  CycNumber& operator-=(const CycNumber& rhs);
  CycNumber& operator*=(const CycNumber& rhs);
  CycNumber& operator/=(const CycNumber& rhs);

  CycNumber operator-() const;
  CycNumber inverse() const;
  CycNumber pow(std::int64_t e) const;

  /// Human readable, e.g. "1/2 - 3*z12^2".
  std::string str() const;

  friend bool operator==(const CycNumber& a, const CycNumber& b) {
    return a.conductor_ == b.conductor_ && a.coeffs_ == b.coeffs_;
  }

 private:
  int conductor_ = 1;
  std::vector<Rational> coeffs_;

  void check_same(const CycNumber& rhs, const char* op) const;
};

inline CycNumber operator+(CycNumber a, const CycNumber& b) { return a += b; }
inline CycNumber operator-(CycNumber a, const CycNumber& b) { return a -= b; }
inline CycNumber operator*(CycNumber a, const CycNumber& b) { return a *= b; }
inline CycNumber operator/(CycNumber a, const CycNumber& b) { return a /= b; }

/// Image of a in Q(zeta_m) under zeta_N -> zeta_m^(m/N).
CycNumber embed(const CycNumber& a, int m);

/// Adds alpha * b into acc without temporaries where possible.
void add_product(CycNumber& acc, const CycNumber& alpha, const CycNumber& b);

std::ostream& operator<<(std::ostream& os, const CycNumber& x);

int lcm_conductor(int a, int b);

}  // namespace hopfkit

#endif  // HOPFKIT_CYCLOTOMIC_HPP
