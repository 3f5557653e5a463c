#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <string>
#include <vector>

namespace semieq {

using Rational = boost::multiprecision::cpp_rational;

/// Exact element of a cyclotomic field Q(zeta_N).
///
/// The value is stored as coordinates in the power basis
/// 1, z, ..., z^(phi(N)-1) of Q(zeta_N), reduced modulo the N-th cyclotomic
/// polynomial. Every public operation returns a canonical value: the
/// conductor N is minimal for the value, so two CycNum are equal exactly
/// when their representations are identical.
class CycNum {
 public:
  CycNum() : conductor_(1), coeffs_{Rational(0)} {}
  CycNum(int v) : conductor_(1), coeffs_{Rational(v)} {}
  CycNum(long long num, long long den);
  explicit CycNum(Rational r) : conductor_(1), coeffs_{std::move(r)} {}

  /// zeta_N^k (k may be negative or >= N).
  static CycNum root_of_unity(int n, long long k);

  int conductor() const { return conductor_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const { return conductor_ == 1; }
  /// The value as a rational; valid only when is_rational().
  const Rational& rational_value() const;

  CycNum operator-() const;
  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  CycNum& operator*=(const CycNum& o);
  CycNum& operator/=(const CycNum& o);

  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
  friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }

  /// Multiplicative inverse; throws std::domain_error on zero.
  CycNum inverse() const;

  friend bool operator==(const CycNum& a, const CycNum& b) {
    return a.conductor_ == b.conductor_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }
  /// Arbitrary total order (conductor, then coefficients); for containers.
  friend bool operator<(const CycNum& a, const CycNum& b);

  /// Numeric embedding z_N -> exp(2*pi*i/N).
  std::complex<double> to_complex() const;

  /// Human/machine readable form, e.g. "1/2 - 1/2*z_4^1".
  std::string str() const;
  /// Inverse of str(); accepts sums of rational multiples of z_N^k terms.
  static CycNum parse(const std::string& text);

 private:
  CycNum(int conductor, std::vector<Rational> coeffs, bool canonical);

  int conductor_;
  std::vector<Rational> coeffs_;  // length phi(conductor_)
};

/// Euler totient (n >= 1).
int euler_phi(int n);

std::string rational_str(const Rational& r);

}  // namespace semieq
