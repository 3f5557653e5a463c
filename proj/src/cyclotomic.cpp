#include "semieq/cyclotomic.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace semieq {
namespace {

using Poly = std::vector<Rational>;  // dense, ascending powers

void poly_trim(Poly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  poly_trim(r);
  return r;
}

// quotient and remainder of a by b (b nonzero)
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b) {
  poly_trim(a);
  Poly q(std::max<size_t>(1, a.size() > b.size() - 1 ? a.size() - b.size() + 1
                                                     : 1),
         Rational(0));
  const Rational& lead = b.back();
  while (a.size() >= b.size() && !(a.size() == 1 && a[0] == 0)) {
    size_t shift = a.size() - b.size();
    Rational c = a.back() / lead;
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    poly_trim(a);
    if (a.size() == 1 && a[0] == 0) break;
    if (a.size() < b.size()) break;
  }
  poly_trim(q);
  return {q, a};
}

std::vector<int> divisors_of(int n) {
  std::vector<int> ds;
  for (int d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      ds.push_back(d);
      if (d != n / d) ds.push_back(n / d);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

std::vector<int> prime_factors(int n) {
  std::vector<int> ps;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

// Phi_n, monic with integer coefficients.
const Poly& cyclotomic_poly(int n) {
  static std::map<int, Poly> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lk(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  for (int d : divisors_of(n)) {
    if (cache.count(d)) continue;
    Poly num(d + 1, Rational(0));  // x^d - 1
    num[0] = -1;
    num[d] = 1;
    Poly den{Rational(1)};
    for (int e : divisors_of(d))
      if (e < d) den = poly_mul(den, cache.at(e));
    auto [q, r] = poly_divmod(num, den);
    poly_trim(r);
    if (!(r.size() == 1 && r[0] == 0))
      throw std::logic_error("cyclotomic polynomial division not exact");
    cache.emplace(d, std::move(q));
  }
  return cache.at(n);
}

// Precomputed data for arithmetic at a fixed conductor.
struct FieldCtx {
  int n = 1;
  int deg = 1;  // phi(n)
  std::vector<Poly> pow;  // pow[e] = power-basis coords of zeta_n^e, e in [0,n)
};

const FieldCtx& field_ctx(int n) {
  static std::map<int, FieldCtx> cache;
  static std::mutex mu;
  const Poly& phi_poly = cyclotomic_poly(n);  // fetched outside our lock
  std::lock_guard<std::mutex> lk(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  FieldCtx ctx;
  ctx.n = n;
  ctx.deg = static_cast<int>(phi_poly.size()) - 1;
  ctx.pow.resize(n);
  ctx.pow[0].assign(ctx.deg, Rational(0));
  ctx.pow[0][0] = 1;
  for (int e = 1; e < n; ++e) {
    const Poly& prev = ctx.pow[e - 1];
    Poly cur(ctx.deg, Rational(0));
    Rational carry = prev[ctx.deg - 1];  // coefficient that overflows to x^deg
    for (int i = ctx.deg - 1; i >= 1; --i) cur[i] = prev[i - 1];
    cur[0] = 0;
    if (carry != 0) {
      // x^deg == -(phi_poly minus its leading term)
      for (int i = 0; i < ctx.deg; ++i) cur[i] -= carry * phi_poly[i];
    }
    ctx.pow[e] = std::move(cur);
  }
  return cache.emplace(n, std::move(ctx)).first->second;
}

// Solve M y = rhs exactly (M given by columns); empty optional if inconsistent.
std::optional<std::vector<Rational>> solve_columns(
    const std::vector<Poly>& cols, const Poly& rhs) {
  size_t rows = rhs.size(), ncols = cols.size();
  std::vector<std::vector<Rational>> m(rows,
                                       std::vector<Rational>(ncols + 1));
  for (size_t r = 0; r < rows; ++r) {
    for (size_t c = 0; c < ncols; ++c) m[r][c] = cols[c][r];
    m[r][ncols] = rhs[r];
  }
  size_t row = 0;
  std::vector<int> pivot_of_col(ncols, -1);
  for (size_t col = 0; col < ncols && row < rows; ++col) {
    size_t sel = row;
    while (sel < rows && m[sel][col] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[row]);
    Rational inv = 1 / m[row][col];
    for (size_t c = col; c <= ncols; ++c) m[row][c] *= inv;
    for (size_t r = 0; r < rows; ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (size_t c = col; c <= ncols; ++c) m[r][c] -= f * m[row][c];
    }
    pivot_of_col[col] = static_cast<int>(row);
    ++row;
  }
  for (size_t r = row; r < rows; ++r)
    if (m[r][ncols] != 0) return std::nullopt;
  std::vector<Rational> y(ncols, Rational(0));
  for (size_t c = 0; c < ncols; ++c)
    if (pivot_of_col[c] >= 0) y[c] = m[pivot_of_col[c]][ncols];
  return y;
}

// Lift coords from conductor m to conductor l (m | l).
Poly lift_coords(int m, const Poly& coeffs, int l) {
  const FieldCtx& ctx = field_ctx(l);
  Poly res(ctx.deg, Rational(0));
  int step = l / m;
  for (size_t j = 0; j < coeffs.size(); ++j) {
    if (coeffs[j] == 0) continue;
    const Poly& basis = ctx.pow[(j * step) % l];
    for (int i = 0; i < ctx.deg; ++i) res[i] += coeffs[j] * basis[i];
  }
  return res;
}

// Reduce (n, coeffs) to the minimal conductor.
void canonicalize(int& n, Poly& coeffs) {
  coeffs.resize(field_ctx(n).deg, Rational(0));
  for (;;) {
    if (n == 1) return;
    bool rational_only = true;
    for (size_t i = 1; i < coeffs.size(); ++i)
      if (coeffs[i] != 0) {
        rational_only = false;
        break;
      }
    if (rational_only) {
      coeffs.resize(1);
      n = 1;
      return;
    }
    bool reduced = false;
    for (int p : prime_factors(n)) {
      int d = n / p;
      const FieldCtx& big = field_ctx(n);
      const FieldCtx& small = field_ctx(d);
      std::vector<Poly> cols(small.deg);
      int step = n / d;
      for (int j = 0; j < small.deg; ++j) cols[j] = big.pow[(j * step) % n];
      auto y = solve_columns(cols, coeffs);
      if (y) {
        n = d;
        coeffs = std::move(*y);
        coeffs.resize(small.deg, Rational(0));
        reduced = true;
        break;
      }
    }
    if (!reduced) return;
  }
}

int parse_int(const std::string& s, size_t& pos) {
  size_t start = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
    ++pos;
  if (pos == start) throw std::invalid_argument("expected integer in: " + s);
  return std::stoi(s.substr(start, pos - start));
}

}  // namespace

int euler_phi(int n) {
  if (n < 1) throw std::invalid_argument("euler_phi: n must be positive");
  int result = n, m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

std::string rational_str(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

CycNum::CycNum(long long num, long long den) : conductor_(1) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  coeffs_ = {Rational(num) / Rational(den)};
}

CycNum::CycNum(int conductor, std::vector<Rational> coeffs, bool canonical)
    : conductor_(conductor), coeffs_(std::move(coeffs)) {
  if (!canonical) canonicalize(conductor_, coeffs_);
}

CycNum CycNum::root_of_unity(int n, long long k) {
  if (n < 1) throw std::invalid_argument("root_of_unity: order must be >= 1");
  long long e = k % n;
  if (e < 0) e += n;
  Poly coeffs = field_ctx(n).pow[static_cast<size_t>(e)];
  return CycNum(n, std::move(coeffs), false);
}

bool CycNum::is_zero() const {
  return conductor_ == 1 && coeffs_[0] == 0;
}

const Rational& CycNum::rational_value() const {
  if (conductor_ != 1)
    throw std::domain_error("rational_value on non-rational cyclotomic");
  return coeffs_[0];
}

CycNum CycNum::operator-() const {
  CycNum r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CycNum& CycNum::operator+=(const CycNum& o) {
  int l = std::lcm(conductor_, o.conductor_);
  Poly a = lift_coords(conductor_, coeffs_, l);
  Poly b = lift_coords(o.conductor_, o.coeffs_, l);
  for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  conductor_ = l;
  coeffs_ = std::move(a);
  canonicalize(conductor_, coeffs_);
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) { return *this += -o; }

CycNum& CycNum::operator*=(const CycNum& o) {
  int l = std::lcm(conductor_, o.conductor_);
  Poly a = lift_coords(conductor_, coeffs_, l);
  Poly b = lift_coords(o.conductor_, o.coeffs_, l);
  const FieldCtx& ctx = field_ctx(l);
  Poly res(ctx.deg, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      Rational c = a[i] * b[j];
      const Poly& basis = ctx.pow[(i + j) % l];
      for (int t = 0; t < ctx.deg; ++t) res[t] += c * basis[t];
    }
  }
  conductor_ = l;
  coeffs_ = std::move(res);
  canonicalize(conductor_, coeffs_);
  return *this;
}

CycNum CycNum::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (conductor_ == 1) return CycNum(Rational(1 / coeffs_[0]));
  // extended Euclid for a(x) modulo the cyclotomic polynomial
  Poly r0 = cyclotomic_poly(conductor_), r1 = coeffs_;
  poly_trim(r1);
  Poly t0{Rational(0)}, t1{Rational(1)};
  while (!(r1.size() == 1 && r1[0] == 0)) {
    auto [q, rem] = poly_divmod(r0, r1);
    Poly t2_sub = poly_mul(q, t1);
    Poly t2 = t0;
    t2.resize(std::max(t2.size(), t2_sub.size()), Rational(0));
    for (size_t i = 0; i < t2_sub.size(); ++i) t2[i] -= t2_sub[i];
    poly_trim(t2);
    r0 = std::move(r1);
    r1 = std::move(rem);
    t0 = std::move(t1);
    t1 = std::move(t2);
    if (r0.size() == 1) break;  // gcd reached a nonzero constant
  }
  if (r0.size() != 1 || r0[0] == 0)
    throw std::logic_error("cyclotomic inverse: unexpected gcd");
  Rational scale = 1 / r0[0];
  for (auto& c : t0) c *= scale;
  auto [q2, rem2] = poly_divmod(t0, cyclotomic_poly(conductor_));
  (void)q2;
  rem2.resize(field_ctx(conductor_).deg, Rational(0));
  return CycNum(conductor_, std::move(rem2), false);
}

CycNum& CycNum::operator/=(const CycNum& o) { return *this *= o.inverse(); }

bool operator<(const CycNum& a, const CycNum& b) {
  if (a.conductor_ != b.conductor_) return a.conductor_ < b.conductor_;
  return a.coeffs_ < b.coeffs_;
}

std::complex<double> CycNum::to_complex() const {
  std::complex<double> sum(0.0, 0.0);
  for (size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] == 0) continue;
    double c = coeffs_[j].convert_to<double>();
    double angle = 2.0 * std::numbers::pi * static_cast<double>(j) /
                   static_cast<double>(conductor_);
    sum += c * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return sum;
}

std::string CycNum::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] == 0) continue;
    Rational c = coeffs_[j];
    bool neg = c < 0;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    Rational mag = neg ? Rational(-c) : c;
    if (j == 0) {
      os << rational_str(mag);
    } else {
      if (mag != 1) os << rational_str(mag) << "*";
      os << "z_" << conductor_ << "^" << j;
    }
  }
  return os.str();
}

CycNum CycNum::parse(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw std::invalid_argument("empty cyclotomic literal");
  CycNum total(0);
  size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    while (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      if (s[pos] == '-') sign = -sign;
      ++pos;
    }
    if (pos >= s.size())
      throw std::invalid_argument("dangling sign in: " + text);
    Rational coeff(1);
    bool saw_number = false;
    if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
      saw_number = true;
      long long num = parse_int(s, pos);
      long long den = 1;
      if (pos < s.size() && s[pos] == '/') {
        ++pos;
        den = parse_int(s, pos);
        if (den == 0) throw std::invalid_argument("zero denominator: " + text);
      }
      coeff = Rational(num) / Rational(den);
    }
    CycNum term(Rational(sign) * coeff);
    bool saw_z = false;
    if (pos < s.size() && (s[pos] == '*' || s[pos] == 'z')) {
      if (s[pos] == '*') ++pos;
      if (pos >= s.size() || s[pos] != 'z')
        throw std::invalid_argument("expected z_N^k term in: " + text);
      ++pos;
      if (pos >= s.size() || s[pos] != '_')
        throw std::invalid_argument("expected z_N^k term in: " + text);
      ++pos;
      int n = parse_int(s, pos);
      long long k = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        k = parse_int(s, pos);
      }
      term *= root_of_unity(n, k);
      saw_z = true;
    }
    if (!saw_number && !saw_z)
      throw std::invalid_argument("unparsable term in: " + text);
    total += term;
  }
  return total;
}

}  // namespace semieq
