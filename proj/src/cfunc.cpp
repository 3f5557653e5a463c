#include "semieq/cfunc.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace semieq {

CFunc CFunc::exact(std::vector<CycNum> values) {
  CFunc f;
  f.mode = Mode::exact;
  f.xv = std::move(values);
  return f;
}

CFunc CFunc::numeric(std::vector<std::complex<double>> values) {
  CFunc f;
  f.mode = Mode::numeric;
  f.nv = std::move(values);
  return f;
}

bool CFunc::is_zero_func(double tol) const {
  if (is_exact()) {
    for (const auto& v : xv)
      if (!v.is_zero()) return false;
    return true;
  }
  for (const auto& v : nv)
    if (std::abs(v) > tol) return false;
  return true;
}

CFunc CFunc::to_float() const {
  if (!is_exact()) return *this;
  std::vector<std::complex<double>> vals;
  vals.reserve(xv.size());
  for (const auto& v : xv) vals.push_back(v.to_complex());
  return numeric(std::move(vals));
}

std::string CFunc::str() const {
  std::ostringstream os;
  int n = size();
  for (int i = 0; i < n; ++i) {
    if (i) os << ", ";
    os << (is_exact() ? xv[i].str() : complex_str(nv[i]));
  }
  return os.str();
}

std::string complex_str(const std::complex<double>& z) {
  std::ostringstream os;
  os.precision(12);
  os << z.real();
  if (z.imag() >= 0)
    os << "+" << z.imag() << "i";
  else
    os << "-" << -z.imag() << "i";
  return os.str();
}

namespace {

std::vector<std::string> split_csv(const std::string& csv) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : csv) {
    if (c == ',') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

std::complex<double> parse_complex(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw std::invalid_argument("empty complex literal");
  // forms: a, ai, a+bi, a-bi, i, -i
  size_t pos = 0;
  auto read_signed = [&]() -> double {
    double sign = 1;
    while (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      if (s[pos] == '-') sign = -sign;
      ++pos;
    }
    if (pos < s.size() && s[pos] == 'i') return sign;  // caller consumes 'i'
    size_t used = 0;
    double v = std::stod(s.substr(pos), &used);
    if (used == 0) throw std::invalid_argument("bad complex literal: " + raw);
    pos += used;
    return sign * v;
  };
  double re = 0, im = 0;
  double first = read_signed();
  if (pos < s.size() && s[pos] == 'i') {
    ++pos;
    im = first;
  } else {
    re = first;
    if (pos < s.size()) {
      double second = read_signed();
      if (pos >= s.size() || s[pos] != 'i')
        throw std::invalid_argument("bad complex literal: " + raw);
      ++pos;
      im = second;
    }
  }
  if (pos != s.size())
    throw std::invalid_argument("bad complex literal: " + raw);
  return {re, im};
}

}  // namespace

CFunc parse_exact_values(const std::string& csv) {
  std::vector<CycNum> vals;
  for (const auto& part : split_csv(csv)) vals.push_back(CycNum::parse(part));
  return CFunc::exact(std::move(vals));
}

CFunc parse_numeric_values(const std::string& csv) {
  std::vector<std::complex<double>> vals;
  for (const auto& part : split_csv(csv)) vals.push_back(parse_complex(part));
  return CFunc::numeric(std::move(vals));
}

}  // namespace semieq
