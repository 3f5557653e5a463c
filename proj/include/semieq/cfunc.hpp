#pragma once

#include <complex>
#include <string>
#include <vector>

#include "semieq/cyclotomic.hpp"

namespace semieq {

/// Total function S -> C stored as a value vector, either exact (cyclotomic)
/// or floating complex.
struct CFunc {
  enum class Mode { exact, numeric };

  Mode mode = Mode::exact;
  std::vector<CycNum> xv;                 // mode == exact
  std::vector<std::complex<double>> nv;   // mode == numeric

  static CFunc exact(std::vector<CycNum> values);
  static CFunc numeric(std::vector<std::complex<double>> values);
  static CFunc zero(int n) { return exact(std::vector<CycNum>(n, CycNum(0))); }

  bool is_exact() const { return mode == Mode::exact; }
  int size() const {
    return static_cast<int>(is_exact() ? xv.size() : nv.size());
  }
  bool is_zero_func(double tol = 0.0) const;

  /// Numeric image of an exact function (identity on numeric ones).
  CFunc to_float() const;

  std::string str() const;  // comma separated values
};

std::string complex_str(const std::complex<double>& z);

/// Parses comma separated exact values ("1/2, -1, z_4^1").
CFunc parse_exact_values(const std::string& csv);
/// Parses comma separated complex values ("0.5+0.3i, -1, 2i").
CFunc parse_numeric_values(const std::string& csv);

}  // namespace semieq
