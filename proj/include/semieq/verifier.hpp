#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "semieq/cfunc.hpp"
#include "semieq/characters.hpp"
#include "semieq/check_report.hpp"
#include "semieq/semigroup.hpp"

namespace semieq {

enum class Family { F1, F2, F3, F4, F5, F6, F7, SUB1, SUB2 };
std::string family_name(Family f);

/// Exhaustive n^2 check of f(x*y*z0) = f(x)g(y) + f(y)g(x).
/// f and g must share a mode; std::invalid_argument otherwise.
CheckReport check_kannappan_sine(const Semigroup& s, int z0, const CFunc& f,
                                 const CFunc& g, double tol = 1e-9);

/// Exhaustive n^2 check of f(x*y*z0) = f(x)g(y) - f(y)g(x).
CheckReport check_sine_subtraction(const Semigroup& s, int z0, const CFunc& f,
                                   const CFunc& g, double tol = 1e-9);

/// Identities every solution pair satisfies. When f(z0) = 0, checks
///   g(z0^2) f(xy) = g(z0)[f(x)g(y) + f(y)g(x)] - f(z0^2) g(xy);
/// when f(z0) != 0, recovers the constant gamma^2 at a pivot pair and checks
///   g(x*y*z0) = g(x)g(y) + gamma^2 f(x)f(y).
/// Requires a solution pair; std::invalid_argument otherwise.
CheckReport check_derived_identities(const Semigroup& s, int z0,
                                     const CFunc& f, const CFunc& g,
                                     double tol = 1e-9);

/// Value constraints at z0 for solution pairs with f != 0 and f(z0) = 0:
/// if f(z0^2) != 0 then g(z0^2) = 0; if {f,g} is linearly independent then
/// g(z0) != 0, and g(z0^2) != 0 whenever f(z0^2) = 0. Vacuous (with a note)
/// when f = 0 or f(z0) != 0.
CheckReport check_nonvanishing(const Semigroup& s, int z0, const CFunc& f,
                               const CFunc& g, double tol = 1e-9);

/// f(xy) = f(yx) for all pairs, plus the ternary consequence
/// f(x*y*u) = f(x*u*y). With a character, additionally checks that
/// f(xy) = f(yx) = 0 for x in I \ P and y outside I.
CheckReport check_centrality(const Semigroup& s, const CFunc& f,
                             const Character* chi = nullptr,
                             double tol = 1e-9);

struct RankReport {
  int rank = 0;
  int count = 0;
  bool full_rank() const { return rank == count; }
};

/// Exact rank of value vectors over the cyclotomic field, optionally
/// restricted to a domain. Exact mode only.
RankReport check_independence(const std::vector<CFunc>& vectors,
                              const ElementSet* domain = nullptr);

struct ClassifyOptions {
  double tol = 1e-8;
  std::set<Family> disabled;  // ablation hook for the completeness harness
};

struct Classification {
  std::optional<Family> primary;
  std::vector<Family> all;
  std::string detail;
  bool unclassified() const { return !primary.has_value(); }
};

/// Decides which solution families a verified pair belongs to, in the fixed
/// trial order F1, F6, F2, F4, F3, F5, F7; primary is the first match and
/// `all` records every match. Requires (f, g) to satisfy the equation
/// (std::invalid_argument otherwise).
Classification classify_solution(const Semigroup& s, int z0, const CFunc& f,
                                 const CFunc& g,
                                 const std::vector<Character>& characters,
                                 const ClassifyOptions& opt = {});

/// Same for the subtraction law: SUB1 (f = 0) or SUB2 (g = c f with f
/// supported off S^2 z0).
Classification classify_subtraction_solution(const Semigroup& s, int z0,
                                             const CFunc& f, const CFunc& g,
                                             const ClassifyOptions& opt = {});

}  // namespace semieq
