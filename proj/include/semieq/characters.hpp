#pragma once

#include <vector>

#include "semieq/check_report.hpp"
#include "semieq/cyclotomic.hpp"
#include "semieq/semigroup.hpp"

namespace semieq {

/// A nonzero multiplicative function chi: S -> C together with the
/// decomposition of its zero set.
struct Character {
  std::vector<CycNum> values;
  ElementSet null_set;     // I: elements where chi vanishes
  ElementSet null_square;  // I^2: pairwise products within I
  ElementSet prime_set;    // P: see prime_set_of

  const CycNum& operator[](int i) const { return values[i]; }
  bool vanishes_at(int i) const { return values[i].is_zero(); }
};

/// Cycle length r of the monogenic subsemigroup {x, x^2, ...}: the least
/// r >= 1 with x^m = x^(m+r) for some m.
int element_cycle_length(const Semigroup& s, int x);

/// lcm of all element cycle lengths; every nonzero character value is an
/// N-th root of unity for this N.
int character_conductor(const Semigroup& s);

/// Builds a Character (and its set decomposition) from a value vector,
/// verifying multiplicativity on every pair.
Character make_character(const Semigroup& s, std::vector<CycNum> values);

/// All nonzero multiplicative functions on S, exact and complete, in a
/// deterministic order. Completeness comes from backtracking over each
/// element's admissible value set {0} + roots of unity of its cycle length.
std::vector<Character> enumerate_multiplicative(const Semigroup& s);

ElementSet null_space_of(const Semigroup& s, const std::vector<CycNum>& values);
ElementSet prime_set_of(const Semigroup& s, const ElementSet& null_set,
                        const ElementSet& null_square);

/// Exhaustive check that u*p, p*v and u*p*v stay in the prime set for every
/// p in P and u, v outside the null set. This always holds; a failure
/// indicates a bug in the set computation.
CheckReport check_prime_set_closure(const Semigroup& s, const Character& chi);

}  // namespace semieq
