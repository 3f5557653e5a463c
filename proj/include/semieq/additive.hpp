#pragma once

#include <vector>

#include "semieq/cfunc.hpp"
#include "semieq/cyclotomic.hpp"
#include "semieq/semigroup.hpp"

namespace semieq {

/// Basis of the space of additive maps A (A(xy) = A(x) + A(y)) on a
/// product-closed domain. On a finite semigroup this space is always {0}
/// (x^m = x^(m+r) forces r*A(x) = 0), which the solver derives rather
/// than assumes.
struct AdditiveSpace {
  ElementSet domain;
  std::vector<std::vector<Rational>> basis;  // vectors indexed by element

  int dimension() const { return static_cast<int>(basis.size()); }
};

/// Exact rational nullspace of {A(xy) - A(x) - A(y) = 0 : x,y in domain}.
/// Throws std::invalid_argument if the domain is not closed under products.
AdditiveSpace additive_basis(const Semigroup& s, const ElementSet& domain);

/// All f with f(x*y*z0) = f(x) + f(y), via the additive-shift formula
/// f = A + A(z0), cross-checked against an independent exact nullspace of
/// the equation's own linear system. The two routes must agree (a mismatch
/// throws std::logic_error). On finite semigroups the result is {0}.
std::vector<CFunc> solve_kannappan_additive(const Semigroup& s, int z0);

/// Solution-space basis of the direct linear system {f(x*y*z0)=f(x)+f(y)}.
std::vector<std::vector<Rational>> kannappan_additive_nullspace(
    const Semigroup& s, int z0);

}  // namespace semieq
