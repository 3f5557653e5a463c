#pragma once

#include <string>
#include <vector>

#include "semieq/semigroup.hpp"

namespace semieq {

struct CatalogEntry {
  std::string name;
  Semigroup sg;
};

/// The bundled desk corpus: every semigroup of order <= 3 up to isomorphism
/// plus named constructions (cyclic groups, Klein four-group, nilpotent
/// monoids, zero semigroups, semilattice chains, and the order-6 product
/// c2xn3).
std::vector<CatalogEntry> builtin_catalog();

/// Writes the corpus as .sg files into dir (created if missing); returns the
/// file names written, in order. Rerunning produces identical bytes.
std::vector<std::string> write_catalog(const std::string& dir);

}  // namespace semieq
