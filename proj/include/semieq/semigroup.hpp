#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace semieq {

/// Subset of the elements of a fixed finite semigroup.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(int universe) : bits_(universe, false) {}
  static ElementSet full(int universe) {
    ElementSet s(universe);
    s.bits_.assign(universe, true);
    s.count_ = universe;
    return s;
  }

  int universe() const { return static_cast<int>(bits_.size()); }
  bool contains(int i) const { return bits_[i]; }
  void add(int i) {
    if (!bits_[i]) {
      bits_[i] = true;
      ++count_;
    }
  }
  void remove(int i) {
    if (bits_[i]) {
      bits_[i] = false;
      --count_;
    }
  }
  int count() const { return count_; }
  bool empty() const { return count_ == 0; }
  std::vector<int> elements() const;
  bool subset_of(const ElementSet& o) const;

  ElementSet operator&(const ElementSet& o) const;
  ElementSet operator|(const ElementSet& o) const;
  /// Elements of this set not in o.
  ElementSet minus(const ElementSet& o) const;
  /// Complement within the universe.
  ElementSet complement() const;

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.bits_ == b.bits_;
  }

 private:
  std::vector<bool> bits_;
  int count_ = 0;
};

/// Finite semigroup given by its Cayley table. Associativity is verified at
/// construction; an invalid table is rejected with the failing triple.
class Semigroup {
 public:
  Semigroup(std::vector<std::string> labels,
            std::vector<std::vector<int>> table);

  int order() const { return n_; }
  int mul(int i, int j) const { return table_[i][j]; }
  int mul(int i, int j, int k) const { return table_[table_[i][j]][k]; }
  const std::vector<std::vector<int>>& table() const { return table_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[i]; }
  std::optional<int> find(std::string_view label) const;
  /// Index of the labelled element; throws std::invalid_argument if missing.
  int require(std::string_view label) const;

 private:
  int n_;
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> table_;
};

/// {t*u : t in lhs, u in rhs}.
ElementSet product_set(const Semigroup& s, const ElementSet& lhs,
                       const ElementSet& rhs);
/// S^2 z0 = {x*y*z0 : x,y in S}.
ElementSet square_shift_set(const Semigroup& s, int z0);

/// Parses the text format (order, labels, table rows) or the JSON object form
/// with keys "labels" and "table".
Semigroup parse_semigroup(const std::string& source);
Semigroup load_semigroup(const std::string& path);
std::string serialize_semigroup(const Semigroup& s);

Semigroup make_cyclic(int n);
Semigroup make_left_zero(int n);
Semigroup make_right_zero(int n);
Semigroup make_null(int n);             // all products equal a fixed zero
Semigroup make_semilattice_chain(int n);  // x*y = min(x, y)
Semigroup make_nilpotent_monoid(int k);   // e, x, ..., x^(k-1) = 0
Semigroup direct_product(const Semigroup& a, const Semigroup& b);
Semigroup adjoin_identity(const Semigroup& s);

/// Named entry point used by the CLI: kind in {cyclic, left-zero, right-zero,
/// null, semilattice-chain, nilpotent-monoid}.
Semigroup build_standard(const std::string& kind, int param);

/// Lexicographically minimal Cayley table over all relabelings.
std::vector<int> canonical_table(const Semigroup& s);
bool isomorphic(const Semigroup& a, const Semigroup& b);

/// All semigroups of the given order up to isomorphism (1 <= n <= 4),
/// sorted by canonical table.
std::vector<Semigroup> enumerate_small(int n);

}  // namespace semieq
