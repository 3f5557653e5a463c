#include "semieq/semigroup.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace semieq {

std::vector<int> ElementSet::elements() const {
  std::vector<int> out;
  out.reserve(count_);
  for (int i = 0; i < universe(); ++i)
    if (bits_[i]) out.push_back(i);
  return out;
}

bool ElementSet::subset_of(const ElementSet& o) const {
  for (int i = 0; i < universe(); ++i)
    if (bits_[i] && !o.bits_[i]) return false;
  return true;
}

ElementSet ElementSet::operator&(const ElementSet& o) const {
  ElementSet r(universe());
  for (int i = 0; i < universe(); ++i)
    if (bits_[i] && o.bits_[i]) r.add(i);
  return r;
}

ElementSet ElementSet::operator|(const ElementSet& o) const {
  ElementSet r(universe());
  for (int i = 0; i < universe(); ++i)
    if (bits_[i] || o.bits_[i]) r.add(i);
  return r;
}

ElementSet ElementSet::minus(const ElementSet& o) const {
  ElementSet r(universe());
  for (int i = 0; i < universe(); ++i)
    if (bits_[i] && !o.bits_[i]) r.add(i);
  return r;
}

ElementSet ElementSet::complement() const {
  ElementSet r(universe());
  for (int i = 0; i < universe(); ++i)
    if (!bits_[i]) r.add(i);
  return r;
}

Semigroup::Semigroup(std::vector<std::string> labels,
                     std::vector<std::vector<int>> table)
    : n_(static_cast<int>(labels.size())),
      labels_(std::move(labels)),
      table_(std::move(table)) {
  if (n_ == 0) throw std::invalid_argument("semigroup must be nonempty");
  std::set<std::string> distinct(labels_.begin(), labels_.end());
  if (static_cast<int>(distinct.size()) != n_)
    throw std::invalid_argument("element labels must be distinct");
  if (static_cast<int>(table_.size()) != n_)
    throw std::invalid_argument("table must have one row per element");
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != n_)
      throw std::invalid_argument("table row has wrong length");
    for (int v : row)
      if (v < 0 || v >= n_)
        throw std::invalid_argument("table entry out of range");
  }
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      for (int k = 0; k < n_; ++k)
        if (table_[table_[i][j]][k] != table_[i][table_[j][k]])
          throw std::invalid_argument(
              "associativity fails at (" + labels_[i] + ", " + labels_[j] +
              ", " + labels_[k] + ")");
}

std::optional<int> Semigroup::find(std::string_view label) const {
  for (int i = 0; i < n_; ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

int Semigroup::require(std::string_view label) const {
  auto i = find(label);
  if (!i)
    throw std::invalid_argument("unknown element label: " +
                                std::string(label));
  return *i;
}

ElementSet product_set(const Semigroup& s, const ElementSet& lhs,
                       const ElementSet& rhs) {
  ElementSet out(s.order());
  for (int t : lhs.elements())
    for (int u : rhs.elements()) out.add(s.mul(t, u));
  return out;
}

ElementSet square_shift_set(const Semigroup& s, int z0) {
  ElementSet all = ElementSet::full(s.order());
  ElementSet z(s.order());
  z.add(z0);
  return product_set(s, product_set(s, all, all), z);
}

namespace {

Semigroup from_label_table(const std::vector<std::string>& labels,
                           const std::vector<std::vector<std::string>>& rows) {
  int n = static_cast<int>(labels.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n)
      throw std::invalid_argument("table row " + std::to_string(i + 1) +
                                  " has wrong length");
    for (int j = 0; j < n; ++j) {
      auto it = std::find(labels.begin(), labels.end(), rows[i][j]);
      if (it == labels.end())
        throw std::invalid_argument("unknown label in table: " + rows[i][j]);
      table[i][j] = static_cast<int>(it - labels.begin());
    }
  }
  return Semigroup(labels, table);
}

Semigroup parse_json_form(const std::string& source) {
  nlohmann::json j = nlohmann::json::parse(source);
  if (!j.contains("labels") || !j.contains("table"))
    throw std::invalid_argument("object form needs \"labels\" and \"table\"");
  std::vector<std::string> labels = j["labels"].get<std::vector<std::string>>();
  int n = static_cast<int>(labels.size());
  const auto& jt = j["table"];
  if (!jt.is_array() || static_cast<int>(jt.size()) != n)
    throw std::invalid_argument("table must be an n x n array");
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    if (!jt[i].is_array() || static_cast<int>(jt[i].size()) != n)
      throw std::invalid_argument("table must be an n x n array");
    for (int k = 0; k < n; ++k) {
      const auto& cell = jt[i][k];
      if (cell.is_number_integer()) {
        table[i][k] = cell.get<int>();
      } else if (cell.is_string()) {
        auto it = std::find(labels.begin(), labels.end(),
                            cell.get<std::string>());
        if (it == labels.end())
          throw std::invalid_argument("unknown label in table: " +
                                      cell.get<std::string>());
        table[i][k] = static_cast<int>(it - labels.begin());
      } else {
        throw std::invalid_argument("table entries must be labels or indices");
      }
    }
  }
  return Semigroup(labels, table);
}

}  // namespace

Semigroup parse_semigroup(const std::string& source) {
  size_t first = source.find_first_not_of(" \t\r\n");
  if (first == std::string::npos)
    throw std::invalid_argument("empty semigroup description");
  if (source[first] == '{') return parse_json_form(source);

  std::istringstream in(source);
  int n = 0;
  if (!(in >> n) || n <= 0)
    throw std::invalid_argument("expected positive order on first line");
  std::vector<std::string> labels(n);
  for (auto& l : labels)
    if (!(in >> l)) throw std::invalid_argument("expected " +
                                                std::to_string(n) + " labels");
  std::vector<std::vector<std::string>> rows(n, std::vector<std::string>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!(in >> rows[i][j]))
        throw std::invalid_argument("table truncated at row " +
                                    std::to_string(i + 1));
  std::string extra;
  if (in >> extra)
    throw std::invalid_argument("unexpected trailing token: " + extra);
  return from_label_table(labels, rows);
}

Semigroup load_semigroup(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open semigroup file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_semigroup(buf.str());
}

std::string serialize_semigroup(const Semigroup& s) {
  std::ostringstream os;
  os << s.order() << "\n";
  for (int i = 0; i < s.order(); ++i)
    os << s.label(i) << (i + 1 == s.order() ? "\n" : " ");
  for (int i = 0; i < s.order(); ++i)
    for (int j = 0; j < s.order(); ++j)
      os << s.label(s.mul(i, j)) << (j + 1 == s.order() ? "\n" : " ");
  return os.str();
}

Semigroup make_cyclic(int n) {
  if (n < 1) throw std::invalid_argument("cyclic: order must be positive");
  std::vector<std::string> labels;
  labels.push_back("e");
  if (n > 1) labels.push_back("a");
  for (int i = 2; i < n; ++i) labels.push_back("a" + std::to_string(i));
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return Semigroup(labels, t);
}

Semigroup make_left_zero(int n) {
  if (n < 1) throw std::invalid_argument("left-zero: order must be positive");
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back("l" + std::to_string(i));
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = i;
  return Semigroup(labels, t);
}

Semigroup make_right_zero(int n) {
  if (n < 1) throw std::invalid_argument("right-zero: order must be positive");
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back("r" + std::to_string(i));
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = j;
  return Semigroup(labels, t);
}

Semigroup make_null(int n) {
  if (n < 1) throw std::invalid_argument("null: order must be positive");
  std::vector<std::string> labels;
  labels.push_back("0");
  for (int i = 1; i < n; ++i) labels.push_back("m" + std::to_string(i));
  std::vector<std::vector<int>> t(n, std::vector<int>(n, 0));
  return Semigroup(labels, t);
}

Semigroup make_semilattice_chain(int n) {
  if (n < 1)
    throw std::invalid_argument("semilattice-chain: order must be positive");
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = std::min(i, j);
  return Semigroup(labels, t);
}

Semigroup make_nilpotent_monoid(int k) {
  if (k < 2)
    throw std::invalid_argument("nilpotent-monoid: order must be >= 2");
  // elements e = x^0, x, x^2, ..., x^(k-1) with x^(k-1) absorbing
  std::vector<std::string> labels;
  labels.push_back("e");
  if (k >= 2) labels.push_back("x");
  for (int i = 2; i < k - 1; ++i) labels.push_back("x" + std::to_string(i));
  if (k >= 3) labels.push_back("0");
  std::vector<std::vector<int>> t(k, std::vector<int>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) t[i][j] = std::min(i + j, k - 1);
  return Semigroup(labels, t);
}

Semigroup direct_product(const Semigroup& a, const Semigroup& b) {
  int n = a.order() * b.order();
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int i = 0; i < a.order(); ++i)
    for (int j = 0; j < b.order(); ++j)
      labels.push_back("(" + a.label(i) + "," + b.label(j) + ")");
  auto idx = [&](int i, int j) { return i * b.order() + j; };
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i1 = 0; i1 < a.order(); ++i1)
    for (int j1 = 0; j1 < b.order(); ++j1)
      for (int i2 = 0; i2 < a.order(); ++i2)
        for (int j2 = 0; j2 < b.order(); ++j2)
          t[idx(i1, j1)][idx(i2, j2)] = idx(a.mul(i1, i2), b.mul(j1, j2));
  return Semigroup(labels, t);
}

Semigroup adjoin_identity(const Semigroup& s) {
  int n = s.order();
  std::vector<std::string> labels = s.labels();
  std::string id = "e";
  while (std::find(labels.begin(), labels.end(), id) != labels.end())
    id += "_1";
  labels.push_back(id);
  std::vector<std::vector<int>> t(n + 1, std::vector<int>(n + 1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = s.mul(i, j);
  for (int i = 0; i <= n; ++i) {
    t[i][n] = i;
    t[n][i] = i;
  }
  return Semigroup(labels, t);
}

Semigroup build_standard(const std::string& kind, int param) {
  if (kind == "cyclic") return make_cyclic(param);
  if (kind == "left-zero") return make_left_zero(param);
  if (kind == "right-zero") return make_right_zero(param);
  if (kind == "null") return make_null(param);
  if (kind == "semilattice-chain") return make_semilattice_chain(param);
  if (kind == "nilpotent-monoid") return make_nilpotent_monoid(param);
  throw std::invalid_argument("unknown construction kind: " + kind);
}

namespace {

std::vector<int> flatten(const std::vector<std::vector<int>>& t) {
  std::vector<int> f;
  f.reserve(t.size() * t.size());
  for (const auto& row : t) f.insert(f.end(), row.begin(), row.end());
  return f;
}

std::vector<int> relabeled(const std::vector<std::vector<int>>& t,
                           const std::vector<int>& perm,
                           const std::vector<int>& inv) {
  int n = static_cast<int>(t.size());
  std::vector<int> out(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i * n + j] = perm[t[inv[i]][inv[j]]];
  return out;
}

std::vector<int> canonical_of_table(const std::vector<std::vector<int>>& t) {
  int n = static_cast<int>(t.size());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best = flatten(t);
  do {
    std::vector<int> inv(n);
    for (int i = 0; i < n; ++i) inv[perm[i]] = i;
    std::vector<int> cand = relabeled(t, perm, inv);
    if (cand < best) best = cand;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// DFS over partially filled tables with associativity pruning.
void search_tables(int n, std::vector<std::vector<int>>& t, int cell,
                   std::set<std::vector<int>>& canon) {
  if (cell == n * n) {
    canon.insert(canonical_of_table(t));
    return;
  }
  int row = cell / n, col = cell % n;
  for (int v = 0; v < n; ++v) {
    t[row][col] = v;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j) {
        int ij = t[i][j];
        if (ij < 0) continue;
        for (int k = 0; k < n && ok; ++k) {
          int jk = t[j][k];
          if (jk < 0) continue;
          int left = t[ij][k], right = t[i][jk];
          if (left < 0 || right < 0) continue;
          ok = left == right;
        }
      }
    if (ok) search_tables(n, t, cell + 1, canon);
  }
  t[row][col] = -1;
}

}  // namespace

std::vector<int> canonical_table(const Semigroup& s) {
  return canonical_of_table(s.table());
}

bool isomorphic(const Semigroup& a, const Semigroup& b) {
  if (a.order() != b.order()) return false;
  return canonical_table(a) == canonical_table(b);
}

std::vector<Semigroup> enumerate_small(int n) {
  if (n < 1 || n > 4)
    throw std::invalid_argument("enumerate_small supports 1 <= n <= 4");
  std::vector<std::vector<int>> t(n, std::vector<int>(n, -1));
  std::set<std::vector<int>> canon;
  search_tables(n, t, 0, canon);
  static const char* kNames[] = {"a", "b", "c", "d"};
  std::vector<std::string> labels(kNames, kNames + n);
  std::vector<Semigroup> out;
  out.reserve(canon.size());
  for (const auto& flat : canon) {
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) table[i][j] = flat[i * n + j];
    out.emplace_back(labels, table);
  }
  return out;
}

}  // namespace semieq
