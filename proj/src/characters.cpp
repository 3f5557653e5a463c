#include "semieq/characters.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace semieq {

int element_cycle_length(const Semigroup& s, int x) {
  std::vector<int> seen_at(s.order(), -1);
  int cur = x, step = 0;
  for (;;) {
    if (seen_at[cur] >= 0) return step - seen_at[cur];
    seen_at[cur] = step;
    cur = s.mul(cur, x);
    ++step;
  }
}

int character_conductor(const Semigroup& s) {
  int l = 1;
  for (int x = 0; x < s.order(); ++x)
    l = std::lcm(l, element_cycle_length(s, x));
  return l;
}

ElementSet null_space_of(const Semigroup& s,
                         const std::vector<CycNum>& values) {
  ElementSet z(s.order());
  for (int i = 0; i < s.order(); ++i)
    if (values[i].is_zero()) z.add(i);
  return z;
}

ElementSet prime_set_of(const Semigroup& s, const ElementSet& null_set,
                        const ElementSet& null_square) {
  ElementSet prime(s.order());
  if (null_set.empty()) return prime;
  ElementSet frontier = null_set.minus(null_square);
  ElementSet outside = null_set.complement();
  for (int p : frontier.elements()) {
    bool good = true;
    for (int u : outside.elements()) {
      if (!good) break;
      if (!frontier.contains(s.mul(u, p))) {
        good = false;
        break;
      }
      for (int v : outside.elements()) {
        if (!frontier.contains(s.mul(p, v)) ||
            !frontier.contains(s.mul(u, s.mul(p, v)))) {
          good = false;
          break;
        }
      }
    }
    if (good) prime.add(p);
  }
  return prime;
}

Character make_character(const Semigroup& s, std::vector<CycNum> values) {
  if (static_cast<int>(values.size()) != s.order())
    throw std::invalid_argument("character value vector has wrong length");
  bool nonzero = false;
  for (const auto& v : values) nonzero |= !v.is_zero();
  if (!nonzero)
    throw std::invalid_argument("the zero function is not an exponential");
  for (int i = 0; i < s.order(); ++i)
    for (int j = 0; j < s.order(); ++j)
      if (values[s.mul(i, j)] != values[i] * values[j])
        throw std::invalid_argument("values are not multiplicative at (" +
                                    s.label(i) + ", " + s.label(j) + ")");
  Character chi;
  chi.values = std::move(values);
  chi.null_set = null_space_of(s, chi.values);
  chi.null_square = product_set(s, chi.null_set, chi.null_set);
  chi.prime_set = prime_set_of(s, chi.null_set, chi.null_square);
  return chi;
}

namespace {

void enumerate_rec(const Semigroup& s,
                   const std::vector<std::vector<CycNum>>& candidates,
                   std::vector<CycNum>& acc, int next,
                   std::vector<std::vector<CycNum>>& out) {
  int n = s.order();
  if (next == n) {
    for (const auto& v : acc)
      if (!v.is_zero()) {
        out.push_back(acc);
        return;
      }
    return;  // the zero function is excluded
  }
  for (const CycNum& value : candidates[next]) {
    acc[next] = value;
    bool ok = true;
    // check every pair whose three involved values are now all assigned
    for (int i = 0; i <= next && ok; ++i)
      for (int j = 0; j <= next && ok; ++j) {
        int ij = s.mul(i, j);
        if (ij > next) continue;
        ok = acc[ij] == acc[i] * acc[j];
      }
    if (ok) enumerate_rec(s, candidates, acc, next + 1, out);
  }
}

}  // namespace

std::vector<Character> enumerate_multiplicative(const Semigroup& s) {
  int n = s.order();
  std::vector<std::vector<CycNum>> candidates(n);
  for (int x = 0; x < n; ++x) {
    int r = element_cycle_length(s, x);
    candidates[x].push_back(CycNum(0));
    for (int k = 0; k < r; ++k)
      candidates[x].push_back(CycNum::root_of_unity(r, k));
  }
  std::vector<std::vector<CycNum>> raw;
  std::vector<CycNum> acc(n, CycNum(0));
  enumerate_rec(s, candidates, acc, 0, raw);
  std::sort(raw.begin(), raw.end());
  std::vector<Character> out;
  out.reserve(raw.size());
  for (auto& values : raw) out.push_back(make_character(s, std::move(values)));
  return out;
}

CheckReport check_prime_set_closure(const Semigroup& s, const Character& chi) {
  CheckReport rep;
  rep.equation = "prime-set-closure";
  ElementSet outside = chi.null_set.complement();
  for (int p : chi.prime_set.elements()) {
    for (int u : outside.elements()) {
      for (int v : outside.elements()) {
        int up = s.mul(u, p), pv = s.mul(p, v), upv = s.mul(u, s.mul(p, v));
        for (int w : {up, pv, upv}) {
          if (!chi.prime_set.contains(w))
            rep.fail(u, v,
                     "product " + s.label(w) + " from p=" + s.label(p),
                     "expected in prime set");
        }
      }
    }
  }
  if (chi.prime_set.empty())
    rep.notes.push_back("vacuous: prime set is empty");
  return rep;
}

}  // namespace semieq
