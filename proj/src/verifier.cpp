#include "semieq/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <type_traits>

#include "semieq/linalg.hpp"

namespace semieq {

std::string family_name(Family f) {
  switch (f) {
    case Family::F1: return "F1";
    case Family::F2: return "F2";
    case Family::F3: return "F3";
    case Family::F4: return "F4";
    case Family::F5: return "F5";
    case Family::F6: return "F6";
    case Family::F7: return "F7";
    case Family::SUB1: return "SUB1";
    case Family::SUB2: return "SUB2";
  }
  return "?";
}

std::string CheckReport::str() const {
  std::ostringstream os;
  os << equation << ": " << (pass ? "pass" : "FAIL");
  if (max_residual > 0) os << " (max residual " << max_residual << ")";
  for (const auto& n : notes) os << "\n  note: " << n;
  for (const auto& v : violations)
    os << "\n  violation at (" << v.x << ", " << v.y << "): lhs = " << v.lhs
       << ", rhs = " << v.rhs;
  return os.str();
}

namespace {

struct ExactOps {
  using S = CycNum;
  static bool is_zero(const S& v, double) { return v.is_zero(); }
  static double resid(const S&) { return 0.0; }
  static std::string str(const S& v) { return v.str(); }
};

struct NumOps {
  using S = std::complex<double>;
  static bool is_zero(const S& v, double tol) { return std::abs(v) <= tol; }
  static double resid(const S& v) { return std::abs(v); }
  static std::string str(const S& v) { return complex_str(v); }
};

template <class Ops>
const std::vector<typename Ops::S>& vals(const CFunc& f) {
  if constexpr (std::is_same_v<Ops, ExactOps>)
    return f.xv;
  else
    return f.nv;
}

template <class Ops>
typename Ops::S chi_val(const Character& chi, int i) {
  if constexpr (std::is_same_v<Ops, ExactOps>)
    return chi.values[i];
  else
    return chi.values[i].to_complex();
}

void require_compatible(const Semigroup& s, const CFunc& f, const CFunc& g) {
  if (f.mode != g.mode)
    throw std::invalid_argument("mode mismatch between f and g");
  if (f.size() != s.order() || g.size() != s.order())
    throw std::invalid_argument("value vector length differs from order");
}

void require_total(const Semigroup& s, const CFunc& f) {
  if (f.size() != s.order())
    throw std::invalid_argument("value vector length differs from order");
}

template <class Ops>
CheckReport sine_impl(const Semigroup& s, int z0,
                      const std::vector<typename Ops::S>& f,
                      const std::vector<typename Ops::S>& g, double tol,
                      bool plus) {
  CheckReport rep;
  rep.equation = plus ? "kannappan-sine" : "sine-subtraction";
  int n = s.order();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      auto lhs = f[s.mul(x, y, z0)];
      auto cross = f[y] * g[x];
      auto rhs = plus ? f[x] * g[y] + cross : f[x] * g[y] - cross;
      auto diff = lhs - rhs;
      rep.max_residual = std::max(rep.max_residual, Ops::resid(diff));
      if (!Ops::is_zero(diff, tol))
        rep.fail(x, y, Ops::str(lhs), Ops::str(rhs));
    }
  }
  return rep;
}

// first structurally nonzero entry (exact) or entry of largest modulus
template <class Ops>
int pivot_index(const std::vector<typename Ops::S>& v) {
  if constexpr (std::is_same_v<Ops, ExactOps>) {
    for (size_t i = 0; i < v.size(); ++i)
      if (!v[i].is_zero()) return static_cast<int>(i);
    return -1;
  } else {
    int best = -1;
    double mag = 0;
    for (size_t i = 0; i < v.size(); ++i)
      if (std::abs(v[i]) > mag) {
        mag = std::abs(v[i]);
        best = static_cast<int>(i);
      }
    return best;
  }
}

template <class Ops>
bool vec_match(const std::vector<typename Ops::S>& a,
               const std::vector<typename Ops::S>& b, double tol) {
  if constexpr (std::is_same_v<Ops, ExactOps>) {
    return a == b;
  } else {
    double scale = 1.0;
    for (const auto& v : a) scale = std::max(scale, std::abs(v));
    for (const auto& v : b) scale = std::max(scale, std::abs(v));
    for (size_t i = 0; i < a.size(); ++i)
      if (std::abs(a[i] - b[i]) > tol * scale) return false;
    return true;
  }
}

template <class Ops>
bool vec_is_zero(const std::vector<typename Ops::S>& a, double tol) {
  for (const auto& v : a)
    if (!Ops::is_zero(v, tol)) return false;
  return true;
}

}  // namespace

CheckReport check_kannappan_sine(const Semigroup& s, int z0, const CFunc& f,
                                 const CFunc& g, double tol) {
  require_compatible(s, f, g);
  if (f.is_exact())
    return sine_impl<ExactOps>(s, z0, f.xv, g.xv, tol, true);
  return sine_impl<NumOps>(s, z0, f.nv, g.nv, tol, true);
}

CheckReport check_sine_subtraction(const Semigroup& s, int z0, const CFunc& f,
                                   const CFunc& g, double tol) {
  require_compatible(s, f, g);
  if (f.is_exact())
    return sine_impl<ExactOps>(s, z0, f.xv, g.xv, tol, false);
  return sine_impl<NumOps>(s, z0, f.nv, g.nv, tol, false);
}

namespace {

template <class Ops>
CheckReport derived_impl(const Semigroup& s, int z0,
                         const std::vector<typename Ops::S>& f,
                         const std::vector<typename Ops::S>& g, double tol) {
  CheckReport rep;
  rep.equation = "derived-identities";
  int n = s.order();
  int z02 = s.mul(z0, z0);
  if (Ops::is_zero(f[z0], tol)) {
    rep.notes.push_back("f(z0) = 0: shifted product identity");
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        int xy = s.mul(x, y);
        auto lhs = g[z02] * f[xy];
        auto rhs = g[z0] * (f[x] * g[y] + f[y] * g[x]) - f[z02] * g[xy];
        auto diff = lhs - rhs;
        rep.max_residual = std::max(rep.max_residual, Ops::resid(diff));
        if (!Ops::is_zero(diff, tol))
          rep.fail(x, y, Ops::str(lhs), Ops::str(rhs));
      }
    }
    return rep;
  }
  // recover gamma^2 at a pivot pair with f(x)f(y) != 0; (z0, z0) qualifies
  int px = -1, py = -1;
  if constexpr (std::is_same_v<Ops, ExactOps>) {
    for (int x = 0; x < n && px < 0; ++x)
      for (int y = 0; y < n; ++y)
        if (!(f[x] * f[y]).is_zero()) {
          px = x;
          py = y;
          break;
        }
  } else {
    double best = 0;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (std::abs(f[x] * f[y]) > best) {
          best = std::abs(f[x] * f[y]);
          px = x;
          py = y;
        }
  }
  auto gamma2 = (g[s.mul(px, py, z0)] - g[px] * g[py]) / (f[px] * f[py]);
  rep.notes.push_back("f(z0) != 0: gamma^2 = " + Ops::str(gamma2));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      auto lhs = g[s.mul(x, y, z0)];
      auto rhs = g[x] * g[y] + gamma2 * f[x] * f[y];
      auto diff = lhs - rhs;
      rep.max_residual = std::max(rep.max_residual, Ops::resid(diff));
      if (!Ops::is_zero(diff, tol))
        rep.fail(x, y, Ops::str(lhs), Ops::str(rhs));
    }
  }
  return rep;
}

// rank of the 2 x n system {f, g}: true if linearly independent
template <class Ops>
bool independent2(const std::vector<typename Ops::S>& f,
                  const std::vector<typename Ops::S>& g, double tol) {
  if constexpr (std::is_same_v<Ops, ExactOps>) {
    Mat<CycNum> m{f, g};
    return rank(std::move(m)) == 2;
  } else {
    double scale = 1.0;
    for (const auto& v : f) scale = std::max(scale, std::abs(v));
    for (const auto& v : g) scale = std::max(scale, std::abs(v));
    for (size_t i = 0; i < f.size(); ++i)
      for (size_t j = i + 1; j < f.size(); ++j)
        if (std::abs(f[i] * g[j] - f[j] * g[i]) > tol * scale * scale)
          return true;
    return false;
  }
}

template <class Ops>
CheckReport nonvanishing_impl(const Semigroup& s, int z0,
                              const std::vector<typename Ops::S>& f,
                              const std::vector<typename Ops::S>& g,
                              double tol) {
  CheckReport rep;
  rep.equation = "z0-nonvanishing";
  if (vec_is_zero<Ops>(f, tol)) {
    rep.notes.push_back("vacuous: f = 0");
    return rep;
  }
  if (!Ops::is_zero(f[z0], tol)) {
    rep.notes.push_back("vacuous: f(z0) != 0");
    return rep;
  }
  int z02 = s.mul(z0, z0);
  if (!Ops::is_zero(f[z02], tol)) {
    if (!Ops::is_zero(g[z02], tol))
      rep.fail(z02, z02, "g(z0^2) = " + Ops::str(g[z02]),
               "expected 0 since f(z0^2) != 0");
    else
      rep.notes.push_back("f(z0^2) != 0 and g(z0^2) = 0 as required");
  }
  if (independent2<Ops>(f, g, tol)) {
    if (Ops::is_zero(g[z0], tol))
      rep.fail(z0, z0, "g(z0) = " + Ops::str(g[z0]),
               "expected nonzero under linear independence");
    if (Ops::is_zero(f[z02], tol) && Ops::is_zero(g[z02], tol))
      rep.fail(z02, z02, "g(z0^2) = " + Ops::str(g[z02]),
               "expected nonzero since f(z0^2) = 0");
  } else {
    rep.notes.push_back("f, g dependent: independence clauses vacuous");
  }
  return rep;
}

template <class Ops>
CheckReport centrality_impl(const Semigroup& s,
                            const std::vector<typename Ops::S>& f,
                            const Character* chi, double tol) {
  CheckReport rep;
  rep.equation = "centrality";
  int n = s.order();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      auto diff = f[s.mul(x, y)] - f[s.mul(y, x)];
      rep.max_residual = std::max(rep.max_residual, Ops::resid(diff));
      if (!Ops::is_zero(diff, tol))
        rep.fail(x, y, "f(" + s.label(x) + s.label(y) + ")",
                 "f(" + s.label(y) + s.label(x) + ")");
    }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int u = 0; u < n; ++u) {
        auto diff = f[s.mul(x, y, u)] - f[s.mul(x, u, y)];
        rep.max_residual = std::max(rep.max_residual, Ops::resid(diff));
        if (!Ops::is_zero(diff, tol))
          rep.fail(x, y,
                   "f(" + s.label(x) + s.label(y) + s.label(u) + ")",
                   "f(" + s.label(x) + s.label(u) + s.label(y) + ")");
      }
  if (chi) {
    ElementSet frontier = chi->null_set.minus(chi->prime_set);
    ElementSet outside = chi->null_set.complement();
    for (int x : frontier.elements())
      for (int y : outside.elements()) {
        for (int w : {s.mul(x, y), s.mul(y, x)}) {
          if (!Ops::is_zero(f[w], tol))
            rep.fail(x, y, "f(" + s.label(w) + ") = " + Ops::str(f[w]),
                     "expected 0 (null-set boundary product)");
        }
      }
    rep.notes.push_back("boundary vanishing checked against the character");
  }
  return rep;
}

}  // namespace

CheckReport check_derived_identities(const Semigroup& s, int z0,
                                     const CFunc& f, const CFunc& g,
                                     double tol) {
  require_compatible(s, f, g);
  if (!check_kannappan_sine(s, z0, f, g, tol).pass)
    throw std::invalid_argument(
        "derived identities require a solution pair of the equation");
  if (f.is_exact()) return derived_impl<ExactOps>(s, z0, f.xv, g.xv, tol);
  return derived_impl<NumOps>(s, z0, f.nv, g.nv, tol);
}

CheckReport check_nonvanishing(const Semigroup& s, int z0, const CFunc& f,
                               const CFunc& g, double tol) {
  require_compatible(s, f, g);
  if (!check_kannappan_sine(s, z0, f, g, tol).pass)
    throw std::invalid_argument(
        "nonvanishing checks require a solution pair of the equation");
  if (f.is_exact()) return nonvanishing_impl<ExactOps>(s, z0, f.xv, g.xv, tol);
  return nonvanishing_impl<NumOps>(s, z0, f.nv, g.nv, tol);
}

CheckReport check_centrality(const Semigroup& s, const CFunc& f,
                             const Character* chi, double tol) {
  require_total(s, f);
  if (f.is_exact()) return centrality_impl<ExactOps>(s, f.xv, chi, tol);
  return centrality_impl<NumOps>(s, f.nv, chi, tol);
}

RankReport check_independence(const std::vector<CFunc>& vectors,
                              const ElementSet* domain) {
  RankReport rep;
  rep.count = static_cast<int>(vectors.size());
  if (vectors.empty()) return rep;
  Mat<CycNum> m;
  for (const auto& v : vectors) {
    if (!v.is_exact())
      throw std::invalid_argument("independence rank is exact-mode only");
    if (domain) {
      std::vector<CycNum> row;
      for (int i : domain->elements()) row.push_back(v.xv[i]);
      m.push_back(std::move(row));
    } else {
      m.push_back(v.xv);
    }
  }
  rep.rank = rank(std::move(m));
  return rep;
}

namespace {

template <class Ops>
class FamilyMatcher {
 public:
  using S = typename Ops::S;
  using Vec = std::vector<S>;

  FamilyMatcher(const Semigroup& s, int z0, const Vec& f, const Vec& g,
                const std::vector<Character>& chars, double tol)
      : s_(s), z0_(z0), f_(f), g_(g), chars_(chars), tol_(tol) {
    for (const auto& chi : chars_) {
      Vec v(s_.order());
      for (int i = 0; i < s_.order(); ++i) v[i] = chi_val<Ops>(chi, i);
      chi_vals_.push_back(std::move(v));
    }
  }

  std::optional<std::string> try_family(Family fam) {
    switch (fam) {
      case Family::F1: return try_f1();
      case Family::F2: return try_f2();
      case Family::F3: return try_pair_split(false);
      case Family::F4: return try_pair_split(true);
      case Family::F5: return try_f5();
      case Family::F6: return try_f6();
      case Family::F7: return try_f7();
      default: return std::nullopt;
    }
  }

 private:
  bool chi_nonzero_at_z0(size_t k) const {
    return !chars_[k].vanishes_at(z0_);
  }

  // chi_k(z0) * chi_k as a value vector
  Vec scaled_chi(size_t k) const {
    Vec v = chi_vals_[k];
    S c = chi_vals_[k][z0_];
    for (auto& e : v) e = c * e;
    return v;
  }

  std::optional<std::string> try_f1() const {
    if (vec_is_zero<Ops>(f_, tol_)) return "f = 0, g arbitrary";
    return std::nullopt;
  }

  std::optional<std::string> try_f6() const {
    if (!vec_is_zero<Ops>(g_, tol_) || vec_is_zero<Ops>(f_, tol_))
      return std::nullopt;
    ElementSet sq = square_shift_set(s_, z0_);
    if (sq.count() == s_.order()) return std::nullopt;
    for (int i : sq.elements())
      if (!Ops::is_zero(f_[i], tol_)) return std::nullopt;
    return "g = 0, f supported off S^2 z0";
  }

  std::optional<std::string> try_f2() const {
    if (vec_is_zero<Ops>(f_, tol_) || vec_is_zero<Ops>(g_, tol_))
      return std::nullopt;
    int p = pivot_index<Ops>(f_);
    if (p < 0) return std::nullopt;
    S b = g_[p] / f_[p];
    if (Ops::is_zero(b, tol_)) return std::nullopt;
    Vec bf = f_;
    for (auto& e : bf) e = b * e;
    if (!vec_match<Ops>(g_, bf, tol_)) return std::nullopt;
    // 2 b f must equal chi(z0) chi for some exponential
    Vec target = f_;
    for (auto& e : target) e = S(2) * b * e;
    for (size_t k = 0; k < chars_.size(); ++k) {
      if (!chi_nonzero_at_z0(k)) continue;
      if (vec_match<Ops>(target, scaled_chi(k), tol_))
        return "g = b f with chi #" + std::to_string(k) +
               ", b = " + Ops::str(b);
    }
    return std::nullopt;
  }

  // plus_case: chi2(z0) = chi1(z0) (f tracks chi1 - chi2);
  // otherwise chi2(z0) = -chi1(z0) (f tracks chi1 + chi2).
  std::optional<std::string> try_pair_split(bool plus_case) const {
    for (size_t k1 = 0; k1 < chars_.size(); ++k1) {
      for (size_t k2 = 0; k2 < chars_.size(); ++k2) {
        if (k1 == k2) continue;
        if (!chi_nonzero_at_z0(k1) || !chi_nonzero_at_z0(k2)) continue;
        const CycNum& c1 = chars_[k1].values[z0_];
        const CycNum& c2 = chars_[k2].values[z0_];
        if (plus_case ? (c1 != c2) : (c2 != -c1)) continue;
        // g = chi1(z0)/2 * (chi1 +- chi2), the sign opposite to f's
        Vec gt(s_.order()), fdir(s_.order());
        S half = S(1) / S(2);
        for (int i = 0; i < s_.order(); ++i) {
          S a = chi_vals_[k1][i], b = chi_vals_[k2][i];
          gt[i] = chi_vals_[k1][z0_] * half * (plus_case ? a + b : a - b);
          fdir[i] = plus_case ? a - b : a + b;
        }
        if (!vec_match<Ops>(g_, gt, tol_)) continue;
        int p = pivot_index<Ops>(fdir);
        if (p < 0) continue;
        if (Ops::is_zero(f_[p], tol_)) continue;
        S coef = f_[p] / fdir[p];
        if (Ops::is_zero(coef, tol_)) continue;
        Vec ft = fdir;
        for (auto& e : ft) e = coef * e;
        if (!vec_match<Ops>(f_, ft, tol_)) continue;
        return std::string(plus_case ? "f = c(chi1 - chi2)"
                                     : "f = delta(chi1 + chi2)") +
               " with chi #" + std::to_string(k1) + ", #" +
               std::to_string(k2) + ", coefficient " + Ops::str(coef);
      }
    }
    return std::nullopt;
  }

  std::optional<std::string> try_f5() const {
    if (Ops::is_zero(f_[z0_], tol_)) return std::nullopt;
    if constexpr (std::is_same_v<Ops, ExactOps>) {
      for (size_t k1 = 0; k1 < chars_.size(); ++k1) {
        for (size_t k2 = 0; k2 < chars_.size(); ++k2) {
          if (k1 == k2) continue;
          if (!chi_nonzero_at_z0(k1) || !chi_nonzero_at_z0(k2)) continue;
          Vec w1 = scaled_chi(k1), w2 = scaled_chi(k2);
          Vec gt(s_.order()), diff(s_.order());
          S half = S(1) / S(2);
          for (int i = 0; i < s_.order(); ++i) {
            gt[i] = half * (w1[i] + w2[i]);
            diff[i] = w1[i] - w2[i];
          }
          if (!vec_match<Ops>(g_, gt, tol_)) continue;
          int p = pivot_index<Ops>(diff);
          if (p < 0) continue;  // chi1(z0)chi1 == chi2(z0)chi2
          if (f_[p].is_zero()) continue;
          S gamma = diff[p] / (S(2) * f_[p]);
          if (gamma.is_zero()) continue;
          Vec ft = diff;
          S inv = S(1) / (S(2) * gamma);
          for (auto& e : ft) e = inv * e;
          if (!vec_match<Ops>(f_, ft, tol_)) continue;
          return "f = (chi1(z0)chi1 - chi2(z0)chi2)/(2 gamma) with chi #" +
                 std::to_string(k1) + ", #" + std::to_string(k2) +
                 ", gamma = " + Ops::str(gamma);
        }
      }
      return std::nullopt;
    } else {
      // recover gamma^2 from the multiplicative shift of g, then split
      // g +- gamma f and match both halves against scaled exponentials
      int n = s_.order();
      int px = -1, py = -1;
      double best = 0;
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if (std::abs(f_[x] * f_[y]) > best) {
            best = std::abs(f_[x] * f_[y]);
            px = x;
            py = y;
          }
      if (px < 0) return std::nullopt;
      S gamma2 =
          (g_[s_.mul(px, py, z0_)] - g_[px] * g_[py]) / (f_[px] * f_[py]);
      S gamma = std::sqrt(gamma2);
      if (Ops::is_zero(gamma, tol_)) return std::nullopt;
      Vec hplus(n), hminus(n);
      for (int i = 0; i < n; ++i) {
        hplus[i] = g_[i] + gamma * f_[i];
        hminus[i] = g_[i] - gamma * f_[i];
      }
      int m1 = match_scaled_chi(hplus), m2 = match_scaled_chi(hminus);
      if (m1 < 0 || m2 < 0 || m1 == m2) return std::nullopt;
      return "h+- = g +- gamma f match chi #" + std::to_string(m1) + ", #" +
             std::to_string(m2) + ", gamma = " + Ops::str(gamma);
    }
  }

  int match_scaled_chi(const Vec& h) const {
    for (size_t k = 0; k < chars_.size(); ++k) {
      if (!chi_nonzero_at_z0(k)) continue;
      if (vec_match<Ops>(h, scaled_chi(k), tol_)) return static_cast<int>(k);
    }
    return -1;
  }

  std::optional<std::string> try_f7() const {
    for (size_t k = 0; k < chars_.size(); ++k) {
      if (!chi_nonzero_at_z0(k)) continue;
      if (!vec_match<Ops>(g_, scaled_chi(k), tol_)) continue;
      if (auto detail = validate_f7(k)) return detail;
    }
    return std::nullopt;
  }

  // f must have the piecewise shape: chi (A + A(z0)) outside the null set,
  // an admissible rho on the prime set, zero on the rest of the null set.
  std::optional<std::string> validate_f7(size_t k) const {
    const Character& chi = chars_[k];
    ElementSet outside = chi.null_set.complement();
    std::vector<int> out = outside.elements();
    // shifted-additive consistency of q = f / chi on the outside
    std::vector<S> q(s_.order(), S(0));
    for (int x : out) q[x] = f_[x] / chi_vals_[k][x];
    bool have_s = false;
    S shift = S(0);
    for (int x : out)
      for (int y : out) {
        S cand = q[x] + q[y] - q[s_.mul(x, y)];
        if (!have_s) {
          shift = cand;
          have_s = true;
        } else if (!Ops::is_zero(shift - cand, tol_)) {
          return std::nullopt;
        }
      }
    if (have_s && !Ops::is_zero(q[z0_] - S(2) * shift, tol_))
      return std::nullopt;
    // zero on the null set away from the prime set
    ElementSet rest = chi.null_set.minus(chi.prime_set);
    for (int x : rest.elements())
      if (!Ops::is_zero(f_[x], tol_)) return std::nullopt;
    // product compatibility of the restriction to the prime set
    for (int p : chi.prime_set.elements()) {
      for (int u : out) {
        for (int v : out) {
          if (!Ops::is_zero(f_[s_.mul(u, p)] - f_[p] * chi_vals_[k][u], tol_))
            return std::nullopt;
          if (!Ops::is_zero(f_[s_.mul(p, v)] - f_[p] * chi_vals_[k][v], tol_))
            return std::nullopt;
          if (!Ops::is_zero(f_[s_.mul(u, s_.mul(p, v))] -
                                f_[p] * chi_vals_[k][u] * chi_vals_[k][v],
                            tol_))
            return std::nullopt;
        }
      }
    }
    // boundary products vanish
    for (int x : rest.elements())
      for (int y : out) {
        if (!Ops::is_zero(f_[s_.mul(x, y)], tol_)) return std::nullopt;
        if (!Ops::is_zero(f_[s_.mul(y, x)], tol_)) return std::nullopt;
      }
    std::string d = "g = chi(z0) chi with chi #" + std::to_string(k);
    if (have_s) d += ", A(z0) = " + Ops::str(shift);
    return d;
  }

  const Semigroup& s_;
  int z0_;
  const Vec& f_;
  const Vec& g_;
  const std::vector<Character>& chars_;
  std::vector<Vec> chi_vals_;
  double tol_;
};

template <class Ops>
Classification classify_impl(const Semigroup& s, int z0,
                             const std::vector<typename Ops::S>& f,
                             const std::vector<typename Ops::S>& g,
                             const std::vector<Character>& chars,
                             const ClassifyOptions& opt) {
  FamilyMatcher<Ops> matcher(s, z0, f, g, chars, opt.tol);
  static const Family kOrder[] = {Family::F1, Family::F6, Family::F2,
                                  Family::F4, Family::F3, Family::F5,
                                  Family::F7};
  Classification out;
  std::ostringstream detail;
  for (Family fam : kOrder) {
    if (opt.disabled.count(fam)) continue;
    if (auto d = matcher.try_family(fam)) {
      out.all.push_back(fam);
      if (!out.primary) out.primary = fam;
      if (detail.tellp() > 0) detail << "; ";
      detail << family_name(fam) << ": " << *d;
    }
  }
  out.detail = detail.str();
  return out;
}

}  // namespace

Classification classify_solution(const Semigroup& s, int z0, const CFunc& f,
                                 const CFunc& g,
                                 const std::vector<Character>& characters,
                                 const ClassifyOptions& opt) {
  require_compatible(s, f, g);
  if (!check_kannappan_sine(s, z0, f, g, opt.tol).pass)
    throw std::invalid_argument("classify_solution: pair is not a solution");
  if (f.is_exact())
    return classify_impl<ExactOps>(s, z0, f.xv, g.xv, characters, opt);
  return classify_impl<NumOps>(s, z0, f.nv, g.nv, characters, opt);
}

namespace {

template <class Ops>
Classification classify_sub_impl(const Semigroup& s, int z0,
                                 const std::vector<typename Ops::S>& f,
                                 const std::vector<typename Ops::S>& g,
                                 const ClassifyOptions& opt) {
  Classification out;
  std::ostringstream detail;
  if (!opt.disabled.count(Family::SUB1) && vec_is_zero<Ops>(f, opt.tol)) {
    out.all.push_back(Family::SUB1);
    detail << "SUB1: f = 0, g arbitrary";
  }
  if (!opt.disabled.count(Family::SUB2) && !vec_is_zero<Ops>(f, opt.tol)) {
    ElementSet sq = square_shift_set(s, z0);
    bool ok = sq.count() < s.order();
    for (int i : sq.elements())
      if (!Ops::is_zero(f[i], opt.tol)) ok = false;
    if (ok) {
      int p = pivot_index<Ops>(f);
      auto c = g[p] / f[p];
      auto cf = f;
      for (auto& e : cf) e = c * e;
      ok = vec_match<Ops>(g, cf, opt.tol);
      if (ok) {
        out.all.push_back(Family::SUB2);
        if (detail.tellp() > 0) detail << "; ";
        detail << "SUB2: g = c f, c = " << Ops::str(c)
               << ", f supported off S^2 z0";
      }
    }
  }
  if (!out.all.empty()) out.primary = out.all.front();
  out.detail = detail.str();
  return out;
}

}  // namespace

Classification classify_subtraction_solution(const Semigroup& s, int z0,
                                             const CFunc& f, const CFunc& g,
                                             const ClassifyOptions& opt) {
  require_compatible(s, f, g);
  if (!check_sine_subtraction(s, z0, f, g, opt.tol).pass)
    throw std::invalid_argument(
        "classify_subtraction_solution: pair is not a solution");
  if (f.is_exact()) return classify_sub_impl<ExactOps>(s, z0, f.xv, g.xv, opt);
  return classify_sub_impl<NumOps>(s, z0, f.nv, g.nv, opt);
}

}  // namespace semieq
