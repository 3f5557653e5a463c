#include "semieq/families.hpp"

#include <algorithm>
#include <stdexcept>

#include "semieq/linalg.hpp"

namespace semieq {

ParamSet ParamSet::defaults() {
  ParamSet p;
  p.scalars = {CycNum(1), CycNum(-1), CycNum(1, 2), CycNum(2),
               CycNum::root_of_unity(4, 1)};
  return p;
}

namespace {

CFunc scaled_character(const Character& chi, const CycNum& scale) {
  std::vector<CycNum> vals;
  vals.reserve(chi.values.size());
  for (const auto& v : chi.values) vals.push_back(scale * v);
  return CFunc::exact(std::move(vals));
}

// deterministic value patterns on a support: one all-ones vector and one
// cycling through 1, z_4, -2 (all entries nonzero on the support)
std::vector<std::vector<CycNum>> support_patterns(
    int n, const std::vector<int>& support) {
  std::vector<CycNum> cycle = {CycNum(1), CycNum::root_of_unity(4, 1),
                               CycNum(-2)};
  std::vector<std::vector<CycNum>> out;
  std::vector<CycNum> ones(n, CycNum(0));
  for (int i : support) ones[i] = CycNum(1);
  out.push_back(std::move(ones));
  std::vector<CycNum> mixed(n, CycNum(0));
  for (size_t k = 0; k < support.size(); ++k)
    mixed[support[k]] = cycle[k % cycle.size()];
  if (support.size() > 1) out.push_back(std::move(mixed));
  return out;
}

void verify_emitted(const Semigroup& s, int z0, const SolutionPair& pair) {
  CheckReport rep =
      pair.family == Family::SUB1 || pair.family == Family::SUB2
          ? check_sine_subtraction(s, z0, pair.f, pair.g)
          : check_kannappan_sine(s, z0, pair.f, pair.g);
  if (!rep.pass)
    throw std::logic_error("constructed " + family_name(pair.family) +
                           " witness fails verification:\n" + rep.str());
}

}  // namespace

std::vector<CFunc> solve_multiplicative_kannappan(
    const Semigroup& s, int z0, const std::vector<Character>& characters) {
  std::vector<CFunc> out;
  out.push_back(CFunc::zero(s.order()));
  for (const auto& chi : characters) {
    if (chi.vanishes_at(z0)) continue;
    CFunc f = scaled_character(chi, chi.values[z0]);
    for (int x = 0; x < s.order(); ++x)
      for (int y = 0; y < s.order(); ++y)
        if (f.xv[s.mul(x, y, z0)] != f.xv[x] * f.xv[y])
          throw std::logic_error(
              "multiplicative solution fails its equation");
    out.push_back(std::move(f));
  }
  return out;
}

RhoSpace rho_space(const Semigroup& s, const Character& chi) {
  RhoSpace space;
  space.support = chi.prime_set.elements();
  size_t m = space.support.size();
  if (m == 0) return space;
  std::vector<int> slot(s.order(), -1);
  for (size_t i = 0; i < m; ++i) slot[space.support[i]] = static_cast<int>(i);
  ElementSet outside = chi.null_set.complement();
  auto relation = [&](int target, int source, const CycNum& factor) {
    if (slot[target] < 0)
      throw std::logic_error("prime set not closed under outer products");
    std::vector<CycNum> row(m, CycNum(0));
    row[slot[target]] += CycNum(1);
    row[slot[source]] -= factor;
    space.constraints.push_back(std::move(row));
  };
  for (int p : space.support) {
    for (int u : outside.elements()) {
      relation(s.mul(u, p), p, chi.values[u]);
      for (int v : outside.elements()) {
        relation(s.mul(p, v), p, chi.values[v]);
        relation(s.mul(u, s.mul(p, v)), p, chi.values[u] * chi.values[v]);
      }
    }
  }
  // boundary products that land in the prime set force zeros there
  ElementSet rest = chi.null_set.minus(chi.prime_set);
  for (int x : rest.elements()) {
    for (int y : outside.elements()) {
      for (int w : {s.mul(x, y), s.mul(y, x)}) {
        if (slot[w] >= 0) {
          std::vector<CycNum> row(m, CycNum(0));
          row[slot[w]] = CycNum(1);
          space.constraints.push_back(std::move(row));
        }
      }
    }
  }
  space.basis = nullspace(Mat<CycNum>(space.constraints), m);
  Mat<CycNum> work(space.constraints);
  std::vector<int> pivots = rref(work);
  std::vector<bool> is_pivot(m, false);
  for (int p : pivots) is_pivot[p] = true;
  for (size_t i = 0; i < m; ++i)
    if (!is_pivot[i]) space.free_positions.push_back(static_cast<int>(i));
  return space;
}

bool rho_admissible(const RhoSpace& space, const std::vector<CycNum>& rho) {
  if (rho.size() != space.support.size()) return false;
  for (const auto& row : space.constraints) {
    CycNum acc(0);
    for (size_t i = 0; i < rho.size(); ++i) acc += row[i] * rho[i];
    if (!acc.is_zero()) return false;
  }
  return true;
}

std::vector<std::vector<CycNum>> rho_samples(const RhoSpace& space,
                                             const ParamSet& params) {
  std::vector<std::vector<CycNum>> out;
  size_t m = space.support.size();
  for (const auto& base : space.basis) {
    for (const auto& c : params.scalars) {
      std::vector<CycNum> rho(m);
      for (size_t i = 0; i < m; ++i) rho[i] = c * base[i];
      out.push_back(std::move(rho));
    }
  }
  if (space.basis.size() > 1) {
    std::vector<CycNum> sum(m, CycNum(0));
    for (const auto& base : space.basis)
      for (size_t i = 0; i < m; ++i) sum[i] += base[i];
    out.push_back(std::move(sum));
  }
  return out;
}

CFunc construct_special_solution(const Semigroup& s, int z0,
                                 const Character& chi,
                                 const std::vector<Rational>& additive,
                                 const std::vector<CycNum>& rho) {
  if (chi.vanishes_at(z0))
    throw std::invalid_argument("chi(z0) must be nonzero");
  ElementSet outside = chi.null_set.complement();
  std::vector<int> out = outside.elements();
  for (int x : out)
    for (int y : out)
      if (additive[s.mul(x, y)] != additive[x] + additive[y])
        throw std::invalid_argument("A is not additive on the domain");
  RhoSpace space = rho_space(s, chi);
  if (!rho_admissible(space, rho))
    throw std::invalid_argument("rho violates the admissibility constraints");
  std::vector<CycNum> vals(s.order(), CycNum(0));
  CycNum shift{additive[z0]};
  for (int x : out) vals[x] = chi.values[x] * (CycNum(additive[x]) + shift);
  for (size_t i = 0; i < space.support.size(); ++i)
    vals[space.support[i]] = rho[i];
  return CFunc::exact(std::move(vals));
}

FamilySolutions enumerate_family_solutions(
    const Semigroup& s, int z0, const std::vector<Character>& characters,
    const ParamSet& params) {
  int n = s.order();
  FamilySolutions result;
  auto emit = [&](SolutionPair pair) {
    verify_emitted(s, z0, pair);
    result.witnesses.push_back(std::move(pair));
  };
  auto line = [&](Family fam, bool supported, std::string note, int count) {
    result.lines.push_back({fam, supported, std::move(note), count});
  };

  // F1: f = 0, g arbitrary
  {
    int count = 0;
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    for (auto& gvals : support_patterns(n, all)) {
      emit({CFunc::zero(n), CFunc::exact(std::move(gvals)), Family::F1, {}});
      ++count;
    }
    line(Family::F1, true, "f = 0, g arbitrary", count);
  }

  // F2: f = chi(z0)/(2b) chi, g = chi(z0)/2 chi
  {
    int count = 0;
    CycNum half(1, 2);
    for (size_t k = 0; k < characters.size(); ++k) {
      const Character& chi = characters[k];
      if (chi.vanishes_at(z0)) continue;
      const CycNum& c = chi.values[z0];
      CFunc g = scaled_character(chi, c * half);
      for (const auto& b : params.scalars) {
        emit({scaled_character(chi, c * half / b), g, Family::F2,
              {{"chi", "#" + std::to_string(k)}, {"b", b.str()}}});
        ++count;
      }
    }
    line(Family::F2, count > 0,
         count ? "exponentials with chi(z0) != 0" : "no exponential is nonzero at z0",
         count);
  }

  // F3 / F4 / F5 run over unordered character pairs
  int count3 = 0, count4 = 0, count5 = 0;
  CycNum half(1, 2);
  for (size_t k1 = 0; k1 < characters.size(); ++k1) {
    for (size_t k2 = k1 + 1; k2 < characters.size(); ++k2) {
      const Character &chi1 = characters[k1], &chi2 = characters[k2];
      if (chi1.vanishes_at(z0) || chi2.vanishes_at(z0)) continue;
      const CycNum &c1 = chi1.values[z0], &c2 = chi2.values[z0];
      std::vector<CycNum> sum(n), dif(n), w1(n), w2(n);
      for (int i = 0; i < n; ++i) {
        sum[i] = chi1.values[i] + chi2.values[i];
        dif[i] = chi1.values[i] - chi2.values[i];
        w1[i] = c1 * chi1.values[i];
        w2[i] = c2 * chi2.values[i];
      }
      if (c2 == -c1) {
        std::vector<CycNum> g(n);
        for (int i = 0; i < n; ++i) g[i] = c1 * half * dif[i];
        for (const auto& delta : params.scalars) {
          std::vector<CycNum> f(n);
          for (int i = 0; i < n; ++i) f[i] = delta * sum[i];
          emit({CFunc::exact(std::move(f)), CFunc::exact(g), Family::F3,
                {{"chi1", "#" + std::to_string(k1)},
                 {"chi2", "#" + std::to_string(k2)},
                 {"delta", delta.str()}}});
          ++count3;
        }
      }
      if (c2 == c1) {
        std::vector<CycNum> g(n);
        for (int i = 0; i < n; ++i) g[i] = c1 * half * sum[i];
        for (const auto& c : params.scalars) {
          std::vector<CycNum> f(n);
          for (int i = 0; i < n; ++i) f[i] = c * dif[i];
          emit({CFunc::exact(std::move(f)), CFunc::exact(g), Family::F4,
                {{"chi1", "#" + std::to_string(k1)},
                 {"chi2", "#" + std::to_string(k2)},
                 {"c", c.str()}}});
          ++count4;
        }
      }
      if (w1 != w2) {
        std::vector<CycNum> g(n);
        for (int i = 0; i < n; ++i) g[i] = half * (w1[i] + w2[i]);
        for (const auto& gamma : params.scalars) {
          std::vector<CycNum> f(n);
          CycNum inv = CycNum(1) / (CycNum(2) * gamma);
          for (int i = 0; i < n; ++i) f[i] = inv * (w1[i] - w2[i]);
          emit({CFunc::exact(std::move(f)), CFunc::exact(g), Family::F5,
                {{"chi1", "#" + std::to_string(k1)},
                 {"chi2", "#" + std::to_string(k2)},
                 {"gamma", gamma.str()}}});
          ++count5;
        }
      }
    }
  }
  line(Family::F3, count3 > 0,
       count3 ? "pairs with chi2(z0) = -chi1(z0) != 0" : "no opposite-valued pair at z0",
       count3);
  line(Family::F4, count4 > 0,
       count4 ? "pairs with chi2(z0) = chi1(z0) != 0" : "no equal-valued pair at z0",
       count4);
  line(Family::F5, count5 > 0,
       count5 ? "pairs with chi1(z0), chi2(z0) != 0" : "no admissible pair at z0",
       count5);

  // F6: S != S^2 z0, g = 0, f supported off S^2 z0
  {
    ElementSet sq = square_shift_set(s, z0);
    ElementSet off = sq.complement();
    int count = 0;
    if (!off.empty()) {
      for (auto& fvals : support_patterns(n, off.elements())) {
        emit({CFunc::exact(std::move(fvals)), CFunc::zero(n), Family::F6,
              {{"support", std::to_string(off.count()) + " elements"}}});
        ++count;
      }
      line(Family::F6, true, "S != S^2 z0", count);
    } else {
      line(Family::F6, false, "S == S^2 z0", 0);
    }
  }

  // F7: g = chi(z0) chi, f piecewise from the additive part and rho
  {
    int count = 0;
    bool any_support = false;
    for (size_t k = 0; k < characters.size(); ++k) {
      const Character& chi = characters[k];
      if (chi.vanishes_at(z0)) continue;
      AdditiveSpace add = additive_basis(s, chi.null_set.complement());
      if (add.dimension() != 0)
        throw std::logic_error(
            "additive space is nonzero on a finite semigroup");
      RhoSpace space = rho_space(s, chi);
      if (space.dimension() == 0) continue;
      any_support = true;
      CFunc g = scaled_character(chi, chi.values[z0]);
      std::vector<Rational> zero_additive(n, Rational(0));
      for (auto& rho : rho_samples(space, params)) {
        std::vector<std::pair<std::string, std::string>> ps = {
            {"chi", "#" + std::to_string(k)},
            {"A", "0 (forced on a finite semigroup)"}};
        for (size_t i = 0; i < rho.size(); ++i)
          ps.emplace_back("rho(" + s.label(space.support[i]) + ")",
                          rho[i].str());
        emit({construct_special_solution(s, z0, chi, zero_additive, rho), g,
              Family::F7, std::move(ps)});
        ++count;
      }
    }
    line(Family::F7, any_support,
         any_support ? "characters with free rho directions"
                     : "no free additive or rho directions",
         count);
  }

  return result;
}

FamilySolutions enumerate_family_solutions(const Semigroup& s, int z0) {
  return enumerate_family_solutions(s, z0, enumerate_multiplicative(s));
}

SubtractionSolutions solve_sine_subtraction(const Semigroup& s, int z0,
                                            const ParamSet& params) {
  int n = s.order();
  SubtractionSolutions result;
  ElementSet sq = square_shift_set(s, z0);
  result.off_square = sq.complement();
  result.sub2_supported = !result.off_square.empty();
  auto emit = [&](SolutionPair pair) {
    CheckReport rep = check_sine_subtraction(s, z0, pair.f, pair.g);
    if (!rep.pass)
      throw std::logic_error("constructed subtraction witness fails:\n" +
                             rep.str());
    result.witnesses.push_back(std::move(pair));
  };
  int count1 = 0;
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  for (auto& gvals : support_patterns(n, all)) {
    emit({CFunc::zero(n), CFunc::exact(std::move(gvals)), Family::SUB1, {}});
    ++count1;
  }
  result.lines.push_back({Family::SUB1, true, "f = 0, g arbitrary", count1});
  if (result.sub2_supported) {
    int count2 = 0;
    std::vector<CycNum> cs = {CycNum(0)};
    cs.insert(cs.end(), params.scalars.begin(), params.scalars.end());
    for (auto& fvals : support_patterns(n, result.off_square.elements())) {
      CFunc f = CFunc::exact(fvals);
      for (const auto& c : cs) {
        std::vector<CycNum> gvals(n);
        for (int i = 0; i < n; ++i) gvals[i] = c * f.xv[i];
        emit({f, CFunc::exact(std::move(gvals)), Family::SUB2,
              {{"c", c.str()}}});
        ++count2;
      }
    }
    result.lines.push_back(
        {Family::SUB2, true, "S != S^2 z0: g = c f off the square set",
         count2});
  } else {
    result.lines.push_back({Family::SUB2, false, "S == S^2 z0", 0});
  }
  return result;
}

}  // namespace semieq
