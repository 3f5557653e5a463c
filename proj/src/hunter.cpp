#include "semieq/hunter.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <stdexcept>
#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <sstream>

namespace semieq {

namespace {

using Cx = std::complex<double>;

// residual of the n^2 equation rows followed by the normalization row
Eigen::VectorXcd residual(const Semigroup& s, int z0, HuntEquation eq,
                          const NumVec& ell, const NumVec& f,
                          const NumVec& g) {
  int n = s.order();
  double sign = eq == HuntEquation::sine ? 1.0 : -1.0;
  Eigen::VectorXcd r(n * n + 1);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      r(x * n + y) =
          f[s.mul(x, y, z0)] - f[x] * g[y] - sign * f[y] * g[x];
  Cx norm(-1.0, 0.0);
  for (int i = 0; i < n; ++i) norm += ell[i] * f[i] + ell[n + i] * g[i];
  r(n * n) = norm;
  return r;
}

double equation_residual_inf(const Eigen::VectorXcd& r, int n) {
  double m = 0;
  for (int i = 0; i < n * n; ++i) m = std::max(m, std::abs(r(i)));
  return m;
}

Eigen::MatrixXcd jacobian(const Semigroup& s, int z0, HuntEquation eq,
                          const NumVec& ell, const NumVec& f,
                          const NumVec& g) {
  int n = s.order();
  double sign = eq == HuntEquation::sine ? 1.0 : -1.0;
  Eigen::MatrixXcd j = Eigen::MatrixXcd::Zero(n * n + 1, 2 * n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      int row = x * n + y;
      j(row, s.mul(x, y, z0)) += 1.0;
      j(row, x) -= g[y];
      j(row, y) -= sign * g[x];
      j(row, n + y) -= f[x];
      j(row, n + x) -= sign * f[y];
    }
  }
  for (int i = 0; i < 2 * n; ++i) j(n * n, i) = ell[i];
  return j;
}

}  // namespace

std::optional<std::pair<NumVec, NumVec>> newton_solve(
    const Semigroup& s, int z0, HuntEquation eq, const NumVec& ell, NumVec f,
    NumVec g, double tol, int max_iters) {
  // Levenberg-Marquardt on the damped normal equations; the Jacobian is
  // rank-deficient along the scaling directions of the solution variety,
  // so plain least-squares steps can truncate descent directions.
  int n = s.order();
  Eigen::VectorXcd r = residual(s, z0, eq, ell, f, g);
  double cur = r.squaredNorm();
  double lambda = 1e-6;
  for (int it = 0; it < max_iters; ++it) {
    if (std::sqrt(cur) <= 1e-13) break;
    Eigen::MatrixXcd j = jacobian(s, z0, eq, ell, f, g);
    Eigen::MatrixXcd a = j.adjoint() * j;
    Eigen::VectorXcd b = -(j.adjoint() * r);
    double scale = std::max(a.diagonal().real().mean(), 1e-12);
    bool improved = false;
    NumVec nf(n), ng(n);
    for (int tries = 0; tries < 12; ++tries) {
      Eigen::MatrixXcd m = a;
      m.diagonal().array() += lambda * scale;
      Eigen::VectorXcd step = m.ldlt().solve(b);
      if (step.allFinite()) {
        for (int i = 0; i < n; ++i) {
          nf[i] = f[i] + step(i);
          ng[i] = g[i] + step(n + i);
        }
        Eigen::VectorXcd nr = residual(s, z0, eq, ell, nf, ng);
        double cand = nr.squaredNorm();
        if (cand < cur) {
          f = std::move(nf);
          g = std::move(ng);
          nf.resize(n);
          ng.resize(n);
          r = std::move(nr);
          cur = cand;
          lambda = std::max(lambda / 3.0, 1e-12);
          improved = true;
          break;
        }
      }
      lambda *= 10.0;
      if (lambda > 1e10) break;
    }
    if (!improved) break;  // stationary point of the squared residual
  }
  if (equation_residual_inf(r, n) <= tol) return std::make_pair(f, g);
  return std::nullopt;
}

namespace {

double inf_norm(const NumVec& v) {
  double m = 0;
  for (const auto& e : v) m = std::max(m, std::abs(e));
  return m;
}

// distance treating f projectively (the equation is linear in f) and g
// directly
double pair_distance(const HuntSolution& a, const HuntSolution& b,
                     double ztol) {
  double gd = 0, gscale = 1.0 + std::max(inf_norm(a.g.nv), inf_norm(b.g.nv));
  for (size_t i = 0; i < a.g.nv.size(); ++i)
    gd = std::max(gd, std::abs(a.g.nv[i] - b.g.nv[i]) / gscale);
  double na = 0, nb = 0;
  Cx dot(0, 0);
  for (size_t i = 0; i < a.f.nv.size(); ++i) {
    na += std::norm(a.f.nv[i]);
    nb += std::norm(b.f.nv[i]);
    dot += std::conj(a.f.nv[i]) * b.f.nv[i];
  }
  double fd;
  bool za = std::sqrt(na) <= ztol, zb = std::sqrt(nb) <= ztol;
  if (za && zb)
    fd = 0;
  else if (za || zb)
    fd = 1;
  else
    fd = std::sqrt(std::max(0.0, 1.0 - std::norm(dot) / (na * nb)));
  return std::max(fd, gd);
}

}  // namespace

HuntResult hunt(const Semigroup& s, int z0, HuntEquation eq,
                const HuntConfig& cfg,
                const std::vector<Character>& characters,
                const ClassifyOptions& cls) {
  int n = s.order();
  HuntResult result;
  result.trials = cfg.trials;
  std::mt19937_64 rng(cfg.seed);
  // uniform in [0,1) straight from the engine bits: the standard leaves
  // uniform_real_distribution implementation-defined, which would make
  // seeded runs differ across standard libraries
  auto unit = [&]() {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
  };
  auto draw_disk = [&]() {
    double r = std::sqrt(unit());
    double a = 2.0 * std::numbers::pi * unit();
    return Cx(r * std::cos(a), r * std::sin(a));
  };
  NumVec ell = cfg.normalization;
  if (ell.empty()) {
    ell.resize(2 * n);
    for (auto& e : ell) e = draw_disk();
  } else if (static_cast<int>(ell.size()) != 2 * n) {
    throw std::invalid_argument("normalization slice needs 2n coefficients");
  }
  for (int trial = 0; trial < cfg.trials; ++trial) {
    NumVec f(n), g(n);
    for (auto& e : f) e = draw_disk();
    for (auto& e : g) e = draw_disk();
    auto sol = newton_solve(s, z0, eq, ell, std::move(f), std::move(g),
                            cfg.tol_converge, cfg.max_iters);
    if (!sol) continue;
    ++result.converged;
    HuntSolution hs;
    hs.f = CFunc::numeric(std::move(sol->first));
    hs.g = CFunc::numeric(std::move(sol->second));
    Eigen::VectorXcd r = residual(s, z0, eq, ell, hs.f.nv, hs.g.nv);
    hs.residual = equation_residual_inf(r, n);
    bool dup = false;
    for (const auto& kept : result.solutions)
      if (pair_distance(hs, kept, cfg.tol_converge) <= cfg.tol_dedupe) {
        dup = true;
        break;
      }
    if (dup) continue;
    // Distance to the solution variety scales like residual^(1/k) along
    // k-th order obstructed tangent directions where components meet; the
    // nilpotent ladders in the corpus produce k up to 5, hence the fifth-root
    // tier. The 0.05 cap keeps genuinely foreign solutions (the ablation
    // case) loudly unclassified.
    double res = std::max(hs.residual, 0.0);
    double radii[] = {std::max(cls.tol, 10.0 * std::sqrt(res)),
                      std::max(cls.tol, 10.0 * std::cbrt(res)),
                      std::min(3.0 * std::pow(res, 0.2), 0.05)};
    for (double radius : radii) {
      ClassifyOptions opts = cls;
      opts.tol = radius;
      hs.tags = eq == HuntEquation::sine
                    ? classify_solution(s, z0, hs.f, hs.g, characters, opts)
                    : classify_subtraction_solution(s, z0, hs.f, hs.g, opts);
      if (hs.tags.primary) break;
    }
    if (hs.tags.unclassified())
      result.unclassified.push_back(
          static_cast<int>(result.solutions.size()));
    result.solutions.push_back(std::move(hs));
  }
  return result;
}

std::string completeness_report(const Semigroup& s, int z0,
                                const HuntResult& result,
                                const FamilySolutions& catalog) {
  std::ostringstream os;
  std::map<std::string, int> found, expected;
  for (const auto& sol : result.solutions)
    found[sol.tags.primary ? family_name(*sol.tags.primary)
                           : "UNCLASSIFIED"]++;
  for (const auto& w : catalog.witnesses) expected[family_name(w.family)]++;
  os << "completeness cross-tab for z0 = " << s.label(z0) << "\n";
  os << "  trials: " << result.trials << ", converged: " << result.converged
     << ", distinct: " << result.solutions.size() << "\n";
  os << "  family | hunted-distinct | exact-witnesses\n";
  std::set<std::string> keys;
  for (const auto& [k, _] : found) keys.insert(k);
  for (const auto& [k, _] : expected) keys.insert(k);
  for (const auto& k : keys)
    os << "  " << k << " | " << (found.count(k) ? found[k] : 0) << " | "
       << (expected.count(k) ? expected[k] : 0) << "\n";
  if (result.unclassified.empty()) {
    os << "  unclassified: none\n";
  } else {
    os << "  UNCLASSIFIED findings: " << result.unclassified.size() << "\n";
    for (int idx : result.unclassified)
      os << "    f = " << result.solutions[idx].f.str()
         << "; g = " << result.solutions[idx].g.str() << "\n";
  }
  return os.str();
}

}  // namespace semieq
