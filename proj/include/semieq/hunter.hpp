#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "semieq/characters.hpp"
#include "semieq/families.hpp"
#include "semieq/semigroup.hpp"
#include "semieq/verifier.hpp"

namespace semieq {

enum class HuntEquation { sine, subtraction };

struct HuntConfig {
  int trials = 200;
  double tol_converge = 1e-6;
  double tol_dedupe = 1e-4;
  std::uint64_t seed = 0;
  int max_iters = 300;
  // affine slice ell . (f, g) = 1 appended to the system; 2n coefficients,
  // drawn from the seed when empty
  std::vector<std::complex<double>> normalization;
};

struct HuntSolution {
  CFunc f, g;  // numeric mode
  double residual = 0.0;
  Classification tags;
};

struct HuntResult {
  std::vector<HuntSolution> solutions;  // deduped, seed-deterministic order
  int trials = 0;
  int converged = 0;
  std::vector<int> unclassified;  // indices into solutions
};

using NumVec = std::vector<std::complex<double>>;

/// Damped Gauss-Newton on the bilinear residual system of the chosen
/// equation plus the affine slice ell . (f, g) = 1. Returns the converged
/// pair when the equation residual reaches tol.
std::optional<std::pair<NumVec, NumVec>> newton_solve(
    const Semigroup& s, int z0, HuntEquation eq, const NumVec& ell, NumVec f,
    NumVec g, double tol, int max_iters);

/// Random-restart root hunt: every converged, deduped solution is classified
/// against the catalog of solution families; anything unclassified would
/// contradict the completeness of the family list (or reveal a bug).
/// Classification widens cls.tol per solution in tiers scaled by roots of
/// the residual: the distance to the variety scales like residual^(1/k)
/// along k-th order obstructed directions where components meet.
HuntResult hunt(const Semigroup& s, int z0, HuntEquation eq,
                const HuntConfig& cfg,
                const std::vector<Character>& characters,
                const ClassifyOptions& cls = {});

/// Cross-tabulates hunted solutions against the exact family witnesses.
std::string completeness_report(const Semigroup& s, int z0,
                                const HuntResult& result,
                                const FamilySolutions& catalog);

}  // namespace semieq
