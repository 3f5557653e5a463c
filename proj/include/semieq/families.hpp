#pragma once

#include <string>
#include <utility>
#include <vector>

#include "semieq/additive.hpp"
#include "semieq/cfunc.hpp"
#include "semieq/characters.hpp"
#include "semieq/semigroup.hpp"
#include "semieq/verifier.hpp"

namespace semieq {

/// Sample values used to instantiate free scalar constants. The solution
/// sets are infinite; witnesses carry representative parameter choices.
struct ParamSet {
  std::vector<CycNum> scalars;
  static ParamSet defaults();  // 1, -1, 1/2, 2, z_4
};

struct SolutionPair {
  CFunc f, g;
  Family family;
  std::vector<std::pair<std::string, std::string>> params;
};

struct FamilyLine {
  Family family;
  bool supported = false;
  std::string note;
  int witnesses = 0;
};

struct FamilySolutions {
  std::vector<SolutionPair> witnesses;
  std::vector<FamilyLine> lines;
};

/// All solutions of f(x*y*z0) = f(x) f(y): the zero function plus
/// chi(z0) chi for every exponential chi with chi(z0) != 0.
std::vector<CFunc> solve_multiplicative_kannappan(
    const Semigroup& s, int z0, const std::vector<Character>& characters);

/// Admissible restrictions rho of a degenerate solution to the prime set:
/// the exact solution space of the product-compatibility constraints
/// rho(up) = rho(p) chi(u), rho(pv) = rho(p) chi(v), rho(upv) = rho(p) chi(uv)
/// plus forced zeros at prime-set elements reachable as boundary products.
struct RhoSpace {
  std::vector<int> support;                      // prime-set elements
  std::vector<std::vector<CycNum>> constraints;  // rows over support coords
  std::vector<std::vector<CycNum>> basis;        // nullspace basis
  std::vector<int> free_positions;               // non-pivot support slots

  int dimension() const { return static_cast<int>(basis.size()); }
};

RhoSpace rho_space(const Semigroup& s, const Character& chi);
bool rho_admissible(const RhoSpace& space, const std::vector<CycNum>& rho);
/// Deterministic nonzero sample points of the space.
std::vector<std::vector<CycNum>> rho_samples(const RhoSpace& space,
                                             const ParamSet& params);

/// The piecewise solution chi(x)(A(x)+A(z0)) / rho(x) / 0 of
/// f(x*y*z0) = chi(z0)[f(x)chi(y) + f(y)chi(x)]. `additive` is a full-length
/// rational vector that must be additive on the complement of the null set;
/// `rho` gives one value per prime-set element and must be admissible.
CFunc construct_special_solution(const Semigroup& s, int z0,
                                 const Character& chi,
                                 const std::vector<Rational>& additive,
                                 const std::vector<CycNum>& rho);

/// Instantiates every structurally supported solution family of the
/// Kannappan-sine addition law with the given parameter samples. Every
/// emitted pair is verified exactly; a verification failure is a bug and
/// throws std::logic_error.
FamilySolutions enumerate_family_solutions(
    const Semigroup& s, int z0, const std::vector<Character>& characters,
    const ParamSet& params = ParamSet::defaults());
FamilySolutions enumerate_family_solutions(const Semigroup& s, int z0);

struct SubtractionSolutions {
  bool sub2_supported = false;
  ElementSet off_square;  // S minus S^2 z0
  std::vector<SolutionPair> witnesses;
  std::vector<FamilyLine> lines;
};

/// Full solution description of f(x*y*z0) = f(x)g(y) - f(y)g(x):
/// always f = 0 with g arbitrary; additionally, when S != S^2 z0,
/// g = c f with f supported on the complement and zero on S^2 z0.
SubtractionSolutions solve_sine_subtraction(
    const Semigroup& s, int z0, const ParamSet& params = ParamSet::defaults());

}  // namespace semieq
