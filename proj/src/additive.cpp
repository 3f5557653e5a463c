#include "semieq/additive.hpp"

#include <stdexcept>

#include "semieq/linalg.hpp"

namespace semieq {

AdditiveSpace additive_basis(const Semigroup& s, const ElementSet& domain) {
  std::vector<int> elems = domain.elements();
  for (int x : elems)
    for (int y : elems)
      if (!domain.contains(s.mul(x, y)))
        throw std::invalid_argument("additive domain not closed: " +
                                    s.label(x) + "*" + s.label(y) +
                                    " leaves it");
  // unknowns: A(x) for x in domain
  std::vector<int> col_of(s.order(), -1);
  for (size_t c = 0; c < elems.size(); ++c) col_of[elems[c]] = static_cast<int>(c);
  Mat<Rational> m;
  for (int x : elems) {
    for (int y : elems) {
      std::vector<Rational> row(elems.size(), Rational(0));
      row[col_of[s.mul(x, y)]] += 1;
      row[col_of[x]] -= 1;
      row[col_of[y]] -= 1;
      m.push_back(std::move(row));
    }
  }
  std::vector<std::vector<Rational>> small =
      nullspace(std::move(m), elems.size());
  AdditiveSpace space;
  space.domain = domain;
  for (const auto& v : small) {
    std::vector<Rational> full(s.order(), Rational(0));
    for (size_t c = 0; c < elems.size(); ++c) full[elems[c]] = v[c];
    space.basis.push_back(std::move(full));
  }
  return space;
}

std::vector<std::vector<Rational>> kannappan_additive_nullspace(
    const Semigroup& s, int z0) {
  int n = s.order();
  Mat<Rational> m;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      std::vector<Rational> row(n, Rational(0));
      row[s.mul(x, y, z0)] += 1;
      row[x] -= 1;
      row[y] -= 1;
      m.push_back(std::move(row));
    }
  }
  return nullspace(std::move(m), n);
}

std::vector<CFunc> solve_kannappan_additive(const Semigroup& s, int z0) {
  int n = s.order();
  // formula route: f = A + A(z0) over the additive space of S
  AdditiveSpace add = additive_basis(s, ElementSet::full(n));
  std::vector<std::vector<Rational>> formula;
  for (const auto& a : add.basis) {
    std::vector<Rational> f(n);
    for (int x = 0; x < n; ++x) f[x] = a[x] + a[z0];
    formula.push_back(std::move(f));
  }
  // direct route: exact nullspace of the equation's linear system
  std::vector<std::vector<Rational>> direct = kannappan_additive_nullspace(s, z0);
  // both routes span the same space; compare via joint rank
  Mat<Rational> joint;
  for (const auto& v : formula) joint.push_back(v);
  for (const auto& v : direct) joint.push_back(v);
  int r_formula = formula.empty() ? 0 : rank(Mat<Rational>(formula.begin(), formula.end()));
  int r_direct = direct.empty() ? 0 : rank(Mat<Rational>(direct.begin(), direct.end()));
  int r_joint = joint.empty() ? 0 : rank(std::move(joint));
  if (r_formula != r_direct || r_joint != r_direct)
    throw std::logic_error(
        "additive solver routes disagree: formula dim " +
        std::to_string(r_formula) + ", direct dim " + std::to_string(r_direct));
  std::vector<CFunc> out;
  out.push_back(CFunc::zero(n));  // the affine shift of the zero map
  for (const auto& v : direct) {
    std::vector<CycNum> vals;
    vals.reserve(n);
    for (const auto& r : v) vals.emplace_back(r);
    out.push_back(CFunc::exact(std::move(vals)));
  }
  return out;
}

}  // namespace semieq
