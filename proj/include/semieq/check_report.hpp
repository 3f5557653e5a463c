#pragma once

#include <string>
#include <vector>

namespace semieq {

struct Violation {
  int x = -1;
  int y = -1;
  std::string lhs;
  std::string rhs;
};

/// Outcome of one exhaustive equation or property check.
struct CheckReport {
  std::string equation;
  bool pass = true;
  std::vector<Violation> violations;
  double max_residual = 0.0;  // numeric mode only
  std::vector<std::string> notes;

  void fail(int x, int y, std::string lhs, std::string rhs) {
    pass = false;
    violations.push_back({x, y, std::move(lhs), std::move(rhs)});
  }
  std::string str() const;
};

}  // namespace semieq
