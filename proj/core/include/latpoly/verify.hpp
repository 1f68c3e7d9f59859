#pragma once

// Cross-checks of every identity the library relies on, each between two
// independent computations: the lattice recurrence against closed formulas,
// explicit path enumeration, brute-force matching and tree enumeration, and
// the two generation bijections in both directions.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace latpoly {

struct VerifyCheck {
  std::string name;
  std::string range;
  bool passed = false;
  std::string detail;  // counterexample witness when failed
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;

  bool overall() const;
};

struct VerifyOptions {
  int max_n = 4;
  std::uint64_t seed = 20240521;
  // Closed-formula coefficient under test; replaceable for fault injection.
  std::function<std::int64_t(int, int)> t_coeff;
};

// Brute-force families are capped: matchings at 2n <= 12, tree bijection at
// n <= 6, tree polynomial at n <= 7, path enumeration at 2n <= 14. The range
// string of each check states what was actually covered.
inline constexpr int kMatchingMaxN = 6;
inline constexpr int kTreeBijectionMaxN = 6;
inline constexpr int kTreePolyMaxN = 7;
inline constexpr int kPathEnumMaxN = 7;

// Throws DomainError when max_n < 1.
VerifyReport run_verification(const VerifyOptions& options);

}  // namespace latpoly
