#pragma once

/**
 * @file lattice.hpp
 * @brief East/north lattice paths that stay weakly below the line x = 2y,
 *        and the weighted path-count polynomials L_{i,j}(x).
 *
 * A north step taken from an odd x-coordinate carries weight x; every other
 * step has weight 1. After every step the current point (x, y) satisfies
 * x >= 2y.
 */

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "latpoly/poly.hpp"

namespace latpoly {

enum class Step : char { East = 'E', North = 'N' };

struct GridPosition {
  int i = 0;  // x-coordinate, number of east steps
  int j = 0;  // y-coordinate, number of north steps

  bool on_or_below_line() const { return i >= 0 && j >= 0 && i >= 2 * j; }
  GridPosition after(Step s) const {
    return s == Step::East ? GridPosition{i + 1, j} : GridPosition{i, j + 1};
  }
  std::string to_string() const;

  auto operator<=>(const GridPosition&) const = default;
};

class LatticePath {
 public:
  LatticePath() = default;

  // Accepts a string over {E, N}. Throws ParseError naming the 0-based index
  // of the first foreign character or the first step that crosses the line.
  static LatticePath parse(std::string_view text);

  // Throws DomainError when the step is illegal from the current endpoint.
  void push_back(Step s);
  bool can_take(Step s) const { return end_.after(s).on_or_below_line(); }
  // Removes the last step; no-op on the empty path.
  void pop_back();

  std::span<const Step> steps() const { return steps_; }
  std::size_t size() const { return steps_.size(); }
  bool empty() const { return steps_.empty(); }
  GridPosition endpoint() const { return end_; }

  std::string to_string() const;

  bool operator==(const LatticePath& other) const { return steps_ == other.steps_; }
  auto operator<=>(const LatticePath& other) const { return steps_ <=> other.steps_; }

 private:
  std::vector<Step> steps_;
  GridPosition end_{};
};

// Number of north steps taken at odd x; the path's weight is x^result.
int weight_exponent(const LatticePath& path);

// L_{i,j}(x). Positions strictly above the line (or with negative
// coordinates) give the zero polynomial.
Poly lattice_poly(GridPosition pos);

// All L_{i,j} for 0 <= i <= max_i, computed once. Overflow is reported with
// the offending position in the message.
class LatticeTable {
 public:
  explicit LatticeTable(int max_i);

  int max_i() const { return max_i_; }
  // Zero polynomial outside the valid region; DomainError if i > max_i.
  const Poly& at(GridPosition pos) const;

 private:
  int max_i_;
  // rows_[i][j] for 0 <= j <= i / 2
  std::vector<std::vector<Poly>> rows_;
};

// Every valid path to pos, in lexicographic order of the step strings (E < N).
// Empty when pos is above the line.
std::vector<LatticePath> enumerate_paths(GridPosition pos);

std::int64_t binomial(int n, int k);

// (1/n) C(n-1+k, n-1) C(2n-k, n+1), for n >= 1 and 0 <= k <= n-1.
std::int64_t t_coeff(int n, int k);

// C(3n, n) / (2n + 1).
std::int64_t catalan3(int n);

// sum_{k=0}^{n-2} (1/(n-1)) C(n-2+k, n-2) C(2n-2-k, n) x^k, for n >= 2.
Poly descent_formula(int n);

}  // namespace latpoly
