#pragma once

/**
 * @file matching.hpp
 * @brief Partial matchings on the points 1..m of a line, their canonical
 *        sequential forms, order-isomorphic pattern containment, the
 *        generalized crossing number and the class Q of balanced partial
 *        matchings.
 *
 * A partial matching is generated from a lattice path by folding two moves
 * over its steps: an east step appends an isolated point on the right, and a
 * north step joins the two middle isolated points (even count) or the two
 * isolated points flanking the middle one (odd count). The map
 * path_to_matching is a bijection from paths ending at (i, j) onto the
 * 12312-avoiding members of Q_i with j edges, and it carries the path weight
 * exponent to the crossing number.
 */

#include <array>
#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "latpoly/lattice.hpp"
#include "latpoly/poly.hpp"

namespace latpoly {

struct Edge {
  int left = 0;
  int right = 0;

  auto operator<=>(const Edge&) const = default;
};

// Labels assigned per point by order of first occurrence; an isolated point
// carries a label seen once, both endpoints of an edge share a label.
using SequentialForm = std::vector<int>;

inline constexpr std::array<int, 5> kPattern12312{1, 2, 3, 1, 2};

class PartialMatching {
 public:
  PartialMatching() = default;
  // Throws DomainError unless every endpoint lies in 1..points, left < right,
  // and the edges are pairwise disjoint. Edges are stored sorted.
  PartialMatching(int points, std::vector<Edge> edges);

  // Each label must occur once (isolated point) or twice (edge endpoints).
  static PartialMatching from_sequence(std::span<const int> labels);

  int points() const { return points_; }
  std::span<const Edge> edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int isolated_count() const { return points_ - 2 * edge_count(); }
  std::vector<int> isolated_points() const;
  bool is_isolated(int point) const;

  bool operator==(const PartialMatching&) const = default;
  auto operator<=>(const PartialMatching&) const = default;

 private:
  int points_ = 0;
  std::vector<Edge> edges_;  // sorted by left endpoint
};

SequentialForm canonical_sequence(const PartialMatching& m);
// The canonical sequence with every isolated point treated as a half-edge that
// closes beyond the last point: the isolated labels are appended once more,
// in reverse order, so the half-edges nest.
SequentialForm closed_sequence(const PartialMatching& m);
std::string format_sequence(std::span<const int> labels);  // "1,2,3,1,3"
SequentialForm parse_sequence(std::string_view text);      // inverse; ParseError on junk

// True iff some subsequence of seq is order-isomorphic to pattern
// (ties in the pattern must be ties in the subsequence and vice versa).
bool contains_pattern(std::span<const int> seq, std::span<const int> pattern);
// Tested on closed_sequence. On the plain canonical sequence the brute-force
// class is too large from 6 points on; e.g. 1,2,3,1,3,4 (edges (1,4),(3,5))
// is balanced and plainly avoids 12312 but has no generating path.
bool avoids_12312(const PartialMatching& m);

// Edge-edge crossings plus (edge, isolated point strictly inside it) pairs.
int crossings(const PartialMatching& m);

// Isolated points strictly left of, strictly inside, and strictly right of an edge.
struct EdgeBalance {
  int left = 0;
  int covered = 0;
  int right = 0;
};
EdgeBalance balance(const PartialMatching& m, const Edge& e);

// nullopt when m is in Q, otherwise a description of the first violation.
std::optional<std::string> class_q_violation(const PartialMatching& m);
bool in_class_q(const PartialMatching& m);

// Brute force: every 2*edges-subset of 1..points, every perfect pairing on it,
// filtered by class Q and 12312-avoidance. Sorted by edge list.
std::vector<PartialMatching> enumerate_q(int points, int edges);
Poly q_poly(int points, int edges);

// Appends an isolated point.
PartialMatching shift(const PartialMatching& m);
// Joins the middle isolated points; throws DomainError("lift unavailable ...")
// with fewer than two isolated points.
PartialMatching lift(const PartialMatching& m);

PartialMatching path_to_matching(const LatticePath& path);
// Throws DomainError naming the violated condition when m is outside Q or
// contains 12312, and "not in the image of the construction" when the
// reverse procedure gets stuck.
LatticePath matching_to_path(const PartialMatching& m);

}  // namespace latpoly
