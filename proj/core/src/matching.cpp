#include "latpoly/matching.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>

#include "latpoly/errors.hpp"

namespace latpoly {

PartialMatching::PartialMatching(int points, std::vector<Edge> edges) : points_(points), edges_(std::move(edges)) {
  if (points < 0) throw DomainError("number of points must be nonnegative");
  std::vector<bool> used(static_cast<std::size_t>(points) + 1, false);
  for (const Edge& e : edges_) {
    if (e.left < 1 || e.right > points || e.left >= e.right) {
      throw DomainError("invalid edge (" + std::to_string(e.left) + "," + std::to_string(e.right) + ") on " +
                        std::to_string(points) + " points");
    }
    for (int p : {e.left, e.right}) {
      if (used[static_cast<std::size_t>(p)]) {
        throw DomainError("point " + std::to_string(p) + " is an endpoint of more than one edge");
      }
      used[static_cast<std::size_t>(p)] = true;
    }
  }
  std::sort(edges_.begin(), edges_.end());
}

PartialMatching PartialMatching::from_sequence(std::span<const int> labels) {
  std::map<int, std::vector<int>> occurrences;
  for (std::size_t idx = 0; idx < labels.size(); ++idx) {
    occurrences[labels[idx]].push_back(static_cast<int>(idx) + 1);
  }
  std::vector<Edge> edges;
  for (const auto& [label, where] : occurrences) {
    if (where.size() > 2) {
      throw DomainError("label " + std::to_string(label) + " occurs " + std::to_string(where.size()) + " times");
    }
    if (where.size() == 2) edges.push_back({where[0], where[1]});
  }
  return PartialMatching(static_cast<int>(labels.size()), std::move(edges));
}

std::vector<int> PartialMatching::isolated_points() const {
  std::vector<bool> used(static_cast<std::size_t>(points_) + 1, false);
  for (const Edge& e : edges_) {
    used[static_cast<std::size_t>(e.left)] = true;
    used[static_cast<std::size_t>(e.right)] = true;
  }
  std::vector<int> out;
  for (int p = 1; p <= points_; ++p) {
    if (!used[static_cast<std::size_t>(p)]) out.push_back(p);
  }
  return out;
}

bool PartialMatching::is_isolated(int point) const {
  if (point < 1 || point > points_) return false;
  return std::none_of(edges_.begin(), edges_.end(),
                      [point](const Edge& e) { return e.left == point || e.right == point; });
}

SequentialForm canonical_sequence(const PartialMatching& m) {
  SequentialForm labels(static_cast<std::size_t>(m.points()), 0);
  std::vector<int> partner(static_cast<std::size_t>(m.points()) + 1, 0);
  for (const Edge& e : m.edges()) {
    partner[static_cast<std::size_t>(e.left)] = e.right;
    partner[static_cast<std::size_t>(e.right)] = e.left;
  }
  int next = 0;
  for (int p = 1; p <= m.points(); ++p) {
    int other = partner[static_cast<std::size_t>(p)];
    if (other != 0 && other < p) {
      labels[static_cast<std::size_t>(p - 1)] = labels[static_cast<std::size_t>(other - 1)];
    } else {
      labels[static_cast<std::size_t>(p - 1)] = ++next;
    }
  }
  return labels;
}

SequentialForm closed_sequence(const PartialMatching& m) {
  SequentialForm labels = canonical_sequence(m);
  std::vector<int> isolated = m.isolated_points();
  for (auto it = isolated.rbegin(); it != isolated.rend(); ++it) {
    labels.push_back(labels[static_cast<std::size_t>(*it - 1)]);
  }
  return labels;
}

std::string format_sequence(std::span<const int> labels) {
  std::string out;
  for (std::size_t idx = 0; idx < labels.size(); ++idx) {
    if (idx) out += ",";
    out += std::to_string(labels[idx]);
  }
  return out;
}

SequentialForm parse_sequence(std::string_view text) {
  SequentialForm out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view token = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() || value < 1) {
      throw ParseError("invalid label '" + std::string(token) + "' at position " + std::to_string(out.size()));
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

namespace {

int compare(int a, int b) { return (a > b) - (a < b); }

}  // namespace

bool contains_pattern(std::span<const int> seq, std::span<const int> pattern) {
  if (pattern.empty()) return true;
  if (pattern.size() > seq.size()) return false;
  std::vector<std::size_t> chosen;
  chosen.reserve(pattern.size());
  // Extend a partial embedding one pattern symbol at a time; each new position
  // must relate to every earlier chosen entry the way the pattern does.
  std::function<bool(std::size_t)> extend = [&](std::size_t from) -> bool {
    std::size_t depth = chosen.size();
    if (depth == pattern.size()) return true;
    std::size_t remaining = pattern.size() - depth;
    for (std::size_t pos = from; pos + remaining <= seq.size(); ++pos) {
      bool consistent = true;
      for (std::size_t d = 0; d < depth && consistent; ++d) {
        consistent = compare(seq[chosen[d]], seq[pos]) == compare(pattern[d], pattern[depth]);
      }
      if (!consistent) continue;
      chosen.push_back(pos);
      if (extend(pos + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return extend(0);
}

bool avoids_12312(const PartialMatching& m) {
  return !contains_pattern(closed_sequence(m), kPattern12312);
}

int crossings(const PartialMatching& m) {
  int count = 0;
  auto edges = m.edges();
  for (std::size_t a = 0; a < edges.size(); ++a) {
    for (std::size_t b = 0; b < edges.size(); ++b) {
      const Edge& e = edges[a];
      const Edge& f = edges[b];
      if (e.left < f.left && f.left < e.right && e.right < f.right) ++count;
    }
  }
  for (const Edge& e : edges) count += balance(m, e).covered;
  return count;
}

EdgeBalance balance(const PartialMatching& m, const Edge& e) {
  EdgeBalance b;
  for (int p : m.isolated_points()) {
    if (p < e.left) {
      ++b.left;
    } else if (p > e.right) {
      ++b.right;
    } else {
      ++b.covered;
    }
  }
  return b;
}

std::optional<std::string> class_q_violation(const PartialMatching& m) {
  for (const Edge& e : m.edges()) {
    EdgeBalance b = balance(m, e);
    std::string name = "edge (" + std::to_string(e.left) + "," + std::to_string(e.right) + ")";
    if (b.covered > 1) {
      return name + " covers " + std::to_string(b.covered) + " isolated points";
    }
    if (b.left > b.right) {
      return name + " has " + std::to_string(b.left) + " isolated points to its left but only " +
             std::to_string(b.right) + " to its right";
    }
  }
  return std::nullopt;
}

bool in_class_q(const PartialMatching& m) { return !class_q_violation(m).has_value(); }

namespace {

// All perfect matchings of the given sorted point set; the smallest unmatched
// point is always paired first.
void for_each_pairing(std::vector<int>& free_points, std::vector<Edge>& acc,
                      const std::function<void(const std::vector<Edge>&)>& emit) {
  if (free_points.empty()) {
    emit(acc);
    return;
  }
  int first = free_points.front();
  for (std::size_t idx = 1; idx < free_points.size(); ++idx) {
    int second = free_points[idx];
    std::vector<int> rest;
    rest.reserve(free_points.size() - 2);
    for (std::size_t t = 1; t < free_points.size(); ++t) {
      if (t != idx) rest.push_back(free_points[t]);
    }
    acc.push_back({first, second});
    for_each_pairing(rest, acc, emit);
    acc.pop_back();
  }
}

}  // namespace

std::vector<PartialMatching> enumerate_q(int points, int edges) {
  if (points < 0 || edges < 0 || 2 * edges > points) {
    throw DomainError("enumerate_q requires 0 <= 2*edges <= points");
  }
  std::vector<PartialMatching> out;
  const int chosen_size = 2 * edges;
  std::vector<int> subset;
  std::function<void(int)> choose = [&](int next) {
    if (static_cast<int>(subset.size()) == chosen_size) {
      std::vector<int> free_points = subset;
      std::vector<Edge> acc;
      for_each_pairing(free_points, acc, [&](const std::vector<Edge>& pairing) {
        PartialMatching m(points, pairing);
        if (in_class_q(m) && avoids_12312(m)) out.push_back(std::move(m));
      });
      return;
    }
    for (int p = next; p <= points - (chosen_size - static_cast<int>(subset.size())) + 1; ++p) {
      subset.push_back(p);
      choose(p + 1);
      subset.pop_back();
    }
  };
  choose(1);
  std::sort(out.begin(), out.end());
  return out;
}

Poly q_poly(int points, int edges) {
  Poly total;
  for (const PartialMatching& m : enumerate_q(points, edges)) {
    total += Poly::monomial(1, static_cast<std::size_t>(crossings(m)));
  }
  return total;
}

PartialMatching shift(const PartialMatching& m) {
  return PartialMatching(m.points() + 1, std::vector<Edge>(m.edges().begin(), m.edges().end()));
}

PartialMatching lift(const PartialMatching& m) {
  std::vector<int> isolated = m.isolated_points();
  const std::size_t count = isolated.size();
  if (count < 2) {
    throw DomainError("lift unavailable at this position: " + std::to_string(count) + " isolated point(s)");
  }
  // ranks are 1-indexed: with 2k isolated points join ranks k and k+1,
  // with 2k+1 join ranks k and k+2
  const std::size_t k = count / 2;
  Edge added = count % 2 == 0 ? Edge{isolated[k - 1], isolated[k]} : Edge{isolated[k - 1], isolated[k + 1]};
  std::vector<Edge> edges(m.edges().begin(), m.edges().end());
  edges.push_back(added);
  return PartialMatching(m.points(), std::move(edges));
}

PartialMatching path_to_matching(const LatticePath& path) {
  PartialMatching m;
  for (Step s : path.steps()) {
    m = s == Step::East ? shift(m) : lift(m);
  }
  return m;
}

LatticePath matching_to_path(const PartialMatching& m) {
  if (auto violation = class_q_violation(m)) {
    throw DomainError("not in class Q: " + *violation);
  }
  if (!avoids_12312(m)) {
    throw DomainError("contains the pattern 12312 (isolated points closed as half-edges): " +
                      format_sequence(closed_sequence(m)));
  }
  const std::string stuck = "not in the image of the construction";
  std::vector<Step> reversed;
  PartialMatching state = m;
  while (state.points() > 0) {
    std::optional<Edge> rightmost_balanced;
    for (const Edge& e : state.edges()) {
      EdgeBalance b = balance(state, e);
      if (b.left > b.right) throw DomainError(stuck + ": unbalanced edge while unwinding");
      if (b.left == b.right && (!rightmost_balanced || e.right > rightmost_balanced->right)) {
        rightmost_balanced = e;
      }
    }
    std::vector<Edge> edges(state.edges().begin(), state.edges().end());
    if (rightmost_balanced) {
      // undo a lift: the edge's endpoints become isolated again
      std::erase(edges, *rightmost_balanced);
      state = PartialMatching(state.points(), std::move(edges));
      reversed.push_back(Step::North);
    } else {
      // undo a shift: the last point has to be isolated
      if (!state.is_isolated(state.points())) {
        throw DomainError(stuck + ": last point " + std::to_string(state.points()) + " is not isolated");
      }
      state = PartialMatching(state.points() - 1, std::move(edges));
      reversed.push_back(Step::East);
    }
  }
  LatticePath path;
  try {
    for (auto it = reversed.rbegin(); it != reversed.rend(); ++it) path.push_back(*it);
  } catch (const DomainError& e) {
    throw DomainError(stuck + ": " + e.what());
  }
  if (path_to_matching(path) != m) throw DomainError(stuck + ": reverse path does not regenerate the matching");
  return path;
}

}  // namespace latpoly
