#include "latpoly/verify.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <optional>
#include <random>
#include <set>

#include "latpoly/errors.hpp"
#include "latpoly/eventree.hpp"
#include "latpoly/lattice.hpp"
#include "latpoly/matching.hpp"

namespace latpoly {

bool VerifyReport::overall() const {
  return std::all_of(checks.begin(), checks.end(), [](const VerifyCheck& c) { return c.passed; });
}

namespace {

using Witness = std::optional<std::string>;

std::string range_n(int lo, int hi) { return std::to_string(lo) + "<=n<=" + std::to_string(hi); }
std::string range_i(int hi) { return "0<=i<=" + std::to_string(hi) + ", 0<=2j<=i"; }

void record(VerifyReport& report, std::string name, std::string range, const std::function<Witness()>& body) {
  VerifyCheck check{std::move(name), std::move(range), false, ""};
  try {
    Witness w = body();
    check.passed = !w.has_value();
    if (w) check.detail = *w;
  } catch (const std::exception& e) {
    check.detail = std::string("exception: ") + e.what();
  }
  report.checks.push_back(std::move(check));
}

// Order-isomorphism by exhaustive subsequence choice, sharing nothing with
// contains_pattern's backtracking.
bool naive_contains(const std::vector<int>& seq, const std::vector<int>& pattern) {
  const std::size_t n = seq.size();
  const std::size_t k = pattern.size();
  if (k == 0) return true;
  if (k > n) return false;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != k) continue;
    std::vector<int> sub;
    for (std::size_t b = 0; b < n; ++b) {
      if (mask & (1u << b)) sub.push_back(seq[b]);
    }
    bool iso = true;
    for (std::size_t a = 0; a < k && iso; ++a) {
      for (std::size_t b = 0; b < k && iso; ++b) {
        iso = ((sub[a] < sub[b]) == (pattern[a] < pattern[b])) && ((sub[a] == sub[b]) == (pattern[a] == pattern[b]));
      }
    }
    if (iso) return true;
  }
  return false;
}

Poly weighted_path_sum(GridPosition pos) {
  Poly total;
  for (const LatticePath& p : enumerate_paths(pos)) {
    total += Poly::monomial(1, static_cast<std::size_t>(weight_exponent(p)));
  }
  return total;
}

Witness check_matching_bijection(int max_i) {
  for (int i = 0; i <= max_i; ++i) {
    for (int j = 0; 2 * j <= i; ++j) {
      const std::string at = GridPosition{i, j}.to_string();
      std::vector<PartialMatching> images;
      for (const LatticePath& p : enumerate_paths({i, j})) {
        PartialMatching m = path_to_matching(p);
        if (!in_class_q(m)) return "image of " + p.to_string() + " not in class Q";
        if (!avoids_12312(m)) return "image of " + p.to_string() + " contains 12312";
        if (crossings(m) != weight_exponent(p)) return "crossings != weight for path " + p.to_string();
        if (matching_to_path(m) != p) return "path roundtrip fails for " + p.to_string();
        images.push_back(std::move(m));
      }
      std::sort(images.begin(), images.end());
      if (std::adjacent_find(images.begin(), images.end()) != images.end()) return "duplicate image at " + at;
      std::vector<PartialMatching> oracle = enumerate_q(i, j);
      if (images != oracle) return "image set differs from brute-force Q at " + at;
      for (const PartialMatching& m : oracle) {
        if (path_to_matching(matching_to_path(m)) != m) {
          return "matching roundtrip fails for " + format_sequence(canonical_sequence(m));
        }
      }
    }
  }
  return std::nullopt;
}

Witness check_tree_bijection(int max_n) {
  for (int n = 1; n <= max_n; ++n) {
    // prefix distinctness and the structural invariants at every position
    for (int i = 0; i <= 2 * n; ++i) {
      for (int j = 0; 2 * j <= i; ++j) {
        std::set<std::string> seen;
        for (const LatticePath& p : enumerate_paths({i, j})) {
          EvenTree t = path_to_tree(p);
          if (t.dotted() != (i % 2 == 1)) return "dotted flag wrong for " + p.to_string();
          int expected_edges = i % 2 == 1 ? i + 1 : i;
          if (t.edge_count() != expected_edges) return "edge count wrong for " + p.to_string();
          if (!seen.insert(t.to_parens()).second) return "duplicate tree at " + GridPosition{i, j}.to_string();
        }
      }
    }
    const GridPosition end{2 * n, n};
    std::vector<EvenTree> images;
    for (const LatticePath& p : enumerate_paths(end)) {
      EvenTree t = path_to_tree(p);
      if (r_index(t) != weight_exponent(p)) return "r-index != weight for path " + p.to_string();
      if (tree_to_path(t, end) != p) return "path roundtrip fails for " + p.to_string();
      images.push_back(std::move(t));
    }
    std::sort(images.begin(), images.end());
    if (images != enumerate_even_trees(2 * n)) return "image set differs from all even trees at n=" + std::to_string(n);
    for (const EvenTree& t : images) {
      if (path_to_tree(tree_to_path(t, end)) != t) return "tree roundtrip fails for " + t.to_parens();
    }
  }
  return std::nullopt;
}

}  // namespace

VerifyReport run_verification(const VerifyOptions& options) {
  if (options.max_n < 1) throw DomainError("verification requires max_n >= 1");
  const int max_n = options.max_n;
  auto t_coeff_fn = options.t_coeff ? options.t_coeff : std::function<std::int64_t(int, int)>(t_coeff);
  VerifyReport report;
  const LatticeTable table(2 * max_n);

  record(report, "closed-form T_{n,k} matches L_{2n,n}", range_n(1, max_n), [&]() -> Witness {
    for (int n = 1; n <= max_n; ++n) {
      const Poly& l = table.at({2 * n, n});
      if (l.degree() > n - 1) return "degree of L_{2n,n} exceeds n-1 at n=" + std::to_string(n);
      for (int k = 0; k <= n - 1; ++k) {
        if (l[static_cast<std::size_t>(k)] != t_coeff_fn(n, k)) {
          return "(n,k)=(" + std::to_string(n) + "," + std::to_string(k) + "): L coefficient " +
                 std::to_string(l[static_cast<std::size_t>(k)]) + " vs formula " + std::to_string(t_coeff_fn(n, k));
        }
      }
    }
    return std::nullopt;
  });

  record(report, "L_{2n,n}(1) equals the 3-Catalan number", range_n(1, max_n), [&]() -> Witness {
    for (int n = 1; n <= max_n; ++n) {
      if (table.at({2 * n, n}).eval_at_one() != catalan3(n)) return "n=" + std::to_string(n);
    }
    return std::nullopt;
  });

  record(report, "descent formula D_{n+1}(x,1) equals L_{2n,n}", range_n(1, max_n), [&]() -> Witness {
    for (int n = 1; n <= max_n; ++n) {
      if (descent_formula(n + 1) != table.at({2 * n, n})) return "n=" + std::to_string(n);
    }
    return std::nullopt;
  });

  record(report, "row sum over j of L_{2n-1,j} equals L_{2n,n}", range_n(1, max_n), [&]() -> Witness {
    for (int n = 1; n <= max_n; ++n) {
      Poly sum;
      for (int j = 0; j <= n - 1; ++j) sum += table.at({2 * n - 1, j});
      if (sum != table.at({2 * n, n})) return "n=" + std::to_string(n);
    }
    return std::nullopt;
  });

  record(report, "L_{2n,n} equals L_{2n,n-1}", range_n(1, max_n), [&]() -> Witness {
    for (int n = 1; n <= max_n; ++n) {
      if (table.at({2 * n, n}) != table.at({2 * n, n - 1})) return "n=" + std::to_string(n);
    }
    return std::nullopt;
  });

  const int path_i = 2 * std::min(max_n, kPathEnumMaxN);
  record(report, "explicit path enumeration matches the recurrence", range_i(path_i), [&]() -> Witness {
    for (int i = 0; i <= path_i; ++i) {
      for (int j = 0; 2 * j <= i; ++j) {
        if (weighted_path_sum({i, j}) != table.at({i, j})) return "(i,j)=" + GridPosition{i, j}.to_string();
      }
    }
    return std::nullopt;
  });

  const int matching_i = 2 * std::min(max_n, kMatchingMaxN);
  record(report, "brute-force Q_{i,j} equals L_{i,j}", range_i(matching_i), [&]() -> Witness {
    for (int i = 0; i <= matching_i; ++i) {
      for (int j = 0; 2 * j <= i; ++j) {
        if (q_poly(i, j) != table.at({i, j})) return "(i,j)=" + GridPosition{i, j}.to_string();
      }
    }
    return std::nullopt;
  });

  record(report, "path/matching bijection", range_i(matching_i), [&] { return check_matching_bijection(matching_i); });

  const int tree_poly_n = std::min(max_n, kTreePolyMaxN);
  record(report, "brute-force R_n equals L_{2n,n}", range_n(1, tree_poly_n), [&]() -> Witness {
    for (int n = 1; n <= tree_poly_n; ++n) {
      if (r_poly(n) != table.at({2 * n, n})) return "n=" + std::to_string(n);
    }
    return std::nullopt;
  });

  const int tree_bij_n = std::min(max_n, kTreeBijectionMaxN);
  record(report, "path/even-tree bijection", range_n(1, tree_bij_n), [&] { return check_tree_bijection(tree_bij_n); });

  record(report, "pattern engine agrees with exhaustive matcher",
         "500 random sequences, length<=12, seed=" + std::to_string(options.seed), [&]() -> Witness {
           std::mt19937_64 rng(options.seed);
           std::uniform_int_distribution<int> seq_len(0, 12);
           std::uniform_int_distribution<int> pat_len(1, 5);
           std::uniform_int_distribution<int> seq_val(1, 6);
           std::uniform_int_distribution<int> pat_val(1, 3);
           for (int trial = 0; trial < 500; ++trial) {
             std::vector<int> seq(static_cast<std::size_t>(seq_len(rng)));
             for (int& v : seq) v = seq_val(rng);
             std::vector<int> pat(static_cast<std::size_t>(pat_len(rng)));
             for (int& v : pat) v = pat_val(rng);
             if (contains_pattern(seq, pat) != naive_contains(seq, pat)) {
               return "sequence " + format_sequence(seq) + " pattern " + format_sequence(pat);
             }
           }
           return std::nullopt;
         });

  return report;
}

}  // namespace latpoly
