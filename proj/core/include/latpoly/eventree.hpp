#pragma once

/**
 * @file eventree.hpp
 * @brief Even plane trees (every vertex has an even number of children), the
 *        r-index statistic, and the shift/lift generation of even trees along
 *        lattice paths.
 *
 * With 2k children the first k are left children and the last k are right
 * children; the r-index is half the total degree of all right children.
 *
 * Generation walks a lattice path from the empty tree. At odd x the tree
 * carries a "dotted" pair: the root's first and last edges are provisional.
 * Shifting either solidifies the dotted pair or adds a new dotted pair of
 * leaves around the root. Lifting at odd x moves the root's second and
 * second-to-last subtrees under the dotted last child (r-index + 1); at even
 * x it moves the root's outer subtrees under the root's second child
 * (r-index unchanged), except on the line i = 2(j+1) where it is the
 * identity.
 */

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "latpoly/lattice.hpp"
#include "latpoly/poly.hpp"

namespace latpoly {

struct TreeNode {
  std::vector<TreeNode> children;

  int degree() const { return static_cast<int>(children.size()); }
  bool is_leaf() const { return children.empty(); }
  int edge_count() const;

  bool operator==(const TreeNode&) const = default;
};

class EvenTree {
 public:
  EvenTree() = default;
  // Throws DomainError when some node has an odd number of children, or when
  // dotted is set but the root has fewer than two children or a non-leaf
  // first child.
  explicit EvenTree(TreeNode root, bool dotted = false);

  const TreeNode& root() const { return root_; }
  bool dotted() const { return dotted_; }
  // Includes the dotted pair when present.
  int edge_count() const { return root_.edge_count(); }

  // Parenthesis encoding: every non-root node is "(" children ")", the root's
  // children are concatenated, and a leading '*' marks a dotted tree.
  std::string to_parens() const;
  static EvenTree parse_parens(std::string_view text);

  bool operator==(const EvenTree&) const = default;
  bool operator<(const EvenTree& other) const { return to_parens() < other.to_parens(); }

 private:
  TreeNode root_;
  bool dotted_ = false;
};

int r_index(const EvenTree& tree);

// All undotted even trees with the given (even) edge count, sorted by
// parenthesis encoding.
std::vector<EvenTree> enumerate_even_trees(int edges);
Poly r_poly(int n);

EvenTree shift(const EvenTree& tree);
// pos is the tree's current position. Throws DomainError("lift unavailable
// ...") when the north step is illegal or the tree does not match pos.
EvenTree lift(const EvenTree& tree, GridPosition pos);

EvenTree path_to_tree(const LatticePath& path);
// Inverse of path_to_tree for a tree at the given endpoint.
LatticePath tree_to_path(const EvenTree& tree, GridPosition endpoint);

}  // namespace latpoly
