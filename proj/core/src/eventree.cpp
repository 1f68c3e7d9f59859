#include "latpoly/eventree.hpp"

#include <algorithm>
#include <functional>

#include "latpoly/errors.hpp"

namespace latpoly {

int TreeNode::edge_count() const {
  int total = degree();
  for (const TreeNode& c : children) total += c.edge_count();
  return total;
}

namespace {

void check_even(const TreeNode& node) {
  if (node.degree() % 2 != 0) {
    throw DomainError("node with " + std::to_string(node.degree()) + " children in an even tree");
  }
  for (const TreeNode& c : node.children) check_even(c);
}

void write_parens(const TreeNode& node, std::string& out) {
  for (const TreeNode& c : node.children) {
    out += '(';
    write_parens(c, out);
    out += ')';
  }
}

// Sum of degrees of right children over the whole tree.
int right_degree_sum(const TreeNode& node) {
  int sum = 0;
  const int half = node.degree() / 2;
  for (int idx = 0; idx < node.degree(); ++idx) {
    const TreeNode& c = node.children[static_cast<std::size_t>(idx)];
    if (idx >= half) sum += c.degree();
    sum += right_degree_sum(c);
  }
  return sum;
}

}  // namespace

EvenTree::EvenTree(TreeNode root, bool dotted) : root_(std::move(root)), dotted_(dotted) {
  check_even(root_);
  if (dotted_ && (root_.degree() < 2 || !root_.children.front().is_leaf())) {
    throw DomainError("a dotted tree needs at least two root children and a leaf first child");
  }
}

std::string EvenTree::to_parens() const {
  std::string out = dotted_ ? "*" : "";
  write_parens(root_, out);
  return out;
}

EvenTree EvenTree::parse_parens(std::string_view text) {
  bool dotted = false;
  if (!text.empty() && text.front() == '*') {
    dotted = true;
    text.remove_prefix(1);
  }
  TreeNode root;
  std::vector<TreeNode*> stack{&root};
  for (std::size_t idx = 0; idx < text.size(); ++idx) {
    char c = text[idx];
    if (c == '(') {
      stack.back()->children.emplace_back();
      stack.push_back(&stack.back()->children.back());
    } else if (c == ')') {
      if (stack.size() == 1) throw ParseError("unbalanced ')' at position " + std::to_string(idx));
      stack.pop_back();
    } else {
      throw ParseError("invalid tree character '" + std::string(1, c) + "' at position " + std::to_string(idx));
    }
  }
  if (stack.size() != 1) throw ParseError("unbalanced '(' in tree encoding");
  try {
    return EvenTree(std::move(root), dotted);
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

int r_index(const EvenTree& tree) {
  int sum = right_degree_sum(tree.root());
  if (sum % 2 != 0) throw std::logic_error("odd right-degree sum in an even tree");
  return sum / 2;
}

namespace {

// All ordered forests of even trees with exactly `edges` edges whose number of
// roots is `roots`; appended to out.
void forests(int edges, int roots, std::vector<std::vector<TreeNode>>& out);

// All even trees (as nodes) with exactly `edges` edges.
std::vector<TreeNode> trees_with_edges(int edges) {
  std::vector<TreeNode> out;
  if (edges == 0) {
    out.emplace_back();
    return out;
  }
  for (int degree = 2; degree <= edges; degree += 2) {
    std::vector<std::vector<TreeNode>> children_options;
    forests(edges - degree, degree, children_options);
    for (auto& children : children_options) out.push_back(TreeNode{std::move(children)});
  }
  return out;
}

void forests(int edges, int roots, std::vector<std::vector<TreeNode>>& out) {
  if (roots == 0) {
    if (edges == 0) out.emplace_back();
    return;
  }
  for (int first = 0; first <= edges; first += 2) {
    std::vector<TreeNode> heads = trees_with_edges(first);
    std::vector<std::vector<TreeNode>> tails;
    forests(edges - first, roots - 1, tails);
    for (const TreeNode& head : heads) {
      for (const auto& tail : tails) {
        std::vector<TreeNode> forest;
        forest.reserve(tail.size() + 1);
        forest.push_back(head);
        forest.insert(forest.end(), tail.begin(), tail.end());
        out.push_back(std::move(forest));
      }
    }
  }
}

}  // namespace

std::vector<EvenTree> enumerate_even_trees(int edges) {
  if (edges < 0 || edges % 2 != 0) {
    throw DomainError("enumerate_even_trees requires a nonnegative even edge count, got " + std::to_string(edges));
  }
  std::vector<EvenTree> out;
  for (TreeNode& root : trees_with_edges(edges)) out.emplace_back(std::move(root));
  std::sort(out.begin(), out.end(),
            [](const EvenTree& a, const EvenTree& b) { return a.to_parens() < b.to_parens(); });
  return out;
}

Poly r_poly(int n) {
  if (n < 1) throw DomainError("r_poly requires n >= 1");
  Poly total;
  for (const EvenTree& t : enumerate_even_trees(2 * n)) {
    total += Poly::monomial(1, static_cast<std::size_t>(r_index(t)));
  }
  return total;
}

EvenTree shift(const EvenTree& tree) {
  if (tree.dotted()) return EvenTree(tree.root(), false);
  TreeNode root = tree.root();
  root.children.insert(root.children.begin(), TreeNode{});
  root.children.push_back(TreeNode{});
  return EvenTree(std::move(root), true);
}

EvenTree lift(const EvenTree& tree, GridPosition pos) {
  const std::string unavailable = "lift unavailable at " + pos.to_string() + ": ";
  if (!pos.on_or_below_line() || pos.i < 2 * (pos.j + 1)) {
    throw DomainError(unavailable + "north step would cross the line x=2y");
  }
  if (tree.dotted() != (pos.i % 2 == 1)) {
    throw DomainError(unavailable + "tree is " + (tree.dotted() ? "" : "not ") + "dotted at this position");
  }
  TreeNode root = tree.root();
  auto& kids = root.children;
  if (pos.i % 2 == 1) {
    if (kids.size() < 4) throw DomainError(unavailable + "root needs at least four children");
    // c2 and c_{2t-1} become the outer children of the dotted last child
    TreeNode second = std::move(kids[1]);
    TreeNode second_last = std::move(kids[kids.size() - 2]);
    kids.erase(kids.end() - 2);
    kids.erase(kids.begin() + 1);
    auto& target = kids.back().children;
    target.insert(target.begin(), std::move(second));
    target.push_back(std::move(second_last));
    return EvenTree(std::move(root), true);
  }
  if (pos.j == pos.i / 2 - 1) return tree;
  if (kids.size() < 4) throw DomainError(unavailable + "root needs at least four children");
  // c1 and c_{2t} become the outer children of c2
  TreeNode first = std::move(kids.front());
  TreeNode last = std::move(kids.back());
  kids.pop_back();
  kids.erase(kids.begin());
  auto& target = kids.front().children;
  target.insert(target.begin(), std::move(first));
  target.push_back(std::move(last));
  return EvenTree(std::move(root), false);
}

EvenTree path_to_tree(const LatticePath& path) {
  EvenTree tree;
  GridPosition pos{};
  for (Step s : path.steps()) {
    tree = s == Step::East ? shift(tree) : lift(tree, pos);
    pos = pos.after(s);
  }
  return tree;
}

LatticePath tree_to_path(const EvenTree& tree, GridPosition endpoint) {
  const std::string stuck = "not in the image of the construction";
  if (!endpoint.on_or_below_line()) throw DomainError(stuck + ": endpoint " + endpoint.to_string() + " is above the line");
  const int expected_edges = endpoint.i % 2 == 1 ? endpoint.i + 1 : endpoint.i;
  if (tree.edge_count() != expected_edges || tree.dotted() != (endpoint.i % 2 == 1)) {
    throw DomainError(stuck + ": tree with " + std::to_string(tree.edge_count()) + " edges" +
                      (tree.dotted() ? " (dotted)" : "") + " cannot sit at " + endpoint.to_string());
  }

  TreeNode root = tree.root();
  auto& kids = root.children;
  GridPosition pos = endpoint;
  std::vector<Step> reversed;
  while (pos.i > 0 || pos.j > 0) {
    if (pos.i == 2 * pos.j) {
      // only a north step reaches the line; at even i the lift was the identity
      reversed.push_back(Step::North);
      --pos.j;
      continue;
    }
    if (pos.i % 2 == 1) {
      if (kids.size() < 2 || !kids.front().is_leaf()) throw DomainError(stuck + ": malformed dotted pair");
      if (kids.back().is_leaf()) {
        // inverse shift: drop the dotted pair
        kids.pop_back();
        kids.erase(kids.begin());
        reversed.push_back(Step::East);
        --pos.i;
      } else {
        // inverse odd lift: outer children of the last child go back to
        // root positions 2 and 2t-1
        if (pos.j == 0) throw DomainError(stuck + ": north step below the x-axis");
        auto& source = kids.back().children;
        TreeNode first = std::move(source.front());
        TreeNode last = std::move(source.back());
        source.pop_back();
        source.erase(source.begin());
        kids.insert(kids.end() - 1, std::move(last));
        kids.insert(kids.begin() + 1, std::move(first));
        reversed.push_back(Step::North);
        --pos.j;
      }
      continue;
    }
    if (kids.empty()) throw DomainError(stuck + ": empty tree at " + pos.to_string());
    if (kids.front().is_leaf()) {
      // inverse shift: the outer pair was dotted one step earlier
      if (kids.size() < 2) throw DomainError(stuck + ": root has a single child");
      reversed.push_back(Step::East);
      --pos.i;
    } else {
      // inverse even lift: outer children of the first child go back to the
      // root's outer positions
      if (pos.j == 0) throw DomainError(stuck + ": north step below the x-axis");
      auto& source = kids.front().children;
      TreeNode first = std::move(source.front());
      TreeNode last = std::move(source.back());
      source.pop_back();
      source.erase(source.begin());
      kids.insert(kids.begin(), std::move(first));
      kids.push_back(std::move(last));
      reversed.push_back(Step::North);
      --pos.j;
    }
  }
  if (!kids.empty()) throw DomainError(stuck + ": tree not exhausted at the origin");

  LatticePath path;
  try {
    for (auto it = reversed.rbegin(); it != reversed.rend(); ++it) path.push_back(*it);
  } catch (const DomainError& e) {
    throw DomainError(stuck + ": " + e.what());
  }
  if (path_to_tree(path) != tree) throw DomainError(stuck + ": reverse path does not regenerate the tree");
  return path;
}

}  // namespace latpoly
