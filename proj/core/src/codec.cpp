#include "latpoly/codec.hpp"

#include <cctype>
#include <string>

#include "latpoly/errors.hpp"

namespace latpoly {

namespace {

Json node_to_json(const TreeNode& node) {
  Json arr = Json::array();
  for (const TreeNode& c : node.children) arr.push_back(node_to_json(c));
  return arr;
}

TreeNode node_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("tree node must be an array of children");
  TreeNode node;
  for (const Json& c : j) node.children.push_back(node_from_json(c));
  return node;
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Json to_json(const Poly& p) {
  Json arr = Json::array();
  for (Poly::Coeff c : p.coeffs()) arr.push_back(c);
  return arr;
}

Json to_json(const LatticePath& p) { return p.to_string(); }

Json to_json(const PartialMatching& m) {
  Json edges = Json::array();
  for (const Edge& e : m.edges()) edges.push_back(Json::array({e.left, e.right}));
  Json out = Json::object();
  out["m"] = m.points();
  out["edges"] = std::move(edges);
  return out;
}

Json to_json(const EvenTree& t) {
  Json out = Json::object();
  out["dotted"] = t.dotted();
  out["root"] = node_to_json(t.root());
  return out;
}

Poly poly_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("polynomial must be an array of integer coefficients");
  std::vector<Poly::Coeff> coeffs;
  for (const Json& c : j) {
    if (!c.is_number_integer()) throw ParseError("polynomial coefficient must be an integer");
    coeffs.push_back(c.get<Poly::Coeff>());
  }
  return Poly(std::move(coeffs));
}

LatticePath path_from_json(const Json& j) {
  if (!j.is_string()) throw ParseError("path must be a string over {E,N}");
  return LatticePath::parse(j.get<std::string>());
}

PartialMatching matching_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("m") || !j.contains("edges")) {
    throw ParseError("matching must be an object with keys \"m\" and \"edges\"");
  }
  if (!j["m"].is_number_integer()) throw ParseError("\"m\" must be an integer");
  if (!j["edges"].is_array()) throw ParseError("\"edges\" must be an array");
  std::vector<Edge> edges;
  for (const Json& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
      throw ParseError("each edge must be a pair of integers");
    }
    edges.push_back({e[0].get<int>(), e[1].get<int>()});
  }
  try {
    return PartialMatching(j["m"].get<int>(), std::move(edges));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

EvenTree tree_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("root")) throw ParseError("tree must be an object with key \"root\"");
  bool dotted = false;
  if (j.contains("dotted")) {
    if (!j["dotted"].is_boolean()) throw ParseError("\"dotted\" must be a boolean");
    dotted = j["dotted"].get<bool>();
  }
  try {
    return EvenTree(node_from_json(j["root"]), dotted);
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

LatticePath read_path(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '"') return path_from_json(parse_json(text));
  return LatticePath::parse(text);
}

PartialMatching read_matching(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '{') return matching_from_json(parse_json(text));
  SequentialForm labels = parse_sequence(text);
  try {
    return PartialMatching::from_sequence(labels);
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

EvenTree read_tree(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '{') return tree_from_json(parse_json(text));
  return EvenTree::parse_parens(text);
}

}  // namespace latpoly
