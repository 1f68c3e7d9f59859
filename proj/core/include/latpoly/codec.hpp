#pragma once

// JSON encodings shared by the command-line tool and by consumers of the
// library. Keys are emitted in a fixed order so dumps are byte-stable.
//
//   Poly            [c0, c1, ...]
//   LatticePath     "EEENEN"
//   PartialMatching {"m": 4, "edges": [[1,3],[2,4]]}
//   EvenTree        {"dotted": false, "root": [[], [[], []]]}

#include <string_view>

#include <nlohmann/json.hpp>

#include "latpoly/eventree.hpp"
#include "latpoly/lattice.hpp"
#include "latpoly/matching.hpp"
#include "latpoly/poly.hpp"

namespace latpoly {

using Json = nlohmann::ordered_json;

Json to_json(const Poly& p);
Json to_json(const LatticePath& p);
Json to_json(const PartialMatching& m);
Json to_json(const EvenTree& t);

// All decoders throw ParseError on malformed input; structural violations of
// the decoded object (overlapping edges, odd degrees) are reported the same
// way.
Poly poly_from_json(const Json& j);
LatticePath path_from_json(const Json& j);
PartialMatching matching_from_json(const Json& j);
EvenTree tree_from_json(const Json& j);

// Text-or-JSON readers used for command-line input:
//   paths      "EEN" or "\"EEN\""
//   matchings  JSON object or sequential form "1,2,3,1,3"
//   trees      JSON object or parenthesis encoding "*()(()())"
LatticePath read_path(std::string_view text);
PartialMatching read_matching(std::string_view text);
EvenTree read_tree(std::string_view text);

}  // namespace latpoly
