#pragma once

#include <string>
#include <string_view>

#include "hybnet/network.hpp"

namespace hybnet {

// Edge-list document: one "u -- v" per line; a repeated line adds a parallel
// edge; degree-1 vertices are leaves named by their token. A line holding a
// single token declares a lone vertex (the one-leaf network). '#' starts a
// comment. Throws ParseError(SyntaxError/DegreeViolation/Disconnected/TripleEdge).
PseudoNetwork parse_network(std::string_view text);

// Edges sorted by endpoint names; internal vertices named v1..vk in id order
// (prefixed with '_' as often as needed to avoid clashing with a leaf).
std::string serialize_network(const PseudoNetwork& net);

}  // namespace hybnet
