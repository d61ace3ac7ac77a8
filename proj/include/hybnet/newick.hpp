#pragma once

#include <string>
#include <string_view>

#include "hybnet/forest.hpp"
#include "hybnet/tree.hpp"

namespace hybnet {

// One Newick tree per line; blank lines and '#' comments are ignored; LF or
// CRLF. Rooted input with a degree-2 root is unrooted by suppressing the
// root. Branch lengths and internal node names are skipped.
// Throws ParseError(SyntaxError/DuplicateLabel/NonBinary).
Forest parse_forest(std::string_view text);

// Exactly one tree. Throws ParseError(SyntaxError) when the document holds
// zero or several trees.
PhyloTree parse_tree(std::string_view text);

// Canonical rendering, one component per line, components sorted.
std::string serialize_forest(const Forest& forest);
std::string serialize_tree(const PhyloTree& tree);

// True for tokens usable as leaf labels.
bool valid_label(std::string_view token);

}  // namespace hybnet
