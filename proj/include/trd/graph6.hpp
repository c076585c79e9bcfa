#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "trd/graph.hpp"

namespace trd {

// graph6 interchange format (McKay layout): order byte(s), then the
// upper-triangle adjacency bits read column by column, packed big-endian
// into 6-bit groups, each group offset by 63. Throws std::invalid_argument
// on malformed input, nonzero padding bits, or order outside 1..64.
Graph parse_graph6(std::string_view text);

std::string to_graph6(const Graph& g);

// Reads a newline-delimited graph6 stream, skipping blank lines and an
// optional ">>graph6<<" header.
std::vector<Graph> read_graph6_stream(std::istream& in);

}  // namespace trd
