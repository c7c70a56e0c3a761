#pragma once

#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "domgame/graph.hpp"

namespace domgame {

struct Graph6Error : std::runtime_error {
    enum class Kind { MalformedLength, TrailingBits, OverCap, BadCharacter, Truncated };

    Graph6Error(Kind k, const std::string& what) : std::runtime_error(what), kind(k) {}
    Kind kind;
};

/// Parses one graph6 record (no ">>graph6<<" prefix). cap rejects large n.
Graph parse_graph6(std::string_view line, int cap = Graph::kMaxVertices);

std::string encode_graph6(const Graph& g);

/// Reads graph6 records line by line, tolerating an optional ">>graph6<<"
/// header and blank lines. On a parse error rethrows with the 1-based line
/// number prepended.
std::vector<Graph> read_graph6_stream(std::istream& in, int cap = Graph::kMaxVertices);

}  // namespace domgame
