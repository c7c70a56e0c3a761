#pragma once

#include <array>
#include <compare>

#include "domgame/graph.hpp"

namespace domgame {

/// Minimum upper-triangle adjacency bitstring over all vertex relabelings,
/// packed MSB-first into two words. Supports n <= 16 (120 bits).
struct CanonicalForm {
    int n = 0;
    std::array<std::uint64_t, 2> bits{0, 0};

    auto operator<=>(const CanonicalForm&) const = default;
};

CanonicalForm canonical_form(const Graph& g);

/// Rebuilds the representative graph encoded by a canonical form.
Graph graph_from_form(const CanonicalForm& f);

bool is_isomorphic(const Graph& a, const Graph& b);

struct CanonicalFormHash {
    std::size_t operator()(const CanonicalForm& f) const {
        std::uint64_t h = f.bits[0] * 0x9e3779b97f4a7c15ULL;
        h ^= f.bits[1] + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h ^ static_cast<std::uint64_t>(f.n);
    }
};

}  // namespace domgame
