#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "domgame/graph.hpp"

namespace domgame {

/// Correspondence between a cubic graph F and its triangle inflation G:
/// F-vertex u owns the G-triangle `triangle[u]`, and F-edge i is realized by
/// the G-edge `connector[i]`.
struct TriangleMap {
    std::vector<std::array<int, 3>> triangle;
    std::vector<std::pair<int, int>> connector;
};

/// Replaces every vertex of a cubic graph by a triangle; the k-th vertex of
/// t(u) takes u's k-th incident edge in ascending neighbor order. The result
/// is claw-free cubic and free of K4, induced diamonds and two-triangle
/// double links. Throws when F is not cubic.
std::pair<Graph, TriangleMap> inflate(const Graph& f);

/// Inverse of inflate: contracts each triangle of a claw-free cubic host to
/// a vertex. Requires the host to be free of K4, induced diamonds and
/// double-linked triangle pairs; throws a std::invalid_argument naming the
/// violating structure otherwise.
std::pair<Graph, TriangleMap> contract_triangles(const Graph& g);

/// Whether is_hamiltonian(F) == is_hamiltonian(inflate(F)). nullopt when
/// n(F) exceeds the backtracking budget.
std::optional<bool> check_hamiltonicity_transfer(const Graph& f, int budget_n = 12);

}  // namespace domgame
