#include "domgame/builders.hpp"

namespace domgame {

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, std::move(e));
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, std::move(e));
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(n, std::move(e));
}

Graph complete_bipartite(int a, int b) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
    return Graph(a + b, std::move(e));
}

Graph star_graph(int leaves) { return complete_bipartite(1, leaves); }

Graph petersen_graph() {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);          // outer C_5
        e.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        e.emplace_back(i, 5 + i);                // spokes
    }
    return Graph(10, std::move(e));
}

Graph prism_graph() {
    return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    int na = a.vertex_count();
    std::vector<std::pair<int, int>> e = a.edges();
    for (auto [u, v] : b.edges()) e.emplace_back(na + u, na + v);
    return Graph(na + b.vertex_count(), std::move(e));
}

std::vector<Graph> equality_instances_n9() {
    std::vector<Graph> out;
    out.push_back(cycle_graph(9));
    // C_8 with a two-edge bridge across it
    out.push_back(Graph(9, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 0},
                            {1, 8}, {8, 5}}));
    // C_9 plus one long chord
    out.push_back(Graph(9, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 0},
                            {2, 6}}));
    // C_9 plus two chords
    out.push_back(Graph(9, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 0},
                            {1, 5}, {2, 7}}));
    // C_5 with two attached 4-paths sharing an inner edge
    out.push_back(Graph(9, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                            {0, 5}, {5, 6}, {6, 2},
                            {1, 8}, {8, 7}, {7, 4},
                            {6, 7}}));
    return out;
}

Graph equality_instance_n24() {
    std::vector<std::pair<int, int>> e;
    // 10-cycle
    for (int i = 0; i < 10; ++i) e.emplace_back(i, (i + 1) % 10);
    // branch from vertex 7 to a 5-cycle on {12..16}
    e.emplace_back(7, 10);
    e.emplace_back(10, 11);
    e.emplace_back(11, 12);
    e.emplace_back(12, 13);
    e.emplace_back(13, 14);
    e.emplace_back(14, 15);
    e.emplace_back(15, 16);
    e.emplace_back(16, 12);
    // branch from vertex 10 to a 5-cycle on {19..23}
    e.emplace_back(10, 17);
    e.emplace_back(17, 18);
    e.emplace_back(18, 19);
    e.emplace_back(19, 20);
    e.emplace_back(20, 21);
    e.emplace_back(21, 22);
    e.emplace_back(22, 23);
    e.emplace_back(23, 19);
    return Graph(24, std::move(e));
}

Graph equality_instance_n30() {
    std::vector<std::pair<int, int>> e;
    // two 7-paths joined in the middle
    for (int i = 0; i < 6; ++i) e.emplace_back(i, i + 1);
    for (int i = 7; i < 13; ++i) e.emplace_back(i, i + 1);
    e.emplace_back(3, 10);
    // a pendant 5-cycle at each of the four path ends
    auto pendant = [&e](int at, int base) {
        e.emplace_back(at, base);
        e.emplace_back(base, base + 1);
        e.emplace_back(base + 1, base + 2);
        e.emplace_back(base + 2, base + 3);
        e.emplace_back(base + 3, at);
    };
    pendant(0, 14);
    pendant(6, 18);
    pendant(7, 22);
    pendant(13, 26);
    return Graph(30, std::move(e));
}

}  // namespace domgame
