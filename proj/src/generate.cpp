#include "domgame/generate.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <unordered_set>

#include "domgame/builders.hpp"
#include "domgame/canonical.hpp"
#include "domgame/recognizers.hpp"
#include "domgame/transforms.hpp"

namespace domgame {

namespace {

int bit_of(int u, int v) {
    if (u > v) std::swap(u, v);
    return v * (v - 1) / 2 + u;
}

Graph graph_from_mask(int n, std::uint32_t mask) {
    std::vector<std::pair<int, int>> edges;
    for_each_bit(mask, [&](int b) {
        int v = 1, acc = 0;
        while (acc + v <= b) acc += v, ++v;
        edges.emplace_back(b - acc, v);
    });
    return Graph(n, std::move(edges));
}

}  // namespace

std::vector<Graph> generate_all_graphs(int n) {
    if (n < 1 || n > 7) throw std::invalid_argument("direct generation supports 1 <= n <= 7");
    int m = n * (n - 1) / 2;

    std::vector<std::array<int, 21>> tables;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        std::array<int, 21> t{};
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u) t[bit_of(u, v)] = bit_of(p[u], p[v]);
        tables.push_back(t);
    } while (std::next_permutation(p.begin(), p.end()));

    std::vector<std::uint32_t> keep;
    long total = 1L << m;
#pragma omp parallel
    {
        std::vector<std::uint32_t> local;
#pragma omp for schedule(dynamic, 4096)
        for (long mask = 0; mask < total; ++mask) {
            bool canonical = true;
            // tables[0] is the identity
            for (std::size_t t = 1; canonical && t < tables.size(); ++t) {
                std::uint32_t img = 0;
                std::uint32_t rest = static_cast<std::uint32_t>(mask);
                while (rest) {
                    int b = std::countr_zero(rest);
                    rest &= rest - 1;
                    img |= std::uint32_t{1} << tables[t][b];
                }
                if (img < static_cast<std::uint32_t>(mask)) canonical = false;
            }
            if (canonical) local.push_back(static_cast<std::uint32_t>(mask));
        }
#pragma omp critical
        keep.insert(keep.end(), local.begin(), local.end());
    }
    std::sort(keep.begin(), keep.end());

    std::vector<Graph> out;
    out.reserve(keep.size());
    for (std::uint32_t mask : keep) out.push_back(graph_from_mask(n, mask));
    return out;
}

std::vector<Graph> generate_all_graphs_extended(int n) {
    if (n <= 7) return generate_all_graphs(n);
    if (n > 9) throw std::invalid_argument("extended generation supports n <= 9");
    std::vector<Graph> parents = generate_all_graphs_extended(n - 1);

    std::vector<CanonicalForm> forms;
#pragma omp parallel
    {
        std::vector<CanonicalForm> local;
#pragma omp for schedule(dynamic, 8)
        for (long idx = 0; idx < static_cast<long>(parents.size()); ++idx) {
            const Graph& parent = parents[idx];
            const auto& base = parent.edges();
            for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << (n - 1)); ++mask) {
                std::vector<std::pair<int, int>> edges = base;
                for_each_bit(mask, [&](int u) { edges.emplace_back(u, n - 1); });
                local.push_back(canonical_form(Graph(n, std::move(edges))));
            }
        }
#pragma omp critical
        forms.insert(forms.end(), local.begin(), local.end());
    }
    std::sort(forms.begin(), forms.end());
    forms.erase(std::unique(forms.begin(), forms.end()), forms.end());

    std::vector<Graph> out;
    out.reserve(forms.size());
    for (const auto& f : forms) out.push_back(graph_from_form(f));
    return out;
}

Graph insert_diamond(const Graph& g, int e) {
    auto [u, v] = g.edge(e);
    int n = g.vertex_count();
    if (n + 4 > Graph::kMaxVertices) throw std::invalid_argument("insertion exceeds the vertex cap");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < g.edge_count(); ++i)
        if (i != e) edges.push_back(g.edge(i));
    int p = n, c1 = n + 1, c2 = n + 2, q = n + 3;
    edges.emplace_back(u, p);
    edges.emplace_back(p, c1);
    edges.emplace_back(p, c2);
    edges.emplace_back(c1, c2);
    edges.emplace_back(c1, q);
    edges.emplace_back(c2, q);
    edges.emplace_back(q, v);
    return Graph(n + 4, std::move(edges));
}

Graph diamond_necklace(int k) {
    if (k < 2) throw std::invalid_argument("necklace needs at least two diamonds");
    if (4 * k > Graph::kMaxVertices) throw std::invalid_argument("necklace exceeds the vertex cap");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < k; ++i) {
        int p = 4 * i, c1 = 4 * i + 1, c2 = 4 * i + 2, q = 4 * i + 3;
        edges.emplace_back(p, c1);
        edges.emplace_back(p, c2);
        edges.emplace_back(c1, c2);
        edges.emplace_back(c1, q);
        edges.emplace_back(c2, q);
        edges.emplace_back(q, 4 * ((i + 1) % k));  // q_i to p_{i+1}
    }
    return Graph(4 * k, std::move(edges));
}

std::vector<Graph> claw_free_cubic_corpus(int max_n) {
    std::vector<std::pair<CanonicalForm, Graph>> found;
    std::unordered_set<CanonicalForm, CanonicalFormHash> seen;
    auto admit = [&](const Graph& g) {
        if (g.vertex_count() > max_n) return false;
        if (!is_cubic(g) || !is_claw_free(g) || !is_connected(g)) return false;
        CanonicalForm f = canonical_form(g);
        if (!seen.insert(f).second) return false;
        found.emplace_back(f, g);
        return true;
    };

    for (int n = 4; n <= std::min(8, max_n); n += 2)
        for (const Graph& g : generate_all_graphs_extended(n)) admit(g);

    // closure under diamond insertion, starting from the two base graphs
    std::vector<Graph> frontier{complete_graph(4), prism_graph()};
    for (const Graph& g : frontier) admit(g);
    while (!frontier.empty()) {
        std::vector<Graph> next;
        for (const Graph& g : frontier) {
            if (g.vertex_count() + 4 > max_n) continue;
            for (int e = 0; e < g.edge_count(); ++e) {
                Graph child = insert_diamond(g, e);
                if (admit(child)) next.push_back(child);
            }
        }
        frontier = std::move(next);
    }
    for (int k = 2; 4 * k <= max_n; ++k) admit(diamond_necklace(k));
    if (12 <= max_n) admit(inflate(complete_graph(4)).first);

    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
        return a.first.n != b.first.n ? a.first.n < b.first.n : a.first < b.first;
    });
    std::vector<Graph> out;
    out.reserve(found.size());
    for (auto& [f, g] : found) out.push_back(std::move(g));
    return out;
}

}  // namespace domgame
