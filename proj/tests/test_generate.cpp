#include "doctest.h"

#include <map>
#include <set>

#include "domgame/builders.hpp"
#include "domgame/canonical.hpp"
#include "domgame/generate.hpp"
#include "domgame/graph6.hpp"
#include "domgame/recognizers.hpp"

using namespace domgame;

TEST_SUITE_BEGIN("generate");

namespace {

// Reference: dedupe all adjacency masks by min-over-permutations image.
int count_classes_by_dedup(int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    std::vector<std::vector<int>> perms;
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    auto bit_of = [](int u, int v) {
        if (u > v) std::swap(u, v);
        return v * (v - 1) / 2 + u;
    };
    int m = n * (n - 1) / 2;
    std::set<std::uint32_t> classes;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
        std::uint32_t least = mask;
        for (const auto& perm : perms) {
            std::uint32_t img = 0;
            for (int v = 1; v < n; ++v)
                for (int u = 0; u < v; ++u)
                    if ((mask >> bit_of(u, v)) & 1) img |= std::uint32_t{1} << bit_of(perm[u], perm[v]);
            least = std::min(least, img);
        }
        classes.insert(least);
    }
    return static_cast<int>(classes.size());
}

}  // namespace

TEST_CASE("small-order counts against the permutation-dedup reference") {
    CHECK(generate_all_graphs(1).size() == 1);
    CHECK(generate_all_graphs(2).size() == 2);
    CHECK(generate_all_graphs(3).size() == 4);
    CHECK(generate_all_graphs(4).size() == 11);
    CHECK(count_classes_by_dedup(4) == 11);
    CHECK(generate_all_graphs(5).size() == 34);
    CHECK(count_classes_by_dedup(5) == 34);
    CHECK(generate_all_graphs(6).size() == 156);
    CHECK_THROWS_AS(generate_all_graphs(8), std::invalid_argument);
}

TEST_CASE("codec round-trips across a generated sweep") {
    for (int n : {1, 4, 6}) {
        for (const Graph& g : generate_all_graphs(n)) CHECK(parse_graph6(encode_graph6(g)) == g);
    }
}

TEST_CASE("generated lists are isomorph-free and self-canonical") {
    for (int n : {4, 5, 6}) {
        auto graphs = generate_all_graphs(n);
        std::set<std::pair<std::uint64_t, std::uint64_t>> forms;
        for (const Graph& g : graphs) {
            auto f = canonical_form(g);
            CHECK(forms.insert({f.bits[0], f.bits[1]}).second);
            CHECK(is_isomorphic(graph_from_form(f), g));
        }
    }
}

TEST_CASE("extended generation at n = 8 matches the known class count") {
    auto graphs = generate_all_graphs_extended(8);
    CHECK(graphs.size() == 12346);
    // spot invariants: unique canonical forms, correct order
    std::set<std::pair<std::uint64_t, std::uint64_t>> forms;
    for (const Graph& g : graphs) {
        CHECK(g.vertex_count() == 8);
        auto f = canonical_form(g);
        forms.insert({f.bits[0], f.bits[1]});
    }
    CHECK(forms.size() == graphs.size());
}

TEST_CASE("diamond insertion and necklaces") {
    Graph k4d = insert_diamond(complete_graph(4), 0);
    CHECK(k4d.vertex_count() == 8);
    CHECK(is_cubic(k4d));
    CHECK(is_claw_free(k4d));
    CHECK(is_connected(k4d));

    Graph n2 = diamond_necklace(2);
    CHECK(n2.vertex_count() == 8);
    CHECK(is_cubic(n2));
    CHECK(is_claw_free(n2));
    CHECK(is_connected(n2));
    // K_4 minus an edge is itself a diamond, so the insertion closes a ring
    CHECK(is_isomorphic(k4d, n2));
}

TEST_CASE("claw-free cubic corpus") {
    auto corpus = claw_free_cubic_corpus(14);
    std::map<int, int> by_order;
    for (const Graph& g : corpus) {
        CHECK(is_cubic(g));
        CHECK(is_claw_free(g));
        CHECK(is_connected(g));
        by_order[g.vertex_count()]++;
    }
    CHECK(by_order[4] == 1);   // K_4
    CHECK(by_order[6] == 1);   // the prism
    CHECK(by_order[10] >= 1);
    CHECK(by_order[12] >= 2);
    CHECK(by_order[14] >= 1);
    // exhaustive at n = 8: every connected claw-free cubic graph appears
    int count8 = 0;
    for (const Graph& g : generate_all_graphs_extended(8))
        if (is_cubic(g) && is_claw_free(g) && is_connected(g)) ++count8;
    CHECK(by_order[8] == count8);
    CHECK(count8 == 1);  // the double-diamond necklace is the only one
}

TEST_SUITE_END();
