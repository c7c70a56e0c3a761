#include "domgame/canonical.hpp"

#include <algorithm>
#include <numeric>

namespace domgame {

namespace {

// Branch-and-bound search for the minimum adjacency string. Positions are
// filled one vertex at a time; a position contributes the column of
// adjacency bits against the already-placed vertices. Candidates are tried
// in ascending column order, so anything above the incumbent's column
// prunes the rest of the level, and a strictly smaller column immediately
// rebuilds the incumbent by greedy completion before the walk continues.
class Canonicalizer {
public:
    explicit Canonicalizer(const Graph& g) : g_(g), n_(g.vertex_count()) {
        if (n_ > 16) throw std::invalid_argument("canonical form supports n <= 16");
        perm_.assign(n_, -1);
    }

    CanonicalForm run() {
        if (n_ == 0) return {0, {0, 0}};
        best_ = {~std::uint64_t{0}, ~std::uint64_t{0}};
        greedy_complete(0, {0, 0}, 0);
        dfs(0, {0, 0}, 0);
        return {n_, best_};
    }

private:
    struct Candidate {
        std::uint32_t col;
        int v;
        bool operator<(const Candidate& o) const { return col != o.col ? col < o.col : v < o.v; }
    };

    static void set_bit(std::array<std::uint64_t, 2>& a, int i) {
        a[i / 64] |= std::uint64_t{1} << (63 - i % 64);
    }

    std::uint32_t column_of(int v, int pos) const {
        std::uint32_t col = 0;
        for (int u = 0; u < pos; ++u)
            col = (col << 1) | static_cast<std::uint32_t>(g_.adjacent(perm_[u], v));
        return col;
    }

    std::uint32_t best_column(int nbits, int pos) const {
        std::uint32_t col = 0;
        for (int i = 0; i < pos; ++i) {
            int b = nbits + i;
            col = (col << 1) | static_cast<std::uint32_t>((best_[b / 64] >> (63 - b % 64)) & 1);
        }
        return col;
    }

    void append_column(std::array<std::uint64_t, 2>& bits, int nbits, std::uint32_t col, int pos) const {
        for (int i = 0; i < pos; ++i)
            if ((col >> (pos - 1 - i)) & 1) set_bit(bits, nbits + i);
    }

    void collect(int pos, std::vector<Candidate>& out) const {
        out.clear();
        for (int v = 0; v < n_; ++v)
            if (!((used_ >> v) & 1)) out.push_back({column_of(v, pos), v});
        std::sort(out.begin(), out.end());
    }

    void greedy_complete(int pos, std::array<std::uint64_t, 2> partial, int nbits) {
        std::uint64_t saved_used = used_;
        std::vector<int> placed;
        for (int p = pos; p < n_; ++p) {
            Candidate best_cand{~std::uint32_t{0}, -1};
            for (int v = 0; v < n_; ++v)
                if (!((used_ >> v) & 1)) best_cand = std::min(best_cand, Candidate{column_of(v, p), v});
            append_column(partial, nbits, best_cand.col, p);
            nbits += p;
            perm_[p] = best_cand.v;
            used_ |= std::uint64_t{1} << best_cand.v;
            placed.push_back(p);
        }
        if (partial < best_) best_ = partial;
        used_ = saved_used;
        for (int p : placed) perm_[p] = -1;
    }

    void dfs(int pos, std::array<std::uint64_t, 2> partial, int nbits) {
        if (pos == n_) {
            if (partial < best_) best_ = partial;
            return;
        }
        std::vector<Candidate> cands;
        collect(pos, cands);
        for (const Candidate& c : cands) {
            std::uint32_t incumbent = best_column(nbits, pos);
            if (c.col > incumbent) break;  // sorted: the rest only grows
            auto np = partial;
            append_column(np, nbits, c.col, pos);
            perm_[pos] = c.v;
            used_ |= std::uint64_t{1} << c.v;
            if (c.col < incumbent) greedy_complete(pos + 1, np, nbits + pos);
            dfs(pos + 1, np, nbits + pos);
            used_ &= ~(std::uint64_t{1} << c.v);
            perm_[pos] = -1;
        }
    }

    const Graph& g_;
    int n_;
    std::vector<int> perm_;
    std::uint64_t used_ = 0;
    std::array<std::uint64_t, 2> best_{};
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) { return Canonicalizer(g).run(); }

Graph graph_from_form(const CanonicalForm& f) {
    std::vector<std::pair<int, int>> edges;
    int nbits = f.n * (f.n - 1) / 2;
    for (int b = 0; b < nbits; ++b) {
        if (((f.bits[b / 64] >> (63 - b % 64)) & 1) == 0) continue;
        int v = 1, acc = 0;
        while (acc + v <= b) acc += v, ++v;
        edges.emplace_back(b - acc, v);
    }
    return Graph(f.n, std::move(edges));
}

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> da, db;
    for (int v = 0; v < a.vertex_count(); ++v) da.push_back(a.degree(v));
    for (int v = 0; v < b.vertex_count(); ++v) db.push_back(b.degree(v));
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    return canonical_form(a) == canonical_form(b);
}

}  // namespace domgame
