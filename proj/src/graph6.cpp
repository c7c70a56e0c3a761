#include "domgame/graph6.hpp"

namespace domgame {

namespace {

constexpr int kBias = 63;

bool valid_char(char c) { return c >= 63 && c <= 126; }

}  // namespace

Graph parse_graph6(std::string_view line, int cap) {
    if (line.empty()) throw Graph6Error(Graph6Error::Kind::MalformedLength, "empty graph6 record");
    std::size_t pos = 0;
    long n;
    if (line[0] == 126) {  // '~' introduces the long form
        if (line.size() >= 2 && line[1] == 126)
            throw Graph6Error(Graph6Error::Kind::OverCap, "graph6 8-byte order form exceeds the cap");
        if (line.size() < 4) throw Graph6Error(Graph6Error::Kind::MalformedLength, "truncated graph6 length field");
        n = 0;
        for (int i = 1; i <= 3; ++i) {
            if (!valid_char(line[i]))
                throw Graph6Error(Graph6Error::Kind::MalformedLength, "invalid byte in graph6 length field");
            n = (n << 6) | (line[i] - kBias);
        }
        if (n < 63) throw Graph6Error(Graph6Error::Kind::MalformedLength, "non-canonical graph6 length field");
        pos = 4;
    } else {
        if (!valid_char(line[0]))
            throw Graph6Error(Graph6Error::Kind::MalformedLength, "invalid byte in graph6 length field");
        n = line[0] - kBias;
        pos = 1;
    }
    if (n > cap)
        throw Graph6Error(Graph6Error::Kind::OverCap,
                          "graph order " + std::to_string(n) + " exceeds cap " + std::to_string(cap));

    long nbits = n * (n - 1) / 2;
    std::size_t nbytes = static_cast<std::size_t>((nbits + 5) / 6);
    if (line.size() - pos != nbytes)
        throw Graph6Error(line.size() - pos < nbytes ? Graph6Error::Kind::Truncated
                                                     : Graph6Error::Kind::TrailingBits,
                          "graph6 record length does not match the order");

    std::vector<std::pair<int, int>> edges;
    long bit = 0;
    for (std::size_t i = 0; i < nbytes; ++i) {
        char c = line[pos + i];
        if (!valid_char(c)) throw Graph6Error(Graph6Error::Kind::BadCharacter, "invalid graph6 data byte");
        int group = c - kBias;
        for (int b = 5; b >= 0; --b, ++bit) {
            if (((group >> b) & 1) == 0) continue;
            if (bit >= nbits)
                throw Graph6Error(Graph6Error::Kind::TrailingBits, "nonzero padding bits in graph6 record");
            // Column-major upper triangle: bit index -> (u, v) with u < v.
            long v = 1, acc = 0;
            while (acc + v <= bit) acc += v, ++v;
            edges.emplace_back(static_cast<int>(bit - acc), static_cast<int>(v));
        }
    }
    return Graph(static_cast<int>(n), std::move(edges));
}

std::string encode_graph6(const Graph& g) {
    int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
        out.push_back(static_cast<char>((n & 63) + kBias));
    }
    int group = 0, nbits = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            group = (group << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(group + kBias));
                group = nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((group << (6 - nbits)) + kBias));
    return out;
}

std::vector<Graph> read_graph6_stream(std::istream& in, int cap) {
    std::vector<Graph> graphs;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::string_view sv = line;
        if (sv.rfind(">>graph6<<", 0) == 0) sv.remove_prefix(10);
        if (sv.empty()) continue;
        try {
            graphs.push_back(parse_graph6(sv, cap));
        } catch (const Graph6Error& e) {
            throw Graph6Error(e.kind, "line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return graphs;
}

}  // namespace domgame
