#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "rrg/graph.hpp"

namespace rrg {

// Finite simple forest on abstract labels 0..num_vertices-1; may contain
// singletons. theta = #connected components = V - E for acyclic graphs.
struct Forest {
    int num_vertices = 0;
    std::vector<std::pair<int, int>> edges;

    int theta() const { return num_vertices - static_cast<int>(edges.size()); }

    void validate() const {
        std::vector<int> parent(num_vertices);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (auto [a, b] : edges) {
            if (a < 0 || b < 0 || a >= num_vertices || b >= num_vertices || a == b)
                throw InvalidParams("Forest: bad edge");
            const int ra = find(a), rb = find(b);
            if (ra == rb) throw InvalidParams("Forest: cycle");
            parent[ra] = rb;
        }
    }
};

// Sum over vertex-tuple embeddings of prod_{e in E} A_{i_e i'_e}, by direct
// enumeration of all N^V tuples (restricted to pairwise-distinct tuples when
// `distinct` is set). The closed form N^theta d^|E| is what tests compare this
// against; the enumeration itself never uses it. Desk-scale only: O(N^V).
inline long long forest_sum(const RegularGraph& g, const Forest& f,
                            bool distinct) {
    f.validate();
    const int V = f.num_vertices;
    if (V > 5) throw ForestTooLarge("forest_sum: more than 5 vertices");
    const int N = g.n();
    double space = 1.0;
    for (int v = 0; v < V; ++v) space *= N;
    if (space > 4.5e9) throw ForestTooLarge("forest_sum: tuple space too large");

    // Edges checkable once their later endpoint is assigned.
    std::vector<std::vector<std::pair<int, int>>> at_depth(V);
    for (auto [a, b] : f.edges) {
        const int hi = std::max(a, b);
        at_depth[hi].emplace_back(std::min(a, b), hi);
    }

    std::vector<int> tup(V, 0);
    long long count = 0;
    // Odometer over tuples with early skip once the partial product is zero.
    int depth = 0;
    while (depth >= 0) {
        if (depth == V) {
            ++count;
            --depth;
            ++tup[depth];
            continue;
        }
        if (tup[depth] >= N) {
            tup[depth] = 0;
            --depth;
            if (depth >= 0) ++tup[depth];
            continue;
        }
        bool ok = true;
        if (distinct)
            for (int p = 0; p < depth && ok; ++p)
                if (tup[p] == tup[depth]) ok = false;
        for (auto [a, b] : at_depth[depth])
            if (ok && !g.has_edge(tup[a], tup[b])) ok = false;
        if (ok)
            ++depth;
        else
            ++tup[depth];
    }
    return count;
}

}  // namespace rrg
