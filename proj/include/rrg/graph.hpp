#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rrg/errors.hpp"

namespace rrg {

struct SwitchMove {
    int i, j, k, l;
};

// Simple d-regular graph on n vertices. Sorted neighbor lists plus a flat
// bitset for O(1) edge membership. Immutable in normal use; the switching
// routines below are the only mutators.
class RegularGraph {
public:
    RegularGraph() = default;

    static RegularGraph from_edges(int n, int d,
                                   std::vector<std::pair<int, int>> edges) {
        RegularGraph g;
        g.n_ = n;
        g.d_ = d;
        if (n < 4 || d < 1 || d >= n || (static_cast<long long>(n) * d) % 2 != 0)
            throw InvalidParams("RegularGraph: need n >= 4, 1 <= d < n, n*d even");
        g.adj_.assign(n, {});
        g.bits_.assign((static_cast<std::size_t>(n) * n + 63) / 64, 0);
        g.edges_.reserve(edges.size());
        for (auto [u, v] : edges) g.add_edge(u, v);
        g.validate();
        return g;
    }

    int n() const { return n_; }
    int degree() const { return d_; }

    bool has_edge(int u, int v) const {
        const std::size_t idx = static_cast<std::size_t>(u) * n_ + v;
        return (bits_[idx >> 6] >> (idx & 63)) & 1ULL;
    }

    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw IndexOutOfRange("vertex index out of range");
    }

    // chi = A_ij * A_kl * (1 - A_ik) * (1 - A_jl), evaluated literally.
    bool switchable(const SwitchMove& m) const {
        check_vertex(m.i);
        check_vertex(m.j);
        check_vertex(m.k);
        check_vertex(m.l);
        if (m.i == m.j || m.i == m.k || m.i == m.l || m.j == m.k ||
            m.j == m.l || m.k == m.l)
            throw InvalidParams("SwitchMove indices must be pairwise distinct");
        return has_edge(m.i, m.j) && has_edge(m.k, m.l) &&
               !has_edge(m.i, m.k) && !has_edge(m.j, m.l);
    }

    // Removes edges ij, kl; inserts ik, jl. Throws if not switchable.
    void switch_edges(const SwitchMove& m) {
        if (!switchable(m)) throw NotSwitchable();
        const auto slot = [&](int u, int v) {
            if (u > v) std::swap(u, v);
            for (std::size_t e = 0; e < edges_.size(); ++e)
                if (edges_[e].first == u && edges_[e].second == v) return e;
            throw NotSwitchable("edge missing from edge list");
        };
        apply_switch_slots(m, slot(m.i, m.j), slot(m.k, m.l));
    }

    // Chain-internal variant: the caller picked the two edge slots itself.
    // (ij) = edges_[e1] oriented by flip1, (kl) = edges_[e2] oriented by flip2.
    // Returns false (no-op) when the four vertices are not distinct or chi = 0.
    bool try_switch_slots(std::size_t e1, bool flip1, std::size_t e2, bool flip2) {
        if (e1 == e2) return false;
        auto [i, j] = edges_[e1];
        auto [k, l] = edges_[e2];
        if (flip1) std::swap(i, j);
        if (flip2) std::swap(k, l);
        if (i == k || i == l || j == k || j == l) return false;
        if (has_edge(i, k) || has_edge(j, l)) return false;
        apply_switch_slots({i, j, k, l}, e1, e2);
        return true;
    }

    // Degree audit + symmetry/diagonal invariants; throws on violation.
    void validate() const {
        if (static_cast<std::size_t>(n_) * d_ != 2 * edges_.size())
            throw InvalidParams("edge count does not match n*d/2");
        for (int v = 0; v < n_; ++v) {
            if (static_cast<int>(adj_[v].size()) != d_)
                throw InvalidParams("vertex degree != d");
            if (!std::is_sorted(adj_[v].begin(), adj_[v].end()))
                throw InvalidParams("neighbor list not sorted");
            for (int u : adj_[v]) {
                if (u == v) throw InvalidParams("self loop");
                if (!has_edge(u, v) || !has_edge(v, u))
                    throw InvalidParams("adjacency not symmetric");
            }
        }
    }

    bool operator==(const RegularGraph& o) const {
        if (n_ != o.n_ || d_ != o.d_) return false;
        auto a = edges_, b = o.edges_;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        return a == b;
    }

private:
    void set_bit(int u, int v, bool on) {
        const std::size_t idx = static_cast<std::size_t>(u) * n_ + v;
        if (on)
            bits_[idx >> 6] |= 1ULL << (idx & 63);
        else
            bits_[idx >> 6] &= ~(1ULL << (idx & 63));
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw InvalidParams("self loop");
        if (has_edge(u, v)) throw InvalidParams("duplicate edge");
        set_bit(u, v, true);
        set_bit(v, u, true);
        adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
        adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
        edges_.emplace_back(std::min(u, v), std::max(u, v));
    }

    void adj_remove(int u, int v) {
        auto& a = adj_[u];
        a.erase(std::lower_bound(a.begin(), a.end(), v));
    }
    void adj_insert(int u, int v) {
        auto& a = adj_[u];
        a.insert(std::lower_bound(a.begin(), a.end(), v), v);
    }

    void apply_switch_slots(const SwitchMove& m, std::size_t e1, std::size_t e2) {
        const auto [i, j, k, l] = m;
        set_bit(i, j, false);
        set_bit(j, i, false);
        set_bit(k, l, false);
        set_bit(l, k, false);
        set_bit(i, k, true);
        set_bit(k, i, true);
        set_bit(j, l, true);
        set_bit(l, j, true);
        adj_remove(i, j);
        adj_remove(j, i);
        adj_remove(k, l);
        adj_remove(l, k);
        adj_insert(i, k);
        adj_insert(k, i);
        adj_insert(j, l);
        adj_insert(l, j);
        edges_[e1] = {std::min(i, k), std::max(i, k)};
        edges_[e2] = {std::min(j, l), std::max(j, l)};
    }

    int n_ = 0, d_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::uint64_t> bits_;
};

// Deterministic circulant d-regular graph; chain warm start.
inline RegularGraph circulant_graph(int n, int d) {
    if (n < 4 || d < 1 || d >= n || (static_cast<long long>(n) * d) % 2 != 0)
        throw InvalidParams("circulant_graph: need n >= 4, 1 <= d < n, n*d even");
    if (d % 2 == 1 && n % 2 != 0)
        throw InvalidParams("circulant_graph: odd d needs even n");
    std::vector<std::pair<int, int>> edges;
    const int half = d / 2;
    if (2 * half >= n)
        throw InvalidParams("circulant_graph: d too close to n");
    for (int v = 0; v < n; ++v)
        for (int o = 1; o <= half; ++o) {
            const int u = (v + o) % n;
            edges.emplace_back(std::min(v, u), std::max(v, u));
        }
    if (d % 2 == 1)
        for (int v = 0; v < n / 2; ++v) edges.emplace_back(v, v + n / 2);
    return RegularGraph::from_edges(n, d, std::move(edges));
}

// Plain-text edge list: first line "n d", then one "u v" per line,
// 0-indexed, u < v, sorted lexicographically.
inline void write_edge_list(const RegularGraph& g, std::ostream& os) {
    os << g.n() << ' ' << g.degree() << '\n';
    auto edges = g.edges();
    std::sort(edges.begin(), edges.end());
    for (auto [u, v] : edges) os << u << ' ' << v << '\n';
}

inline RegularGraph read_edge_list(std::istream& is) {
    int n = 0, d = 0;
    if (!(is >> n >> d)) throw InvalidParams("edge list: bad header");
    std::vector<std::pair<int, int>> edges;
    int u, v;
    while (is >> u >> v) {
        if (u >= v) throw InvalidParams("edge list: expected u < v");
        edges.emplace_back(u, v);
    }
    return RegularGraph::from_edges(n, d, std::move(edges));
}

}  // namespace rrg
