#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "rrg/graph.hpp"
#include "rrg/rng.hpp"
#include "rrg/switching.hpp"

namespace rrg {

// Probability that a random pairing-model configuration is simple is
// asymptotically exp(-lambda - lambda^2), lambda = (d-1)/2; whole-configuration
// rejection is only viable while that stays above ~1e-4.
inline double pairing_expected_retries(int d) {
    const double lam = (d - 1) / 2.0;
    return std::exp(lam + lam * lam);
}

// Configuration-model sampling with rejection of loops and multi-edges;
// conditioned on acceptance the law is exactly uniform on simple d-regular
// graphs.
inline RegularGraph sample_pairing(int n, int d, std::uint64_t seed,
                                   std::uint64_t max_retries = 200000) {
    if (n < 4 || d < 1 || d >= n || (static_cast<long long>(n) * d) % 2 != 0)
        throw InvalidParams("sample_pairing: need n >= 4, 1 <= d < n, n*d even");
    Rng rng(seed);
    const int stubs = n * d;
    std::vector<int> perm(stubs);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(stubs / 2);
    for (std::uint64_t attempt = 0; attempt <= max_retries; ++attempt) {
        std::iota(perm.begin(), perm.end(), 0);
        for (int i = stubs - 1; i > 0; --i)
            std::swap(perm[i], perm[rng.below(static_cast<std::uint64_t>(i) + 1)]);
        edges.clear();
        bool simple = true;
        for (int e = 0; e < stubs / 2 && simple; ++e) {
            int u = perm[2 * e] / d;
            int v = perm[2 * e + 1] / d;
            if (u == v) {
                simple = false;
                break;
            }
            if (u > v) std::swap(u, v);
            edges.emplace_back(u, v);
        }
        if (!simple) continue;
        std::sort(edges.begin(), edges.end());
        for (std::size_t e = 1; e < edges.size(); ++e)
            if (edges[e] == edges[e - 1]) {
                simple = false;
                break;
            }
        if (simple) return RegularGraph::from_edges(n, d, std::move(edges));
    }
    throw RetriesExceeded("sample_pairing: max_retries rejections");
}

struct SamplerOptions {
    // 0 means the default 100 * n * d proposals.
    std::uint64_t burnin_proposals = 0;
    // Pairing rejection is used up to this degree; beyond it the expected
    // retry count exp((d-1)/2 + (d-1)^2/4) is impractical.
    int pairing_max_degree = 6;
    std::uint64_t pairing_max_retries = 200000;
};

// Uniform(-approximating) sampler facade: exact pairing rejection for small d,
// switching chain from a circulant start beyond.
inline RegularGraph sample_regular(int n, int d, std::uint64_t seed,
                                   const SamplerOptions& opts = {}) {
    if (d <= opts.pairing_max_degree)
        return sample_pairing(n, d, seed, opts.pairing_max_retries);
    const std::uint64_t burnin =
        opts.burnin_proposals ? opts.burnin_proposals
                              : 100ULL * static_cast<std::uint64_t>(n) * d;
    return mcmc_randomize(circulant_graph(n, d), burnin, seed);
}

}  // namespace rrg
