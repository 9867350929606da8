#pragma once

#include <cstdint>

#include "rrg/graph.hpp"
#include "rrg/rng.hpp"

namespace rrg {

inline bool is_switchable(const RegularGraph& g, const SwitchMove& m) {
    return g.switchable(m);
}

// Replaces edges ij, kl by ik, jl; degrees are preserved.
inline RegularGraph apply_switch(const RegularGraph& g, const SwitchMove& m) {
    RegularGraph out = g;
    out.switch_edges(m);
    return out;
}

// The switching is an involution: applying inverse_move(m) to the switched
// graph restores the original.
inline SwitchMove inverse_move(const SwitchMove& m) {
    return {m.i, m.k, m.j, m.l};
}

// Double-edge-swap chain: each proposal draws two uniformly random ordered
// edges and switches iff chi = 1. Reversible w.r.t. the uniform law on simple
// d-regular graphs; rejected proposals are no-ops.
inline RegularGraph mcmc_randomize(const RegularGraph& g, std::uint64_t steps,
                                   std::uint64_t seed) {
    RegularGraph out = g;
    Rng rng(seed);
    const std::uint64_t m = out.edges().size();
    if (m < 2) return out;
    for (std::uint64_t s = 0; s < steps; ++s) {
        const std::size_t e1 = rng.below(m);
        const bool f1 = rng.coin();
        const std::size_t e2 = rng.below(m);
        const bool f2 = rng.coin();
        out.try_switch_slots(e1, f1, e2, f2);
    }
#ifndef NDEBUG
    out.validate();
#endif
    return out;
}

}  // namespace rrg
