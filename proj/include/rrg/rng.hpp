#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <random>

namespace rrg {

// SplitMix64 finalizer; used to decorrelate seeds derived from a master seed.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Counter-based split: record `index` of a campaign seeded with `master` gets
// its own stream, independent of scheduling order.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    return splitmix64(master ^ splitmix64(index + 1));
}

// Seedable generator with platform-stable sampling routines. mt19937_64 output
// is pinned by the standard; the distributions below avoid the
// implementation-defined std:: distribution adapters so that identical seeds
// give identical streams everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t u64() { return engine_(); }

    // Uniform in {0, 1, ..., n-1} by masked rejection.
    std::uint64_t below(std::uint64_t n) {
        if (n <= 1) return 0;
        const int bits = 64 - std::countl_zero(n - 1);
        const std::uint64_t mask = (bits >= 64) ? ~0ULL : ((1ULL << bits) - 1);
        for (;;) {
            const std::uint64_t v = engine_() & mask;
            if (v < n) return v;
        }
    }

    // Uniform in (0, 1].
    double real01() { return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53; }

    bool coin() { return (engine_() & 1ULL) != 0; }

    // Standard normal via Box-Muller; second deviate cached.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = real01();
        const double u2 = real01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * M_PI * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace rrg
