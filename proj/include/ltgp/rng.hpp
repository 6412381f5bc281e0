// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>

namespace ltgp {

inline constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Sequential random stream. std::uniform_*_distribution results are
// implementation-defined, so the value mappings are done by hand here; every
// output is a pure function of the seed on any platform. draw_count() exposes
// the number of logical draws for the reproducibility audits.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

    // Uniform integer in [0, n), n >= 1. Debiased multiply-shift.
    std::uint64_t below(std::uint64_t n) {
        ++draws_;
        unsigned __int128 m = static_cast<unsigned __int128>(engine_()) * n;
        auto lo = static_cast<std::uint64_t>(m);
        if (lo < n) {
            const std::uint64_t threshold = (0 - n) % n;
            while (lo < threshold) {
                m = static_cast<unsigned __int128>(engine_()) * n;
                lo = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    // Uniform float in [-1, 1).
    float uniform_pm1() {
        ++draws_;
        const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
        return static_cast<float>(2.0 * u - 1.0);
    }

    std::uint64_t draw_count() const { return draws_; }

private:
    std::mt19937_64 engine_;
    std::uint64_t draws_ = 0;
};

} // namespace ltgp
