#pragma once

#include <cstdint>

#include "permlat/numeric.hpp"

namespace permlat {

// splitmix64: Steele, Lea, Flood (2014). Small, fast, and fully specified,
// so census output is reproducible across platforms.
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Sub-stream derivation for per-sample seeds: advance the splitmix counter
// to position index+1 and finalize. sub_seed(s, i) = splitmix64(s + (i+1)*GAMMA).
inline std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t state = seed + index * 0x9E3779B97F4A7C15ULL;
    return splitmix64_next(state);
}

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() { return splitmix64_next(state_); }

    // uniform in [0, bound) via 128-bit multiply-shift; bound >= 1
    std::uint64_t bounded(std::uint64_t bound) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * bound) >> 64);
    }

    // uniform integer in [lo, hi], inclusive
    long uniform(long lo, long hi) {
        return lo + static_cast<long>(bounded(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    // uniform vector in [-box, box]^n
    std::vector<Int> uniform_vector(int n, long box) {
        std::vector<Int> v(static_cast<std::size_t>(n));
        for (auto& x : v) x = Int(uniform(-box, box));
        return v;
    }

    // uniform nonzero vector in [-box, box]^n
    std::vector<Int> uniform_nonzero_vector(int n, long box) {
        for (;;) {
            std::vector<Int> v = uniform_vector(n, box);
            if (!is_zero_vector(v)) return v;
        }
    }

private:
    std::uint64_t state_;
};

}  // namespace permlat
