#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string_view>

namespace rppg {

// xoshiro256++ with splitmix64 seeding. Distributions are implemented by
// hand so that streams are reproducible across compilers and standard
// libraries, which std::<distribution> types do not guarantee.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t x = seed;
        for (auto& word : state_) word = splitmix64(x);
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // [0, 1)
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // [0, n)
    std::uint64_t below(std::uint64_t n) {
        // rejection sampling keeps the draw unbiased
        const std::uint64_t threshold = (0 - n) % n;
        for (;;) {
            const std::uint64_t r = next_u64();
            if (r >= threshold) return r % n;
        }
    }

    bool bernoulli(double p) { return uniform01() < p; }

    double normal(double mean, double stddev) {
        if (have_cached_) {
            have_cached_ = false;
            return mean + stddev * cached_;
        }
        // Box-Muller
        double u1 = uniform01();
        while (u1 <= 0.0) u1 = uniform01();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * std::numbers::pi * u2;
        cached_ = r * std::sin(a);
        have_cached_ = true;
        return mean + stddev * r * std::cos(a);
    }

    // Independent deterministic substream; used to give each record, fold
    // or layer its own stream derived from one master seed.
    Rng derive(std::uint64_t stream) const {
        std::uint64_t x = state_[0] ^ rotl(stream, 31);
        x = splitmix64(x) ^ state_[2];
        return Rng(x);
    }

    static std::uint64_t hash_string(std::string_view s) {
        // FNV-1a
        std::uint64_t h = 1469598103934665603ull;
        for (const char c : s) {
            h ^= static_cast<std::uint8_t>(c);
            h *= 1099511628211ull;
        }
        return h;
    }

private:
    static std::uint64_t rotl(std::uint64_t v, int k) { return (v << k) | (v >> (64 - k)); }

    static std::uint64_t splitmix64(std::uint64_t& x) {
        x += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = x;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::uint64_t state_[4] = {};
    double cached_ = 0.0;
    bool have_cached_ = false;
};

}  // namespace rppg
