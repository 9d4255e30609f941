#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

namespace zipsim {

/// SplitMix64 step; used to mix seeds when deriving child streams.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

/// Deterministic random generator. Wraps mt19937_64 but implements its own
/// value mapping so that identical seeds give bit-identical sequences on any
/// platform (std::uniform_real_distribution et al. are implementation-defined).
///
/// Child streams are derived from the *base* seed, not engine state, so adding
/// a consumer never perturbs the draws of another stream.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : base_(seed), eng_(mix(seed)) {}

    std::uint64_t base_seed() const { return base_; }

    /// Derive an independent child stream from a numeric stream id.
    Rng child(std::uint64_t stream) const {
        std::uint64_t s = base_ ^ (0x9e3779b97f4a7c15ULL * (stream + 1));
        return Rng(splitmix64(s));
    }
    /// Derive a child stream from a string tag (e.g. "actuator/2").
    Rng child(std::string_view tag) const { return child(fnv1a64(tag)); }
    Rng child(std::string_view tag, std::uint64_t index) const {
        return child(fnv1a64(tag) ^ (0xd1342543de82ef95ULL * (index + 1)));
    }

    std::uint64_t next_u64() { return eng_(); }

    /// Uniform double in [0, 1).
    double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    /// Uniform double in [lo, hi] (hi attainable only up to rounding).
    double uniform(double lo, double hi) { return lo + uniform01() * (hi - lo); }

    /// Uniform integer in [lo, hi] inclusive.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        const auto wide = static_cast<unsigned __int128>(eng_()) * span;
        return lo + static_cast<std::int64_t>(wide >> 64);
    }

    bool bernoulli(double p) { return uniform01() < p; }

    /// Standard normal via Box-Muller (explicit formula keeps it portable).
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = 0.0;
        do {
            u1 = uniform01();
        } while (u1 <= 0.0);
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double two_pi = 6.283185307179586476925286766559;
        spare_ = r * std::sin(two_pi * u2);
        have_spare_ = true;
        return r * std::cos(two_pi * u2);
    }

    double normal(double mean, double sd) { return mean + sd * normal(); }

private:
    static std::uint64_t mix(std::uint64_t seed) {
        std::uint64_t s = seed;
        return splitmix64(s);
    }

    std::uint64_t base_;
    std::mt19937_64 eng_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

} // namespace zipsim
