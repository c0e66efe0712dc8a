#pragma once

#include <cmath>
#include <cstdint>

namespace dblasso {

/// Stream tags keep the design matrix, support selection, and per-replicate
/// noise on independent substreams of one seed.
enum class Stream : std::uint64_t {
    design = 1,
    support = 2,
    noise = 3,
};

/// Counter-based splittable generator: a SplitMix64 stream whose starting
/// state is a mix of (seed, rep_index, tag). Deterministic for a given key
/// regardless of what other streams were drawn, which keeps simulation
/// replicates schedule-independent.
class SplitRng {
public:
    SplitRng(std::uint64_t seed, std::uint64_t rep_index, Stream tag)
        : state_(derive(seed, rep_index, static_cast<std::uint64_t>(tag))) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform on [0,1) with 53 random bits.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, bound).
    std::uint64_t uniform_below(std::uint64_t bound) {
        return static_cast<std::uint64_t>(uniform() * static_cast<double>(bound)) % bound;
    }

    /// Standard normal via Box-Muller (pairs cached).
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = 1.0 - uniform();  // (0,1], keeps log finite
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 33)) * 0xFF51AFD7ED558CCDULL;
        z = (z ^ (z >> 33)) * 0xC4CEB9FE1A85EC53ULL;
        return z ^ (z >> 33);
    }

    static std::uint64_t derive(std::uint64_t seed, std::uint64_t rep, std::uint64_t tag) {
        std::uint64_t h = mix(seed + 0x9E3779B97F4A7C15ULL);
        h = mix(h ^ (rep + 0xD1B54A32D192ED03ULL));
        h = mix(h ^ (tag + 0x8CB92BA72F3D8DD7ULL));
        return h;
    }

    std::uint64_t state_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace dblasso
