#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <span>
#include <string_view>

#include "tds/errors.hpp"
#include "tds/hash.hpp"

namespace tds {

/// Deterministic random stream (SplitMix64).
///
/// All sampling is built on this generator by inversion or Box-Muller, so a
/// given stream key produces the same draw sequence on every platform.
/// Standard-library distributions are deliberately not used: their output is
/// implementation-defined.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1).
    double next_unit() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Normal via Box-Muller; consumes two uniforms per draw. sd = 0 returns
    /// the mean exactly.
    double next_normal(double mean, double sd) {
        double u1 = 1.0 - next_unit(); // (0, 1]
        double u2 = next_unit();
        double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
        return mean + sd * z;
    }

    /// Exponential with the given mean, by inversion.
    double next_exponential(double mean) {
        if (!(mean > 0.0)) {
            throw DomainError("exponential mean must be > 0");
        }
        return -mean * std::log(1.0 - next_unit());
    }

    /// Index drawn proportionally to non-negative weights (CDF inversion).
    std::size_t next_category(std::span<const double> weights) {
        double total = 0.0;
        for (double w : weights) {
            if (w < 0.0 || !std::isfinite(w)) {
                throw DomainError("category weights must be finite and non-negative");
            }
            total += w;
        }
        if (!(total > 0.0)) {
            throw DomainError("category weights must not be all zero");
        }
        double r = next_unit() * total;
        double acc = 0.0;
        std::size_t last_positive = 0;
        for (std::size_t i = 0; i < weights.size(); ++i) {
            if (weights[i] > 0.0) {
                acc += weights[i];
                last_positive = i;
                if (r < acc) {
                    return i;
                }
            }
        }
        return last_positive; // rounding residue at the top of the CDF
    }

private:
    std::uint64_t state_;
};

/// Stable substream key: FNV-1a over the little-endian seed bytes followed by
/// the role, panelist, repetition and sample fields, each terminated by 0x1f.
/// Distinct field values give independent streams; the role ("panel",
/// "oracle", ...) keeps simulator and oracle draws disjoint.
inline SplitMix64 substream(std::uint64_t seed, std::string_view role,
                            std::string_view panelist_id, std::uint64_t repetition,
                            std::string_view sample_id) {
    std::uint64_t h = fnv1a64_u64(seed);
    auto field = [&h](std::string_view s) {
        h = fnv1a64(s, h);
        h = fnv1a64(std::string_view("\x1f", 1), h);
    };
    field(role);
    field(panelist_id);
    h = fnv1a64_u64(repetition, h);
    h = fnv1a64(std::string_view("\x1f", 1), h);
    field(sample_id);
    return SplitMix64(h);
}

} // namespace tds
