#pragma once

#include <cmath>
#include <cstdint>

namespace aggsim {

/// Counter-derived random substream. Each (seed, stream) pair yields an
/// independent deterministic sequence, so parallel realizations can each own
/// a stream and results do not depend on scheduling or evaluation order.
/// The generator is splitmix64 over a per-stream starting state.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream) {
        state_ = mix(seed ^ (0xD1B54A32D192ED03ULL * (stream + 1)));
    }

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix(state_);
    }

    /// Uniform in [0, 1), 53-bit resolution.
    double next_double() { return (next_u64() >> 11) * 0x1.0p-53; }

    /// Exponential with unit rate.
    double next_exp() { return -std::log1p(-next_double()); }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

}  // namespace aggsim
