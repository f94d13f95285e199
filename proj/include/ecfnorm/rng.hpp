#pragma once

#include <cstdint>

namespace ecfnorm {

/// Deterministic counter-based random stream.
///
/// A stream is identified by a 64-bit key derived from a master seed and a
/// path of child indices; drawing never mutates the key, only a counter.
/// Child streams obtained through different paths are statistically
/// independent, and the same (seed, path) reproduces the identical sequence
/// bit-for-bit regardless of scheduling or worker count.
///
/// Output words are produced SplitMix64-style: out = mix(key + counter*gamma)
/// with a key-dependent odd gamma, where mix is the Stafford "Mix13"
/// finalizer.
class RngStream {
public:
    explicit RngStream(std::uint64_t master_seed)
        : key_(mix(master_seed + kGolden)), gamma_(derive_gamma(key_)), counter_(0) {}

    /// Independent substream; index identifies the child.
    [[nodiscard]] RngStream child(std::uint64_t index) const {
        return RngStream(mix(key_ ^ mix(index + kChildSalt)), 0);
    }

    std::uint64_t next_u64() {
        ++counter_;
        return mix(key_ + counter_ * gamma_);
    }

    /// Uniform deviate in the open interval (0, 1).
    double next_double() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

private:
    RngStream(std::uint64_t key, int) : key_(key), gamma_(derive_gamma(key)), counter_(0) {}

    static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
    static constexpr std::uint64_t kChildSalt = 0xD1B54A32D192ED03ULL;

    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    static std::uint64_t derive_gamma(std::uint64_t key) {
        return mix(key ^ 0xBB67AE8584CAA73BULL) | 1ULL;
    }

    std::uint64_t key_;
    std::uint64_t gamma_;
    std::uint64_t counter_;
};

}  // namespace ecfnorm
