#pragma once

#include <cstdint>

namespace motivic {

/// xorshift64* generator (shifts 12/25/27, multiplier 0x2545F4914F6CDD1D).
/// A zero seed is replaced by a fixed nonzero constant since the all-zero
/// state is a fixed point of the xorshift step. Census sampling depends on
/// this exact sequence for byte-for-byte reproducible reports.
class Xorshift64Star {
public:
    explicit Xorshift64Star(std::uint64_t seed)
        : state_(seed != 0 ? seed : 0x9E3779B97F4A7C15ULL) {}

    std::uint64_t next() {
        state_ ^= state_ >> 12;
        state_ ^= state_ << 25;
        state_ ^= state_ >> 27;
        return state_ * 0x2545F4914F6CDD1DULL;
    }

    /// Uniform-ish value in [0, bound); bound must be positive.
    std::uint32_t below(std::uint32_t bound) {
        return static_cast<std::uint32_t>(next() % bound);
    }

private:
    std::uint64_t state_;
};

}  // namespace motivic
