#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace sstdp {

// One quantized uniform draw with value numer / 2^bits in [0, 1).
struct Draw {
    uint32_t numer = 0;
    uint32_t bits = 0;

    double value() const { return static_cast<double>(numer) / static_cast<double>(1u << bits); }
};

// Fibonacci LFSR in left-shift form: the new low bit is the XOR of the tapped
// stages and the top stage shifts out. Tap positions are 1-based and must
// include the register width, so the outgoing bit participates in the feedback
// and the update is a bijection on the 2^width - 1 nonzero states.
struct LfsrState {
    uint32_t width = 5;
    std::vector<uint32_t> taps;
    uint32_t reg = 1;

    LfsrState(uint32_t width, std::vector<uint32_t> taps, uint32_t seed);
    LfsrState(uint32_t width, uint32_t seed);  // default taps for this width

    uint32_t state_mask() const { return (1u << width) - 1u; }

    // Advance one step and return the new register value.
    uint32_t next();

private:
    uint32_t tap_mask_ = 0;  // precomputed OR of 1 << (tap - 1)
};

// Successor state under the same update, value-in value-out.
LfsrState lfsr_next(LfsrState state);

// Maximal-length tap sets used when none are given (widths 2..16).
const std::vector<uint32_t>& default_taps(uint32_t width);

// True iff the tap set walks through every nonzero state before repeating.
bool is_maximal_length(uint32_t width, const std::vector<uint32_t>& taps);

enum class RngBackend { Lfsr, StatisticalUniform };

// Uniform source on the grid k / 2^mask_bits, one draw per decay time step.
//
// The Lfsr backend is the hardware path: it advances the register once per
// draw and keeps the mask_bits low bits. With mask_bits == width the draw can
// never be zero; with mask_bits < width (the 7-bit register masked to 5 bits)
// a zero draw is possible. The StatisticalUniform backend is a seeded
// mt19937_64 quantized to the same grid, for distribution-level tests.
class RandomSource {
public:
    static RandomSource lfsr(uint32_t width, uint32_t mask_bits, uint32_t seed);
    static RandomSource lfsr(uint32_t width, uint32_t mask_bits, uint32_t seed,
                             std::vector<uint32_t> taps);
    static RandomSource statistical(uint32_t mask_bits, uint64_t seed);

    Draw draw();

    RngBackend backend() const { return backend_; }
    uint32_t mask_bits() const { return mask_bits_; }

private:
    RandomSource() = default;

    RngBackend backend_ = RngBackend::StatisticalUniform;
    uint32_t mask_bits_ = 5;
    std::optional<LfsrState> lfsr_;
    std::mt19937_64 urng_;
};

}  // namespace sstdp
