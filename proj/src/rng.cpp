#include "sstdp/rng.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace sstdp {

namespace {

constexpr uint32_t kMinWidth = 2;
constexpr uint32_t kMaxWidth = 16;

uint32_t build_tap_mask(uint32_t width, const std::vector<uint32_t>& taps) {
    if (width < kMinWidth || width > kMaxWidth) {
        throw std::invalid_argument("lfsr width must be in [2, 16], got " + std::to_string(width));
    }
    if (taps.empty()) {
        throw std::invalid_argument("lfsr tap set must not be empty");
    }
    uint32_t mask = 0;
    bool has_top = false;
    for (uint32_t t : taps) {
        if (t < 1 || t > width) {
            throw std::invalid_argument("lfsr tap " + std::to_string(t) +
                                        " out of range for width " + std::to_string(width));
        }
        uint32_t bit = 1u << (t - 1);
        if (mask & bit) {
            throw std::invalid_argument("duplicate lfsr tap " + std::to_string(t));
        }
        mask |= bit;
        has_top |= (t == width);
    }
    if (!has_top) {
        throw std::invalid_argument("lfsr tap set must include the register width " +
                                    std::to_string(width));
    }
    return mask;
}

}  // namespace

LfsrState::LfsrState(uint32_t width, std::vector<uint32_t> taps, uint32_t seed)
    : width(width), taps(std::move(taps)), reg(seed) {
    tap_mask_ = build_tap_mask(width, this->taps);
    if (seed == 0 || seed > state_mask()) {
        throw std::invalid_argument("lfsr seed must be in [1, 2^width - 1], got " +
                                    std::to_string(seed));
    }
}

LfsrState::LfsrState(uint32_t width, uint32_t seed)
    : LfsrState(width, default_taps(width), seed) {}

uint32_t LfsrState::next() {
    uint32_t fb = static_cast<uint32_t>(__builtin_parity(reg & tap_mask_));
    reg = ((reg << 1) & state_mask()) | fb;
    return reg;
}

LfsrState lfsr_next(LfsrState state) {
    state.next();
    return state;
}

const std::vector<uint32_t>& default_taps(uint32_t width) {
    // One maximal-length polynomial per width; any other maximal set can be
    // passed explicitly. Checked against full-period enumeration in the tests.
    static const std::vector<std::vector<uint32_t>> table = {
        /* 2*/ {2, 1},
        /* 3*/ {3, 2},
        /* 4*/ {4, 3},
        /* 5*/ {5, 3},
        /* 6*/ {6, 5},
        /* 7*/ {7, 6},
        /* 8*/ {8, 6, 5, 4},
        /* 9*/ {9, 5},
        /*10*/ {10, 7},
        /*11*/ {11, 9},
        /*12*/ {12, 6, 4, 1},
        /*13*/ {13, 4, 3, 1},
        /*14*/ {14, 5, 3, 1},
        /*15*/ {15, 14},
        /*16*/ {16, 15, 13, 4},
    };
    if (width < kMinWidth || width > kMaxWidth) {
        throw std::invalid_argument("no default taps for lfsr width " + std::to_string(width));
    }
    return table[width - kMinWidth];
}

bool is_maximal_length(uint32_t width, const std::vector<uint32_t>& taps) {
    LfsrState s(width, taps, 1);
    const uint32_t period = s.state_mask();
    for (uint32_t i = 0; i < period; ++i) {
        if (s.next() == 0) {
            return false;
        }
        if (s.reg == 1) {
            return i + 1 == period;
        }
    }
    return false;
}

RandomSource RandomSource::lfsr(uint32_t width, uint32_t mask_bits, uint32_t seed) {
    return lfsr(width, mask_bits, seed, default_taps(width));
}

RandomSource RandomSource::lfsr(uint32_t width, uint32_t mask_bits, uint32_t seed,
                                std::vector<uint32_t> taps) {
    if (mask_bits < 1 || mask_bits > width) {
        throw std::invalid_argument("lfsr mask_bits must be in [1, width], got " +
                                    std::to_string(mask_bits));
    }
    RandomSource src;
    src.backend_ = RngBackend::Lfsr;
    src.mask_bits_ = mask_bits;
    src.lfsr_.emplace(width, std::move(taps), seed);
    return src;
}

RandomSource RandomSource::statistical(uint32_t mask_bits, uint64_t seed) {
    if (mask_bits < 1 || mask_bits > kMaxWidth) {
        throw std::invalid_argument("mask_bits must be in [1, 16], got " +
                                    std::to_string(mask_bits));
    }
    RandomSource src;
    src.backend_ = RngBackend::StatisticalUniform;
    src.mask_bits_ = mask_bits;
    src.urng_.seed(seed);
    return src;
}

Draw RandomSource::draw() {
    uint32_t mask = (1u << mask_bits_) - 1u;
    if (backend_ == RngBackend::Lfsr) {
        return Draw{lfsr_->next() & mask, mask_bits_};
    }
    return Draw{static_cast<uint32_t>(urng_()) & mask, mask_bits_};
}

}  // namespace sstdp
