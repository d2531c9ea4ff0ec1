#pragma once

#include <cstdint>
#include <vector>

#include "sstdp/rng.hpp"

namespace sstdp {

// The decay coefficient is a 9-bit integer a encoding alpha = a / 512.
inline constexpr uint32_t kAlphaFracBits = 9;
inline constexpr uint32_t kAlphaDenom = 1u << kAlphaFracBits;

// Configuration of one exponential decay generator.
//
// alpha_q is the authoritative quantity: the hardware multiplies by a, not by
// tau/(tau+1). The effective time constant is tau_eff = a / (512 - a).
struct DecayParams {
    uint16_t alpha_q = 495;  // alpha = alpha_q / 512, must be < 512
    uint32_t v_width = 4;    // bits stored per decay value
    uint32_t v_init = 15;    // value loaded on reset

    uint32_t v_max() const { return (1u << v_width) - 1u; }
    double alpha() const { return static_cast<double>(alpha_q) / kAlphaDenom; }
    double tau_effective() const {
        return static_cast<double>(alpha_q) / static_cast<double>(kAlphaDenom - alpha_q);
    }
    void validate() const;
};

// Nearest 9-bit coefficient for alpha = tau / (tau + 1).
uint16_t alpha_from_tau(double tau_steps);

struct DecayState {
    uint32_t v = 0;
};

// Ideal IIR update v' = alpha * v. Reference only; the hardware path is
// stochastic_step.
double ideal_iir_step(double v, double alpha);

// Bit-exact stochastic update:
//
//   v' = floor((a * v + k * 2^(9-E)) / 512)
//
// where the draw is r = k / 2^E aligned to the 9 fractional bits of the
// coefficient. All arithmetic is integer; the product a * v fits in 13 bits
// for the 9x4 configuration. v' <= v always, and v = 0 is absorbing.
uint32_t stochastic_step(uint32_t v, const DecayParams& params, Draw r);

// A draw distribution on the grid k / 2^bits: prob[k] is the probability of
// numerator k. Used by the exact analytics below.
struct DrawGrid {
    uint32_t bits = 5;
    std::vector<double> prob;  // size 2^bits, sums to 1

    // Equal weight on every k in [0, 2^bits).
    static DrawGrid uniform(uint32_t bits);
    // Distribution of (state & mask) over the full nonzero-state cycle of a
    // maximal-length LFSR. With mask_bits == width this is equal weight on
    // k in [1, 2^width) and zero weight on k = 0.
    static DrawGrid lfsr(uint32_t width, uint32_t mask_bits);

    void validate() const;
};

// Exact Bernoulli parameter of the extra decrement X at value v: the
// probability that one step removes one more level than the forced integer
// part floor(v * (512 - a) / 512). This is the quantity the hardware
// realizes; the idealized continuous-r forms are below.
double decrement_probability(uint32_t v, const DecayParams& params, const DrawGrid& grid);

// Idealized continuous-r probability frac(v * (1 - alpha)) from the quantized
// coefficient, and the textbook form frac(v / (tau + 1)) from a raw tau.
double decrement_probability_ideal(uint32_t v, const DecayParams& params);
double decrement_probability_ideal_tau(uint32_t v, double tau_steps);

// Steps-per-decrement law: n is geometric with parameter p.
struct DecrementStats {
    double p = 0.0;
    double var_n = 0.0;  // (1 - p) / p^2

    double pmf(uint64_t n) const;  // P(n) = (1 - p)^(n-1) * p, n >= 1
};
DecrementStats geometric_law(double p);

// A decay is feasible iff tau/(tau+1) + 1/2^L < 1, i.e. tau < 2^L - 1. At the
// boundary a v = 1 state can never decrement when the L-bit draw is never
// zero.
enum class Feasibility { feasible, stall };
Feasibility lfsr_feasibility(uint32_t tau, uint32_t lfsr_width);

// Grid-exact stall check: true iff no draw in the grid's support can move
// v = 1 down to 0.
bool stalls_at_v1(const DecayParams& params, const DrawGrid& grid);

// Exact distribution of V[t] propagated through the Markov chain induced by
// stochastic_step over the given draw grid. Returns one distribution over
// {0 .. 2^v_width - 1} per t in [0, t_max]; t = 0 is a point mass at v_init.
// Ground truth for every Monte-Carlo check in the test suites.
std::vector<std::vector<double>> exact_expectation_oracle(const DecayParams& params,
                                                          const DrawGrid& grid, uint32_t t_max);

double dist_mean(const std::vector<double>& dist);
double dist_variance(const std::vector<double>& dist);

// One V trajectory: trace[0] = v_init, then one stochastic step per time
// step. The source is advanced exactly once per step even when v = 0 or the
// step is a reset, so the draw stream position depends only on t. Reset
// times load v_init at that step index.
std::vector<uint32_t> run_trace(const DecayParams& params, RandomSource& src,
                                const std::vector<uint32_t>& reset_times, uint32_t t_max);

// Ideal IIR reference trajectory with the same reset semantics.
std::vector<double> ideal_trace(const DecayParams& params,
                                const std::vector<uint32_t>& reset_times, uint32_t t_max);

}  // namespace sstdp
