#include "sstdp/decay.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace sstdp {

void DecayParams::validate() const {
    if (alpha_q >= kAlphaDenom) {
        throw std::invalid_argument("alpha_q must be < 512, got " + std::to_string(alpha_q));
    }
    if (v_width < 1 || v_width > 16) {
        throw std::invalid_argument("v_width must be in [1, 16], got " + std::to_string(v_width));
    }
    if (v_init > v_max()) {
        throw std::invalid_argument("v_init " + std::to_string(v_init) +
                                    " exceeds 2^v_width - 1 = " + std::to_string(v_max()));
    }
}

uint16_t alpha_from_tau(double tau_steps) {
    if (tau_steps < 0.0) {
        throw std::invalid_argument("tau must be >= 0");
    }
    double a = std::round(kAlphaDenom * tau_steps / (tau_steps + 1.0));
    a = std::min(a, static_cast<double>(kAlphaDenom - 1));
    return static_cast<uint16_t>(a);
}

double ideal_iir_step(double v, double alpha) {
    if (alpha < 0.0 || alpha >= 1.0) {
        throw std::invalid_argument("alpha must be in [0, 1)");
    }
    return alpha * v;
}

uint32_t stochastic_step(uint32_t v, const DecayParams& params, Draw r) {
    if (r.bits < 1 || r.bits > kAlphaFracBits) {
        throw std::invalid_argument("draw resolution must be in [1, 9] bits, got " +
                                    std::to_string(r.bits));
    }
    // Align the E-fractional-bit draw to the 9 fractional bits of the
    // product, then truncate. 512 = 2^9, so the floor is a shift.
    uint32_t product = params.alpha_q * v;  // <= 511 * 15 = 7665, fits 13 bits
    uint32_t sum = product + (r.numer << (kAlphaFracBits - r.bits));
    return sum >> kAlphaFracBits;
}

DrawGrid DrawGrid::uniform(uint32_t bits) {
    if (bits < 1 || bits > 16) {
        throw std::invalid_argument("grid bits must be in [1, 16]");
    }
    DrawGrid g;
    g.bits = bits;
    g.prob.assign(size_t{1} << bits, 1.0 / static_cast<double>(1u << bits));
    return g;
}

DrawGrid DrawGrid::lfsr(uint32_t width, uint32_t mask_bits) {
    if (mask_bits < 1 || mask_bits > width) {
        throw std::invalid_argument("mask_bits must be in [1, width]");
    }
    LfsrState s(width, 1);
    const uint32_t period = s.state_mask();
    const uint32_t mask = (1u << mask_bits) - 1u;
    DrawGrid g;
    g.bits = mask_bits;
    g.prob.assign(size_t{1} << mask_bits, 0.0);
    for (uint32_t i = 0; i < period; ++i) {
        g.prob[s.next() & mask] += 1.0 / period;
    }
    return g;
}

void DrawGrid::validate() const {
    if (prob.size() != (size_t{1} << bits)) {
        throw std::invalid_argument("grid probability table size mismatch");
    }
    double total = std::accumulate(prob.begin(), prob.end(), 0.0);
    if (std::abs(total - 1.0) > 1e-9) {
        throw std::invalid_argument("grid probabilities must sum to 1");
    }
}

double decrement_probability(uint32_t v, const DecayParams& params, const DrawGrid& grid) {
    if (v < 1 || v > params.v_max()) {
        throw std::domain_error("decrement probability is defined for v in [1, 2^v_width - 1]");
    }
    grid.validate();
    // Forced integer part of the decrement, independent of the draw.
    uint32_t forced = (v * (kAlphaDenom - params.alpha_q)) >> kAlphaFracBits;
    double p = 0.0;
    for (uint32_t k = 0; k < grid.prob.size(); ++k) {
        if (grid.prob[k] == 0.0) continue;
        uint32_t next = stochastic_step(v, params, Draw{k, grid.bits});
        if (v - next > forced) {
            p += grid.prob[k];
        }
    }
    return p;
}

double decrement_probability_ideal(uint32_t v, const DecayParams& params) {
    if (v < 1 || v > params.v_max()) {
        throw std::domain_error("decrement probability is defined for v in [1, 2^v_width - 1]");
    }
    double x = static_cast<double>(v) * (kAlphaDenom - params.alpha_q) / kAlphaDenom;
    return x - std::floor(x);
}

double decrement_probability_ideal_tau(uint32_t v, double tau_steps) {
    if (v < 1) {
        throw std::domain_error("decrement probability is defined for v >= 1");
    }
    double x = static_cast<double>(v) / (tau_steps + 1.0);
    return x - std::floor(x);
}

DecrementStats geometric_law(double p) {
    if (p <= 0.0 || p > 1.0) {
        throw std::domain_error("geometric parameter must be in (0, 1]; p = 0 never decrements");
    }
    DecrementStats s;
    s.p = p;
    s.var_n = (1.0 - p) / (p * p);
    return s;
}

double DecrementStats::pmf(uint64_t n) const {
    if (n < 1) return 0.0;
    return std::pow(1.0 - p, static_cast<double>(n - 1)) * p;
}

Feasibility lfsr_feasibility(uint32_t tau, uint32_t lfsr_width) {
    if (tau < 1 || lfsr_width < 2) {
        throw std::invalid_argument("feasibility requires tau >= 1 and width >= 2");
    }
    // tau/(tau+1) + 1/2^L < 1  <=>  tau < 2^L - 1.
    uint64_t limit = (uint64_t{1} << lfsr_width) - 1;
    return tau < limit ? Feasibility::feasible : Feasibility::stall;
}

bool stalls_at_v1(const DecayParams& params, const DrawGrid& grid) {
    grid.validate();
    for (uint32_t k = 0; k < grid.prob.size(); ++k) {
        if (grid.prob[k] == 0.0) continue;
        if (stochastic_step(1, params, Draw{k, grid.bits}) == 0) {
            return false;
        }
    }
    return true;
}

std::vector<std::vector<double>> exact_expectation_oracle(const DecayParams& params,
                                                          const DrawGrid& grid, uint32_t t_max) {
    params.validate();
    grid.validate();
    const uint32_t n_states = params.v_max() + 1;

    // One-step transition rows, built by enumerating every grid draw.
    std::vector<std::vector<double>> row(n_states, std::vector<double>(n_states, 0.0));
    row[0][0] = 1.0;  // absorbing
    for (uint32_t v = 1; v < n_states; ++v) {
        for (uint32_t k = 0; k < grid.prob.size(); ++k) {
            if (grid.prob[k] == 0.0) continue;
            row[v][stochastic_step(v, params, Draw{k, grid.bits})] += grid.prob[k];
        }
    }

    std::vector<std::vector<double>> dists;
    dists.reserve(t_max + 1);
    std::vector<double> dist(n_states, 0.0);
    dist[params.v_init] = 1.0;
    dists.push_back(dist);
    for (uint32_t t = 0; t < t_max; ++t) {
        std::vector<double> next(n_states, 0.0);
        for (uint32_t v = 0; v < n_states; ++v) {
            if (dist[v] == 0.0) continue;
            for (uint32_t u = 0; u <= v; ++u) {
                if (row[v][u] != 0.0) next[u] += dist[v] * row[v][u];
            }
        }
        dist = std::move(next);
        dists.push_back(dist);
    }
    return dists;
}

double dist_mean(const std::vector<double>& dist) {
    double m = 0.0;
    for (size_t v = 0; v < dist.size(); ++v) {
        m += static_cast<double>(v) * dist[v];
    }
    return m;
}

double dist_variance(const std::vector<double>& dist) {
    double m = dist_mean(dist);
    double s = 0.0;
    for (size_t v = 0; v < dist.size(); ++v) {
        s += (static_cast<double>(v) - m) * (static_cast<double>(v) - m) * dist[v];
    }
    return s;
}

std::vector<uint32_t> run_trace(const DecayParams& params, RandomSource& src,
                                const std::vector<uint32_t>& reset_times, uint32_t t_max) {
    params.validate();
    std::set<uint32_t> resets(reset_times.begin(), reset_times.end());
    std::vector<uint32_t> trace;
    trace.reserve(t_max + 1);
    uint32_t v = params.v_init;
    trace.push_back(v);
    for (uint32_t t = 1; t <= t_max; ++t) {
        Draw r = src.draw();  // consumed every step, used only when decaying
        if (resets.count(t)) {
            v = params.v_init;
        } else if (v > 0) {
            v = stochastic_step(v, params, r);
        }
        trace.push_back(v);
    }
    return trace;
}

std::vector<double> ideal_trace(const DecayParams& params,
                                const std::vector<uint32_t>& reset_times, uint32_t t_max) {
    params.validate();
    std::set<uint32_t> resets(reset_times.begin(), reset_times.end());
    std::vector<double> trace;
    trace.reserve(t_max + 1);
    double v = static_cast<double>(params.v_init);
    trace.push_back(v);
    for (uint32_t t = 1; t <= t_max; ++t) {
        if (resets.count(t)) {
            v = static_cast<double>(params.v_init);
        } else {
            v = ideal_iir_step(v, params.alpha());
        }
        trace.push_back(v);
    }
    return trace;
}

}  // namespace sstdp
