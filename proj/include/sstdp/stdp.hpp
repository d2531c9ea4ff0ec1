#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "sstdp/decay.hpp"

namespace sstdp {

enum class SpikeKind : uint8_t { pre, post };
enum class LastKind : uint8_t { none, pre, post };

// Weight-update scaling and bounds. Delta-t convention throughout:
// delta_t = t_pre - t_post, so delta_t < 0 (pre first) potentiates.
struct StdpConfig {
    double a_plus = 1.0;   // potentiation scale A+
    double a_minus = 1.0;  // depression scale A-
    uint32_t w_max = 1023;

    enum class WInit { constant, uniform };
    WInit w_init = WInit::constant;
    uint32_t w_init_value = 1023;
    uint64_t w_init_seed = 1;

    // Nominal window time constants; realized through alpha_q table entries.
    double tau_plus_steps = 20.0;
    double tau_minus_steps = 20.0;

    void validate() const;
};

// Per-synapse adaptor state: the stored weight and the kind of the spike
// that started the currently running decay.
struct AdaptorState {
    uint32_t weight = 0;
    LastKind last_kind = LastKind::none;
};

enum class DecayCommand : uint8_t { none, reset };

struct SpikeOutcome {
    AdaptorState state;
    DecayCommand decay_command = DecayCommand::reset;
    int64_t weight_delta = 0;  // applied delta, after clamping to [0, w_max]
};

// Reference exponential STDP curve (validation only, not the hardware path):
// A+ * exp(dt/tau+) for dt < 0, -A- * exp(-dt/tau-) for dt >= 0.
double ideal_delta_w(int64_t delta_t_steps, const StdpConfig& cfg);

// Spike arrival at one adaptor. An opposite-kind pair applies a signed,
// clamped update of round(A * decay_v); a same-kind spike or a first spike
// applies nothing. Every spike restarts the decay (nearest-pair semantics)
// and records its kind.
SpikeOutcome on_spike(AdaptorState state, SpikeKind kind, uint32_t decay_v,
                      const StdpConfig& cfg);

struct CurvePoint {
    int64_t delta_t = 0;
    double mean_dw = 0.0;
    double std_dw = 0.0;
};

// Empirical pair-based STDP curve: for each delta_t, runs n_trials isolated
// spike pairs separated by |delta_t| steps through the decay + on_spike
// pipeline with fresh sources, and reports the mean and std of the weight
// delta. delta_t = 0 pairs are suppressed by the simultaneity rule.
std::vector<CurvePoint> measure_stdp_curve(
    const StdpConfig& cfg, const DecayParams& params,
    const std::vector<int64_t>& delta_t_list, uint32_t n_trials,
    const std::function<RandomSource(uint64_t)>& src_factory);

// Least-squares fit of ln|mean_dw| vs |delta_t| on one branch; returns the
// fitted decay constant tau. Points with mean_dw == 0 are skipped.
double fit_curve_tau(const std::vector<CurvePoint>& curve, bool negative_branch);

}  // namespace sstdp
