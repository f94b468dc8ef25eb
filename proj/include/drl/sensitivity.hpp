#pragma once

// Sensitivity-based local learning for the actor.
//
// The sensitivity of a tanh neuron is the norm of its output gradient with
// respect to its input vector, s = (1 - tanh^2(U)) |w|. Sensitivity adjustment
// learning (SAL) climbs the gradient of s; sensitivity-controlled RL (SRL)
// moves s against the sign of the TD error. Both updates only touch the
// neuron's own incoming weights and bias.

#include "drl/condition.hpp"
#include "drl/network.hpp"

#include <span>
#include <vector>

namespace drl {

struct neuron_update {
    std::vector<double> dw;
    double dbias = 0.0;
};

/// s = f'(U) |w| with f = tanh.
double sensitivity(double U, std::span<const double> w);

/// Exponential moving average (1 - alpha) average + alpha s.
double update_sensitivity_average(double average, double s, double alpha);

/// Updates below this weight norm are skipped: w/|w| is undefined at w = 0.
inline constexpr double default_weight_norm_floor = 1e-12;

/// Gradient ascent on s for one neuron, scaled by eta dt/tau. Returned, not applied.
neuron_update sal_update(std::span<const double> x, std::span<const double> w, double bias,
                         double o, double tau, double eta, double step_width = 1.0,
                         double norm_floor = default_weight_norm_floor);

/// SRL: -td times the SAL direction, scaled by eta dt/tau.
neuron_update srl_update(std::span<const double> x, std::span<const double> w, double bias,
                         double o, double tau, double eta, double td, double step_width = 1.0,
                         double norm_floor = default_weight_norm_floor);

/// -eta_reg W.
matrix regularize_output_weights(const matrix& w, double eta_reg);

/// Per-block and per-layer learning rates laid out like a network_params.
struct layer_rates {
    std::vector<double> weights;  ///< one per incoming block
    double bias = 0.0;
};

struct network_rates {
    std::vector<layer_rates> layers;

    static network_rates zeros(const network_params& params);
    /// Rate of the block named `block` (e.g. "input->lower").
    double& weight(const network_params& params, const std::string& block);
    double& bias(const network_params& params, const std::string& layer);
    network_rates scaled(double factor) const;
};

/// Per-neuron moving average of sensitivity. It persists across episodes.
struct sensitivity_tracker {
    double alpha = 0.001;
    /// Seed each average with the neuron's first observed sensitivity; when
    /// false every average starts at `initial_value`.
    bool init_from_first = true;
    double initial_value = 0.0;
    /// Skip the average update on steps where a neuron takes the SRL branch.
    bool freeze_during_srl = false;

    bool initialized = false;
    std::vector<std::vector<double>> average;

    sensitivity_tracker() = default;
    sensitivity_tracker(const network_params& params, double alpha_);
};

struct local_rule_settings {
    double target_sensitivity = 1.3;
    double eta_reg = 0.0;
    double weight_norm_floor = default_weight_norm_floor;
};

enum class branch { none, sal, srl };

/// Which branch each neuron took in the last step (optional instrumentation).
struct local_step_report {
    std::vector<std::vector<branch>> branches;
    std::vector<std::vector<double>> sensitivities;
};

/// Applies the local rules of `condition` to every neuron of `actor` for the
/// step cached at history offset `back`:
///   - the moving average of sensitivity is updated first;
///   - a neuron whose blocks carry both SAL and SRL takes SAL when its average
///     is below target and SRL otherwise; SRL-only neurons always take SRL;
///     SAL-only neurons take SAL when below target;
///   - every block applies the chosen branch only if the condition enables it
///     there, and blocks marked for regularisation also decay by eta_reg.
/// BPTT/BP rules are not handled here.
void dynamic_rl_step(network_params& actor, const network_state& state, std::size_t back,
                     double td, const learning_condition& condition, const network_rates& srl_rates,
                     const network_rates& sal_rates, sensitivity_tracker& tracker,
                     const local_rule_settings& settings, exec_policy policy = exec_policy::serial,
                     local_step_report* report = nullptr);

}  // namespace drl
