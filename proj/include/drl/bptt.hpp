#pragma once

// Temporal-difference error, truncated backpropagation through time, the
// critic update, the conventional (noise-driven) actor update and critic raising.

#include "drl/condition.hpp"
#include "drl/network.hpp"
#include "drl/sensitivity.hpp"

#include <span>
#include <vector>

namespace drl {

/// gamma * C_next + r - C_t, with C_next replaced by 0 on a terminal transition.
double td_error(double gamma, double value_t, double value_next, double reward, bool terminal);

/// Gradient buffers laid out like a network_params.
struct network_gradients {
    std::vector<std::vector<matrix>> weights;  ///< [layer][block]
    std::vector<std::vector<double>> bias;     ///< [layer][neuron]

    static network_gradients zeros(const network_params& params);
    void clear();
    double max_abs() const;
};

/// Accumulates into `out` the descent direction -dE/dparam of
/// E = 0.5 |target - o_out|^2 at history offset `back`, given
/// `output_error` = target - o_out. The error is propagated back through at
/// most `window` steps (offsets back .. back+window-1); activity before the
/// window, including feedback inputs of its first step, is held constant.
/// Weights are read from `params` as they are now.
void backprop_window(const network_params& params, const network_state& state, std::size_t back,
                     std::size_t window, std::span<const double> output_error,
                     network_gradients& out, exec_policy policy = exec_policy::serial);

/// params += rate_block * grad, per block and per layer bias.
void apply_gradients(network_params& params, const network_gradients& grad,
                     const network_rates& rates, exec_policy policy = exec_policy::serial);

/// Trains the critic toward C_t + td for the step at offset `back`.
/// Does nothing when the history holds no step at that offset.
void critic_train_step(network_params& critic, const network_state& state, std::size_t back,
                       std::size_t window, double td, const network_rates& rates,
                       network_gradients& scratch, exec_policy policy = exec_policy::serial);

struct conventional_settings {
    std::size_t window = 20;
    local_rule_settings local;
};

/// Conventional RL for the actor step at offset `back`: output error td * noise,
/// backpropagated through `window` steps (B, B-1) or one step (B-2), plus SAL
/// on hidden neurons where the condition enables it and output regularisation.
/// Throws if `noise` does not match the output size (noise for the step is missing).
void conventional_actor_step(network_params& actor, const network_state& state, std::size_t back,
                             std::span<const double> noise, double td,
                             const learning_condition& condition,
                             const network_rates& bptt_rates, const network_rates& sal_rates,
                             sensitivity_tracker& tracker, const conventional_settings& settings,
                             network_gradients& scratch, exec_policy policy = exec_policy::serial);

/// Moving average of the critic output and the optimistic bias boost.
struct critic_raiser {
    double beta = 0.0001;
    double threshold = 0.1;
    double rate = 0.0005;
    double average = 0.0;
};

/// Updates the average with C_t, then raises the critic output bias by
/// rate * (threshold - average) if the average is below threshold.
/// Returns the bias change.
double raise_critic(critic_raiser& raiser, network_params& critic, double value_t);

}  // namespace drl
