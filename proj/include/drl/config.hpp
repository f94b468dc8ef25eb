#pragma once

// Experiment configuration. Defaults depend on the task and the learning
// condition; `default_config` resolves them so that a written config file
// always carries explicit values.
//
// File format: one `key = value` pair per line, `#` starts a comment line.

#include "drl/condition.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace drl {

enum class task_kind { navigation, crank };

std::string to_string(task_kind t);
task_kind task_from_string(const std::string& text);

struct experiment_config {
    task_kind task = task_kind::navigation;
    std::string condition = "A";
    std::size_t episodes_phase1 = 20000;
    std::size_t episodes_phase2 = 20000;
    std::size_t runs = 40;
    std::uint64_t seed = 1;
    std::size_t first_run = 0;

    // learning
    double gamma = 0.98;
    double target_sensitivity = 1.3;
    double sensitivity_alpha = 0.001;
    bool sensitivity_init_from_first = true;
    double sensitivity_initial = 0.0;
    bool sensitivity_freeze_during_srl = false;
    double critic_beta = 0.0001;
    double critic_threshold = 0.1;
    double critic_raise_rate = 0.0005;
    double eta_reg = 1e-6;
    std::size_t bptt_window = 20;
    double noise_sigma = 0.3;

    // architecture
    std::size_t actor_lower = 200;
    std::size_t actor_upper = 100;
    std::size_t critic_hidden = 50;
    double upper_tau = 5.0;
    bool upper_first = false;

    // initial weights (uniform half-widths, spectral radii, constants)
    double critic_init_input = 0.2;
    double critic_radius = 1.3;
    double actor_init_input = 0.2;
    double actor_init_inter = 0.1;
    double actor_radius = 3.0;
    double actor_init_output = 0.1;

    // critic learning rates
    double critic_lr_input = 0.2;
    double critic_lr_hidden = 0.002;
    double critic_lr_output = 0.02;
    double critic_lr_bias = 0.02;

    // actor learning rates: SRL for Dynamic RL, BPTT/BP for conventional RL
    double actor_lr_input = 0.01;
    double actor_lr_inter = 0.005;
    double actor_lr_upper_self = 0.005;
    double actor_lr_output = 0.01;
    double actor_lr_bias_lower = 0.002;
    double actor_lr_bias_upper = 0.002;
    double actor_lr_bias_output = 0.002;

    // SAL learning rates
    double sal_lr_input = 0.001;
    double sal_lr_inter = 0.0005;
    double sal_lr_upper_self = 0.0005;
    double sal_lr_bias_lower = 0.0002;
    double sal_lr_bias_upper = 0.0002;

    // task
    std::size_t prep_steps = 5;
    /// Half-width of the uniform draw for the actor's internal states at
    /// episode start (0: all states start at 0). The crank actor sees all-zero
    /// input until the rotor passes a sensor, so a zero start would never move.
    double actor_state_spread = 0.0;
    double wall_limit = 9.5;
    std::size_t crank_substeps = 1;
    std::size_t curve_window = 500;
    std::size_t probe_every = 100;
    bool failure_checks = true;

    learning_condition learning() const { return learning_condition::parse(condition); }

    /// Ordered key/value pairs; values use the shortest round-trip representation.
    std::vector<std::pair<std::string, std::string>> to_pairs() const;
    /// Sets one key. Throws std::invalid_argument on unknown keys or bad values.
    void set(const std::string& key, const std::string& value);
    static std::vector<std::string> keys();

    std::string to_text() const;
    static experiment_config from_text(const std::string& text);
    void save(const std::string& path) const;
    static experiment_config load(const std::string& path);

    /// Throws std::invalid_argument when values are out of range.
    void validate() const;

    friend bool operator==(const experiment_config&, const experiment_config&) = default;
};

/// Defaults for `task` and `condition`, including the Dynamic RL / conventional
/// split of initial weights and learning rates.
experiment_config default_config(task_kind task, const std::string& condition);

/// Shortest decimal text that parses back to the same double.
std::string format_double(double v);
double parse_double(const std::string& text);

}  // namespace drl
