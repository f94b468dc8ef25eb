#pragma once

// Actor-critic agent and the per-episode interaction loops.
//
// Step order: both networks are forwarded on o_t before acting; after the
// move they are forwarded on o_{t+1}, which yields C_{t+1} for the TD error,
// and learning is applied to the step one offset back in the history.

#include "drl/bptt.hpp"
#include "drl/config.hpp"
#include "drl/crank_env.hpp"
#include "drl/nav_env.hpp"
#include "drl/network.hpp"
#include "drl/sensitivity.hpp"

#include <stdexcept>
#include <vector>

namespace drl {

/// Raised when a network output, critic value or TD error stops being finite.
struct divergence_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct agent {
    network_params actor;
    network_params critic;
    network_state actor_state;
    network_state critic_state;
    learning_condition condition;

    network_rates critic_rates;
    network_rates actor_rates;  ///< SRL for Dynamic RL, BPTT/BP otherwise
    network_rates sal_rates;
    sensitivity_tracker tracker;
    critic_raiser raiser;
    local_rule_settings local;
    conventional_settings conventional;

    double gamma = 0.98;
    std::size_t critic_window = 20;
    double noise_sigma = 0.3;
    std::size_t prep_steps = 0;
    double actor_state_spread = 0.0;
    rng_t noise_rng;
    rng_t state_rng;

    network_gradients critic_scratch;
    network_gradients actor_scratch;
};

/// Builds and initialises the agent of run `run` (weights from the run's weight
/// streams, exploration noise from its noise stream).
agent make_agent(const experiment_config& cfg, std::size_t run);

nav_settings navigation_settings(const experiment_config& cfg);
crank_settings crank_task_settings(const experiment_config& cfg);

struct episode_result {
    std::size_t steps = 0;
    double reward_sum = 0.0;
    std::size_t rewards = 0;    ///< positive reward events
    std::size_t penalties = 0;  ///< negative reward events
    bool goal_reached = false;
    double revolutions = 0.0;
};

/// One navigation episode. With `learn` false the networks and every learning
/// state (sensitivity averages, critic average, noise stream) are left untouched;
/// only the initial-state stream advances when actor_state_spread > 0.
episode_result run_navigation_episode(agent& a, navigation_env& env, point start, bool swapped,
                                      bool learn, exec_policy policy = exec_policy::serial);

/// One 400-step crank episode with the given reward sign.
episode_result run_crank_episode(agent& a, crank_env& env, double start_angle, double reward_sign,
                                 bool learn, exec_policy policy = exec_policy::serial);

}  // namespace drl
