#pragma once

// Exploration exponent, run verdicts and learning-curve aggregation.

#include "drl/nav_env.hpp"
#include "drl/network.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace drl {

// --- exploration exponent ----------------------------------------------------

struct probe_settings {
    double displacement = 1e-6;
    double lower_bound = 1e-10;
    double upper_bound = 1e2;
    std::size_t prep_steps = 5;
    /// Layer whose outputs join the observation in the distance space.
    std::string state_layer = "upper";
};

/// lambda = ln(d_end / d_0) / T_end for the distance trace `distances`
/// (index 0 is the first step after preparation). The trace is cut before
/// the first distance outside [lower, upper]. Returns nullopt when d_0 is zero
/// or out of bounds, or when no step survives the cut.
std::optional<double> exploration_exponent(std::span<const double> distances,
                                           double lower_bound = 1e-10, double upper_bound = 1e2);

/// Runs an original and a replica agent (same actor, no learning) from
/// `start` and from `start` displaced by `displacement` along `direction`
/// (radians), until either episode ends, and returns the per-step distance
/// between the concatenated (observation, state layer output) vectors.
std::vector<double> probe_distances(const network_params& actor, const nav_settings& env_settings,
                                    point start, bool swapped, double direction,
                                    const probe_settings& settings,
                                    exec_policy policy = exec_policy::serial);

/// Default probe starts: the 3 x 3 grid {-6, 0, 6}^2.
std::vector<point> probe_starts();

struct probe_result {
    std::vector<std::optional<double>> per_start;
    std::optional<double> mean;  ///< over the valid starts
};

/// Exponent per start with directions drawn from `rng`, and their mean.
probe_result probe_navigation(const network_params& actor, const nav_settings& env_settings,
                              std::span<const point> starts, bool swapped, rng_t& rng,
                              const probe_settings& settings = {},
                              exec_policy policy = exec_policy::serial);

// --- verdicts ----------------------------------------------------------------

enum class verdict { success, failure, overrun, diverged, deferred };

std::string to_string(verdict v);
verdict verdict_from_string(const std::string& text);

struct run_verdict {
    verdict status = verdict::deferred;
    std::string reason;
};

struct failure_rule {
    std::size_t min_episode;
    double threshold;
    std::size_t consecutive;
};

/// Tracks the navigation failure criteria over successive window averages.
class failure_monitor {
public:
    failure_monitor();
    explicit failure_monitor(std::vector<failure_rule> rules);

    /// `episodes_done` is the 1-based count of episodes at the end of the window.
    /// Returns true once any rule has fired.
    bool push(std::size_t episodes_done, double window_average);
    bool failed() const { return failed_; }
    std::size_t failed_at() const { return failed_at_; }
    const std::string& reason() const { return reason_; }

private:
    std::vector<failure_rule> rules_;
    std::vector<std::size_t> counters_;
    bool failed_ = false;
    std::size_t failed_at_ = 0;
    std::string reason_;
};

struct navigation_history {
    std::size_t window = 500;
    std::vector<double> window_averages;
    std::size_t expected_windows = 80;
    std::vector<double> test_averages;
    std::size_t expected_tests = 2;
    double overrun_threshold = 20.0;
};

run_verdict classify_navigation_run(const navigation_history& history);

run_verdict classify_crank_run(std::optional<double> first_test_average,
                               std::optional<double> final_test_average,
                               double threshold = 20.0);

// --- learning curves -----------------------------------------------------------

struct window_stat {
    double mean = 0.0;
    std::size_t count = 0;
    bool partial = false;
};

/// Non-overlapping window means. A trailing incomplete window is kept and flagged.
std::vector<window_stat> window_means(std::span<const double> values, std::size_t window);

struct curve_point {
    double mean = 0.0;
    double stddev = 0.0;  ///< population standard deviation across runs
    std::size_t runs = 0;
};

/// Cross-run mean and standard deviation per window index. Runs may have
/// different lengths; each point uses the runs that reach it.
std::vector<curve_point> learning_curve(const std::vector<std::vector<double>>& per_run_window_means);

/// Window means of every run, then the cross-run curve.
std::vector<curve_point> learning_curve(const std::vector<std::vector<double>>& per_run_values,
                                        std::size_t window);

}  // namespace drl
