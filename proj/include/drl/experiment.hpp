#pragma once

// Multi-run experiment protocol and result files.
//
// Per run: learn phase 1, test, environment change (output swap for
// navigation, reward-sign flip for the crank), learn phase 2, final test,
// classification. Navigation runs stop early once a failure rule fires.
//
// Output directory layout:
//   config.txt            experiment_config snapshot (re-runnable with --config)
//   summary.csv           one line per run
//   curves.csv            cross-run learning curve
//   run_NNN/episodes.csv  one line per learning episode
//   run_NNN/tests.csv     one line per test episode
//   run_NNN/probes.csv    exploration exponent per probe start
//   run_NNN/verdict.txt   verdict and reason
//   run_NNN/{actor_phase1,actor,critic}.json   checkpoints

#include "drl/agent.hpp"
#include "drl/config.hpp"
#include "drl/metrics.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace drl {

struct episode_record {
    std::size_t episode = 0;
    std::size_t steps = 0;
    double reward_sum = 0.0;
    std::size_t rewards = 0;
    std::size_t penalties = 0;
    double revolutions = 0.0;
    /// Set on the last episode of each curve window.
    std::optional<double> window_average;
    std::optional<double> lambda_env1;
    std::optional<double> lambda_env2;
};

struct test_record {
    std::size_t test = 0;           ///< 1 after phase 1, 2 after phase 2
    std::size_t after_episode = 0;  ///< learning episodes completed before the test
    std::size_t index = 0;
    point start;        ///< navigation
    double angle = 0.0; ///< crank
    bool changed = false;  ///< Env2 / flipped reward sign
    episode_result result;
};

struct probe_record {
    std::size_t episode = 0;
    int env = 1;
    std::size_t index = 0;
    std::optional<double> lambda;
};

struct run_record {
    std::size_t run = 0;
    std::vector<episode_record> episodes;
    std::vector<test_record> tests;
    std::vector<probe_record> probes;
    std::vector<double> test_averages;
    run_verdict verdict;
    std::string actor_phase1;  ///< checkpoint text
    std::string actor_final;
    std::string critic_final;

    /// Per-episode curve metric: steps (navigation) or revolutions (crank).
    std::vector<double> curve_values(task_kind task) const;
};

struct run_options {
    exec_policy policy = exec_policy::serial;
    /// Probe the exploration exponent every cfg.probe_every episodes.
    bool probes = true;
    /// Called from the worker after every `progress_every` episodes (0: never).
    std::size_t progress_every = 0;
    std::function<void(std::size_t run, std::size_t episode, double recent_average)> progress;
};

run_record run_single(const experiment_config& cfg, std::size_t run, const run_options& options = {});

/// Runs cfg.first_run .. cfg.first_run + cfg.runs - 1, in parallel across
/// runs with OpenMP. When `output_dir` is not empty each run's files are
/// written as soon as it finishes and the experiment files at the end.
std::vector<run_record> run_experiment(const experiment_config& cfg, const std::string& output_dir,
                                       const run_options& options = {});

// --- files ---------------------------------------------------------------------

std::string run_dir_name(std::size_t run);
std::string episodes_csv(const run_record& rec);
std::string tests_csv(const run_record& rec);
std::string probes_csv(const run_record& rec);
void write_run(const std::string& output_dir, const run_record& rec);

struct run_summary {
    std::size_t run = 0;
    verdict status = verdict::deferred;
    std::string reason;
    std::size_t episodes = 0;
    std::vector<double> test_averages;
};

std::string summary_csv(const std::vector<run_summary>& runs);
std::vector<run_summary> read_summary(const std::string& output_dir);
run_summary summarize(const run_record& rec);

/// Cross-run curve over successful runs and over all runs.
struct curve_table {
    std::size_t window = 0;
    std::vector<curve_point> successful;
    std::vector<curve_point> all;
};

curve_table make_curves(const std::vector<std::vector<double>>& per_run_values,
                        const std::vector<bool>& successful, std::size_t window);
std::string curves_csv(const curve_table& curves);

/// Rebuilds curves.csv content from an output directory written by run_experiment.
curve_table curves_from_directory(const std::string& output_dir);

/// Resolves the output root: `explicit_dir` if set, else $DRL_OUTPUT_ROOT/<name>, else ./runs/<name>.
std::string resolve_output_dir(const std::string& explicit_dir, const std::string& name);

}  // namespace drl
