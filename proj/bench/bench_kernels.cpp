// Serial reference kernels against their OpenMP versions at the network sizes
// used by the navigation task, plus the per-step actor learning cost of
// Dynamic RL against truncated BPTT.

#include "drl/agent.hpp"
#include "drl/bptt.hpp"
#include "drl/config.hpp"
#include "drl/kernels.hpp"
#include "drl/nav_env.hpp"
#include "drl/sensitivity.hpp"

#include <benchmark/benchmark.h>
#include <omp.h>

#include <random>

using namespace drl;

namespace {

matrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    matrix m(rows, cols);
    for (double& v : m.data) v = u(rng);
    return m;
}

std::vector<double> random_vector(std::size_t n, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<double> v(n);
    for (double& x : v) x = u(rng);
    return v;
}

void set_threads(benchmark::State& state)
{
    omp_set_num_threads(static_cast<int>(state.range(2)));
}

template <exec_policy P>
void bm_gemv(benchmark::State& state)
{
    set_threads(state);
    const auto w = random_matrix(state.range(0), state.range(1), 1);
    const auto x = random_vector(w.cols, 2);
    std::vector<double> y(w.rows, 0.0);
    for (auto _ : state) {
        kernels::gemv_acc(P, w, x, y);
        benchmark::DoNotOptimize(y.data());
    }
}

template <exec_policy P>
void bm_gemv_t(benchmark::State& state)
{
    set_threads(state);
    const auto w = random_matrix(state.range(0), state.range(1), 1);
    const auto d = random_vector(w.rows, 2);
    std::vector<double> y(w.cols, 0.0);
    for (auto _ : state) {
        kernels::gemv_t_acc(P, w, d, y);
        benchmark::DoNotOptimize(y.data());
    }
}

template <exec_policy P>
void bm_rank1(benchmark::State& state)
{
    set_threads(state);
    auto w = random_matrix(state.range(0), state.range(1), 1);
    const auto a = random_vector(w.rows, 2);
    const auto b = random_vector(w.cols, 3);
    for (auto _ : state) {
        kernels::rank1_acc(P, w, 1e-9, a, b);
        benchmark::DoNotOptimize(w.data.data());
    }
}

template <exec_policy P>
void bm_row_local_update(benchmark::State& state)
{
    set_threads(state);
    auto w = random_matrix(state.range(0), state.range(1), 1);
    const auto gw = random_vector(w.rows, 2);
    const auto gx = random_vector(w.rows, 3);
    const auto x = random_vector(w.cols, 4);
    for (auto _ : state) {
        kernels::row_local_update(P, w, gw, gx, x);
        benchmark::DoNotOptimize(w.data.data());
    }
}

void kernel_args(benchmark::internal::Benchmark* b)
{
    const int max_threads = omp_get_num_procs();
    for (auto [rows, cols] : {std::pair{200, 122}, std::pair{100, 100}, std::pair{200, 100}}) {
        b->Args({rows, cols, 1});
        if (max_threads > 1) b->Args({rows, cols, max_threads});
    }
    b->ArgNames({"rows", "cols", "threads"});
}

/// One actor learning step after a filled history, for the given condition.
void bm_actor_step(benchmark::State& state, const std::string& condition)
{
    omp_set_num_threads(1);
    const auto cfg = default_config(task_kind::navigation, condition);
    auto a = make_agent(cfg, 0);
    navigation_env env(navigation_settings(cfg));
    env.reset({-4.0, -7.0});
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> move(-1.0, 1.0);
    std::vector<double> obs(a.actor.input_size);
    for (std::size_t t = 0; t < cfg.bptt_window + 2; ++t) {
        env.observe(obs);
        forward(a.actor, a.actor_state, obs);
        const std::vector<double> m{move(rng), move(rng)};
        if (env.act(m).terminal()) env.reset({-4.0, -7.0});
    }
    const std::vector<double> noise{0.1, -0.2};
    std::size_t k = 0;
    for (auto _ : state) {
        const double td = k++ % 2 ? 0.01 : -0.01;
        if (a.condition.dynamic())
            dynamic_rl_step(a.actor, a.actor_state, 1, td, a.condition, a.actor_rates, a.sal_rates, a.tracker,
                            a.local);
        else
            conventional_actor_step(a.actor, a.actor_state, 1, noise, td, a.condition, a.actor_rates,
                                    a.sal_rates, a.tracker, a.conventional, a.actor_scratch);
        benchmark::ClobberMemory();
    }
}

}  // namespace

BENCHMARK(bm_gemv<exec_policy::serial>)->Apply(kernel_args);
BENCHMARK(bm_gemv<exec_policy::parallel>)->Apply(kernel_args);
BENCHMARK(bm_gemv_t<exec_policy::serial>)->Apply(kernel_args);
BENCHMARK(bm_gemv_t<exec_policy::parallel>)->Apply(kernel_args);
BENCHMARK(bm_rank1<exec_policy::serial>)->Apply(kernel_args);
BENCHMARK(bm_rank1<exec_policy::parallel>)->Apply(kernel_args);
BENCHMARK(bm_row_local_update<exec_policy::serial>)->Apply(kernel_args);
BENCHMARK(bm_row_local_update<exec_policy::parallel>)->Apply(kernel_args);
BENCHMARK_CAPTURE(bm_actor_step, dynamic_rl_A, std::string("A"))->Unit(benchmark::kMicrosecond);
BENCHMARK_CAPTURE(bm_actor_step, bptt_B1, std::string("B-1"))->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
