#pragma once

// Finite-difference verification of the truncated-BPTT gradients.

#include "drl/network.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace drl {

/// 0.5 |target - o|^2 for the output at offset `back`, recomputed by replaying
/// the truncated window from the recorded step just before it with `params`.
/// The window is clamped exactly as backprop_window clamps it.
double window_loss(const network_params& params, const network_state& state, std::size_t back,
                   std::size_t window, std::span<const double> target);

struct gradcheck_result {
    std::string name;
    std::size_t parameters = 0;
    double max_abs_error = 0.0;
    /// max |analytic - numeric| / max(|analytic|, |numeric|, floor)
    double max_rel_error = 0.0;
};

/// Compares backprop_window against central differences of window_loss for
/// every weight and bias of `params`.
gradcheck_result check_window_gradient(const std::string& name, const network_params& params,
                                       const network_state& state, std::size_t back,
                                       std::size_t window, std::span<const double> target,
                                       double step = 1e-5, double floor = 1e-6);

/// The standard suite: a 2-3-1 Elman critic and a small MTRNN actor (both
/// layer orders), with critic-style and noise-driven output errors and
/// several window lengths.
std::vector<gradcheck_result> run_gradcheck_suite(std::uint64_t seed = 1);

}  // namespace drl
