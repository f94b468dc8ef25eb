#pragma once

// JSON checkpoints of network parameters (format "drl-network", version 1).
// The layout is documented in README.md under "Checkpoint format".

#include "drl/network.hpp"
#include "drl/sensitivity.hpp"

#include <optional>
#include <string>

namespace drl {

struct checkpoint {
    network_params params;
    /// Per-layer sensitivity moving averages, when the writer had a tracker.
    std::optional<std::vector<std::vector<double>>> sensitivity_average;
};

std::string checkpoint_to_string(const network_params& params,
                                 const sensitivity_tracker* tracker = nullptr);
checkpoint checkpoint_from_string(const std::string& text);

void save_checkpoint(const std::string& path, const network_params& params,
                     const sensitivity_tracker* tracker = nullptr);
checkpoint load_checkpoint(const std::string& path);

}  // namespace drl
