#pragma once

// The six actor learning conditions: which rules act on each block column.

#include "drl/network.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace drl {

enum rule : unsigned {
    rule_none = 0,
    rule_srl = 1u << 0,
    rule_sal = 1u << 1,
    rule_bptt = 1u << 2,
    rule_bp = 1u << 3,
    rule_reg = 1u << 4,
};

enum class condition_id { A, A1, A2, B, B1, B2 };

struct learning_condition {
    condition_id id = condition_id::A;
    unsigned hidden_to_output = rule_none;
    unsigned hidden_to_hidden = rule_none;
    unsigned input_to_hidden = rule_none;

    unsigned rules(block_role role) const;
    /// Dynamic RL (rows A*) as opposed to conventional RL (rows B*).
    bool dynamic() const;
    /// Conventional rows whose hidden blocks propagate error back in time.
    bool backprop_through_time() const;
    std::string name() const;

    static learning_condition make(condition_id id);
    /// Accepts exactly `A`, `A-1`, `A-2`, `B`, `B-1`, `B-2`.
    static learning_condition parse(std::string_view text);
    static std::vector<std::string> names();
};

}  // namespace drl
