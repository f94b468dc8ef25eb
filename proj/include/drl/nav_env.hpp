#pragma once

// Sequential navigation task: a 20 x 20 walled field centred at the origin.
// The agent must touch the subgoal before the final goal; it sees only an
// 11 x 11 grid of 1 x 1 visual cells around the origin plus a subgoal-contact
// signal.

#include "drl/rng.hpp"

#include <array>
#include <cstddef>
#include <span>
#include <vector>

namespace drl {

struct point {
    double x = 0.0;
    double y = 0.0;
    friend bool operator==(const point&, const point&) = default;
};

struct nav_settings {
    double field_half = 10.0;
    /// Agent centre is clamped to [-wall_limit, wall_limit]^2 (body inside the field).
    double wall_limit = 9.5;
    double agent_size = 1.0;
    int sensor_cells = 11;
    point subgoal{0.0, 4.0};
    point goal{0.0, -3.0};
    double goal_radius = 2.0;
    double reward = 0.8;
    double penalty = -0.03;
    double subgoal_signal = 2.0;
    int max_steps = 200;
    double output_gain = 1.25;
    /// Perimeter half-size used for every fourth start.
    double perimeter_half = 9.0;
    int perimeter_every = 4;
    double test_spacing = 3.0;
    double test_half = 9.0;

    std::size_t observation_size() const
    {
        return static_cast<std::size_t>(sensor_cells * sensor_cells) + 1;
    }
};

struct nav_state {
    point position;
    bool subgoal_visited = false;
    int steps = 0;
    /// Env2: the two actor outputs exchange roles.
    bool swapped = false;
    bool rewarded = false;
    friend bool operator==(const nav_state&, const nav_state&) = default;
};

struct nav_step {
    double reward = 0.0;
    bool goal_reached = false;
    bool timed_out = false;
    bool terminal() const { return goal_reached || timed_out; }
};

class navigation_env {
public:
    explicit navigation_env(nav_settings settings = {});

    void reset(point start, bool swapped = false);

    /// 121 overlap areas (cell index = row * 11 + col, x = col - 5, y = row - 5)
    /// followed by the subgoal-contact signal.
    void observe(std::span<double> out) const;
    std::vector<double> observe() const;

    /// Moves by the normalised actor output. Throws on non-finite outputs.
    nav_step act(std::span<const double> outputs);

    const nav_state& state() const { return state_; }
    nav_state& state() { return state_; }
    const nav_settings& settings() const { return settings_; }

    bool in_subgoal(point p) const;
    bool in_goal(point p) const;

    /// clip(gain * a, -1, 1) rescaled so that the reachable set is the unit disc.
    static std::array<double, 2> movement(double a0, double a1, double gain = 1.25);

    /// Every `perimeter_every`-th episode (index % n == 0) starts uniformly on
    /// the perimeter of the 18 x 18 square, otherwise uniformly in the field.
    point sample_start(rng_t& rng, std::size_t episode) const;

    /// The 7 x 7 test grid minus the points inside either goal circle (46 points).
    std::vector<point> test_starts() const;

private:
    nav_settings settings_;
    nav_state state_;
};

}  // namespace drl
