#pragma once

// Slider-crank control task. A force on the slider is carried through the
// connecting rod to a disc rotor; the agent is rewarded each time the rotor
// passes angle pi in the rewarded direction.

#include "drl/rng.hpp"

#include <array>
#include <numbers>
#include <span>
#include <vector>

namespace drl {

struct crank_settings {
    double inertia = 10.0;   ///< J
    double radius = 1.0;     ///< R, rotor centre to crank pin
    double damping = 0.1;    ///< D
    double rod_length = 3.0; ///< L
    double step_width = 1.0;
    int substeps = 1;
    int episode_steps = 400;
    double reward = 0.15;
    double output_gain = 1.25;
    std::array<double, 4> sensor_angles{std::numbers::pi / 4, 3 * std::numbers::pi / 4,
                                        -std::numbers::pi / 4, -3 * std::numbers::pi / 4};
    double reward_angle = std::numbers::pi;
    double test_spacing = 0.02 * std::numbers::pi;
    int test_per_arc = 25;
};

struct crank_state {
    double angle = 0.0;     ///< unwrapped rotor angle [rad]
    double velocity = 0.0;  ///< [rad / step]
    double reward_sign = 1.0;
    int steps = 0;
    std::array<double, 4> sensors{};
    friend bool operator==(const crank_state&, const crank_state&) = default;
};

struct crank_step {
    double reward = 0.0;
    double force = 0.0;
    int reward_crossings = 0;  ///< signed count of passes through pi
};

/// Slider distance from the rotor centre, R cos(a) + sqrt(L^2 - R^2 sin^2(a)).
double slider_position(double angle, double radius, double rod_length);
/// cos of the rod angle from the law of cosines.
double rod_cosine(double angle, double radius, double rod_length);
/// Force on the rotor along its rotation, f sin(phi + angle) / cos(phi),
/// with the signed rod angle sin(phi) = R sin(angle) / L.
double rotor_force(double angle, double force, double radius, double rod_length);

/// Times `target` (mod 2 pi) is passed moving from `from` to `to`. Landing
/// exactly on the target counts; leaving from it does not.
int crossings(double from, double to, double target);

/// (end - start) / 2 pi.
double revolutions(double start_angle, double end_angle);
double revolutions(std::span<const double> angle_trace);

class crank_env {
public:
    explicit crank_env(crank_settings settings = {});

    void reset(double angle, double reward_sign = 1.0);

    /// Applies clip(gain * a, -1, 1) for one step.
    crank_step step(double actor_output);

    /// Four binary crossing signals of the last step.
    void actor_observation(std::span<double> out) const;
    /// (cos angle, sin angle).
    void critic_observation(std::span<double> out) const;

    bool finished() const { return state_.steps >= settings_.episode_steps; }
    const crank_state& state() const { return state_; }
    crank_state& state() { return state_; }
    const crank_settings& settings() const { return settings_; }

    /// Uniform over [pi/4, 3pi/4] u [-3pi/4, -pi/4].
    static double sample_initial_angle(rng_t& rng);
    /// 25 angles per arc at 0.02 pi spacing, starting at each arc's lower bound.
    std::vector<double> test_angles() const;

private:
    crank_settings settings_;
    crank_state state_;
};

}  // namespace drl
