#pragma once

// Leaky-integrator recurrent networks: the Elman critic and the MTRNN actor.
//
// A network is a list of layers in evaluation order. Every layer receives a
// set of fully connected blocks; each block reads either the external input,
// the current-step output of an earlier layer, or the previous-step output of
// any layer (feedback). Each neuron integrates
//
//     u_t = (1 - dt/tau) u_{t-1} + (dt/tau) w . x_t,     o_t = tanh(u_t + bias)
//
// and layers with tau == 1 reduce exactly to u_t = w . x_t.

#include "drl/kernels.hpp"
#include "drl/matrix.hpp"
#include "drl/rng.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace drl {

inline constexpr int external_input = -1;

enum class timing {
    current,   ///< source output at time t (source layer evaluated earlier)
    previous,  ///< source output at time t-1 (feedback)
};

/// Which column of the learning-condition table a block belongs to.
enum class block_role { input_to_hidden, hidden_to_hidden, hidden_to_output };

struct connection {
    std::string name;  ///< "<source>-><target>", used for init/rate lookup and checkpoints
    int source = external_input;
    timing when = timing::current;
    block_role role = block_role::input_to_hidden;
    matrix weights;  ///< [target size x source size]

    friend bool operator==(const connection&, const connection&) = default;
};

struct layer_params {
    std::string name;
    double tau = 1.0;
    std::vector<double> bias;
    std::vector<connection> inputs;

    std::size_t size() const { return bias.size(); }
    bool is_static() const { return tau == 1.0; }

    friend bool operator==(const layer_params&, const layer_params&) = default;
};

struct network_params {
    std::string name;
    std::size_t input_size = 0;
    double step_width = 1.0;
    std::vector<layer_params> layers;  ///< evaluation order; the last layer is the output

    const layer_params& output_layer() const { return layers.back(); }
    std::size_t output_size() const { return layers.back().size(); }
    std::size_t source_size(int source) const;
    std::string source_name(int source) const;
    int find_layer(const std::string& layer_name) const;
    /// Throws std::invalid_argument if the wiring or any block shape is inconsistent.
    void validate() const;
    std::size_t parameter_count() const;

    friend bool operator==(const network_params&, const network_params&) = default;
};

struct layer_activity {
    std::vector<double> u;
    std::vector<double> o;
};

struct step_record {
    std::vector<double> input;
    std::vector<layer_activity> layers;
};

/// Current activity plus a ring buffer of past steps. Offset 0 is the most
/// recent step; offset k is k steps earlier. Right after reset() offset 0 holds
/// the reset state (u = 0, o = tanh(bias), zero input).
class network_state {
public:
    network_state() = default;
    network_state(const network_params& params, std::size_t history_depth);

    void reset(const network_params& params);
    /// Restarts the history from `record` (offset 0, zero steps taken). Used to
    /// replay a window from a recorded state.
    void reset_to(const step_record& record);

    const step_record& at(std::size_t back) const;
    const layer_activity& layer(std::size_t index, std::size_t back = 0) const
    {
        return at(back).layers[index];
    }
    /// Forward steps taken since the last reset.
    std::size_t steps() const { return steps_; }
    /// Steps that can be looked back from offset `back` (excluding the reset record).
    std::size_t available(std::size_t back) const { return steps_ > back ? steps_ - back : 0; }
    std::size_t depth() const { return ring_.size(); }

    /// Rotates the ring and returns the slot for the new step.
    step_record& advance();

    friend bool operator==(const network_state&, const network_state&);

private:
    std::vector<step_record> ring_;
    std::size_t head_ = 0;
    std::size_t steps_ = 0;
};

/// The vector block `c` of layer `layer` reads at offset `back`.
std::span<const double> source_vector(const network_params& params, const network_state& state,
                                      const connection& c, std::size_t back);

/// One leaky-integrator layer update. `sources[k]` feeds `p.inputs[k]`.
void step_layer(const layer_params& p, double step_width,
                std::span<const std::span<const double>> sources, std::span<const double> u_prev,
                std::span<double> u, std::span<double> o,
                exec_policy policy = exec_policy::serial);

/// Advances every layer by one step and returns the output layer activity.
std::span<const double> forward(const network_params& params, network_state& state,
                                std::span<const double> input,
                                exec_policy policy = exec_policy::serial);

// --- topologies -----------------------------------------------------------

struct actor_shape {
    std::size_t inputs = 122;
    std::size_t lower = 200;
    std::size_t upper = 100;
    std::size_t outputs = 2;
    double upper_tau = 5.0;
    /// Evaluate the upper hidden layer before the lower one (lower->upper then
    /// reads t-1 lower outputs and upper->lower reads time-t upper outputs).
    bool upper_first = false;
};

struct critic_shape {
    std::size_t inputs = 122;
    std::size_t hidden = 50;
};

/// MTRNN actor with zero weights: input -> lower <-> upper (self-feedback) , lower -> output.
network_params make_actor(const actor_shape& shape);
/// Elman critic with zero weights: input -> hidden (self-feedback) -> output(1).
network_params make_critic(const critic_shape& shape);

// --- initialisation -------------------------------------------------------

struct block_init {
    enum class kind { constant, uniform, spectral };
    kind type = kind::constant;
    /// constant value, uniform half-width, or target spectral radius
    double value = 0.0;

    static block_init constant(double v) { return {kind::constant, v}; }
    static block_init uniform(double half_width) { return {kind::uniform, half_width}; }
    static block_init spectral(double radius) { return {kind::spectral, radius}; }
};

/// Largest absolute eigenvalue of a square matrix.
double spectral_radius(const matrix& m);

/// Scales m in place so that its spectral radius equals `radius`.
void scale_to_spectral_radius(matrix& m, double radius);

/// Fills every block named in `inits` (blocks not named stay untouched) and
/// sets all biases to zero. Each block draws from its own generator derived
/// from (seed, block name), so blocks are independent of each other.
void init_weights(network_params& params, const std::map<std::string, block_init>& inits,
                  std::uint64_t master_seed, std::uint64_t run);

}  // namespace drl
