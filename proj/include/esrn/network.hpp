#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "esrn/dimensional.hpp"
#include "esrn/rng.hpp"
#include "esrn/sample.hpp"

namespace esrn {

/// The five symbolic activation primitives. Compositions of these through
/// network layers encode closed-form formulas.
enum class Activation : int {
    one = 0,       // a1(x) = 1
    identity = 1,  // a2(x) = x
    exp = 2,       // a3(x) = e^x
    log_abs = 3,   // a4(x) = ln|x|
    sigmoid = 4,   // a5(x) = 1/(1+e^-x)
};
inline constexpr int kActivationCount = 5;

// Guards: the exp argument is clamped to [-60, 60] and ln|x| is evaluated
// as ln(max(|x|, 1e-12)), so a population member can saturate but never
// poison a run with non-finite values.
inline constexpr double kExpClamp = 60.0;
inline constexpr double kLogFloor = 1e-12;

double activation_value(Activation a, double x);
/// Derivative w.r.t. the pre-activation; zero in saturated guard regions.
double activation_derivative(Activation a, double x);
std::string activation_name(Activation a);

struct Edge {
    int src = 0;  // index into the previous layer (or input slot for layer 0)
    double weight = 0.0;
};

struct Neuron {
    Activation act = Activation::identity;
    double bias = 0.0;
    std::vector<Edge> in;
};

/// A candidate formula: dimensionless input slots feeding layers of neurons
/// with symbolic activations. Weights and biases are the formula
/// parameters. The last layer holds exactly one output neuron; the
/// prediction is dimensionless and is scaled by the output normalizer to
/// recover the physical target.
struct SymbolicNetwork {
    std::vector<int> input_groups;  // CandidateSet input indices, one per slot
    int output_group = 0;           // CandidateSet output index
    std::vector<std::vector<Neuron>> layers;

    const Neuron& output_neuron() const { return layers.back().front(); }
    std::size_t neuron_count() const;
    std::size_t active_edge_count() const;  // edges with nonzero weight
    bool finite() const;                    // all weights and biases finite
};

/// Forward pass on already-evaluated input-slot values.
double forward(const SymbolicNetwork& net, std::span<const double> inputs);
/// Forward pass on a sample: evaluates the net's input groups first.
double forward(const SymbolicNetwork& net, const CandidateSet& candidates,
               const Sample& sample);

/// Physical prediction: forward() scaled by the output normalizer.
double predict_dl(const SymbolicNetwork& net, const CandidateSet& candidates,
                  const Sample& sample);

/// Value of the output normalizer product at a sample.
double normalizer_value(const PiGroup& output_group, const Sample& sample);

/// Per-network training matrix: rows of evaluated input-slot values plus
/// the dimensionless target Dl / normalizer.
struct NetData {
    std::vector<std::vector<double>> x;
    std::vector<double> y;
};
NetData make_net_data(const SymbolicNetwork& net, const CandidateSet& candidates,
                      const std::vector<Sample>& samples);

struct TrainOptions {
    int epochs = 500;
    double lr = 0.01;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps = 1e-8;
};

struct TrainResult {
    double initial_loss = 0.0;
    double final_loss = 0.0;
    bool dead = false;  // non-finite loss or parameters; exclude from ranking
};

/// Full-batch Adam on the mean squared error of the dimensionless target.
/// When the output neuron's activation is exp, the error is taken between
/// ln(max(prediction, 1e-12)) and ln(target) — the target spans orders of
/// magnitude and the candidate is a power law in that case. epochs = 0
/// returns the network unchanged.
TrainResult train(SymbolicNetwork& net, const NetData& data, const TrainOptions& opts);

/// Mean loss under the same convention as train(), plus (optionally) its
/// gradient over the flattened parameters (per neuron: edge weights in
/// order, then bias; neurons in layer order).
double loss_and_gradient(const SymbolicNetwork& net, const NetData& data,
                         std::vector<double>* gradient);

std::size_t parameter_count(const SymbolicNetwork& net);
std::vector<double> get_parameters(const SymbolicNetwork& net);
void set_parameters(SymbolicNetwork& net, std::span<const double> params);

/// Uniform [-1, 1] weights, zero biases.
void init_weights(SymbolicNetwork& net, Rng& rng);

}  // namespace esrn
