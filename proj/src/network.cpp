#include "esrn/network.hpp"

#include <algorithm>
#include <cmath>

namespace esrn {

double activation_value(Activation a, double x) {
    switch (a) {
        case Activation::one: return 1.0;
        case Activation::identity: return x;
        case Activation::exp: return std::exp(std::clamp(x, -kExpClamp, kExpClamp));
        case Activation::log_abs: return std::log(std::max(std::fabs(x), kLogFloor));
        case Activation::sigmoid:
            return x >= 0.0 ? 1.0 / (1.0 + std::exp(-x))
                            : std::exp(x) / (1.0 + std::exp(x));
    }
    return 0.0;
}

double activation_derivative(Activation a, double x) {
    switch (a) {
        case Activation::one: return 0.0;
        case Activation::identity: return 1.0;
        case Activation::exp:
            if (x <= -kExpClamp || x >= kExpClamp) return 0.0;
            return std::exp(x);
        case Activation::log_abs:
            if (std::fabs(x) <= kLogFloor) return 0.0;
            return 1.0 / x;
        case Activation::sigmoid: {
            const double s = activation_value(Activation::sigmoid, x);
            return s * (1.0 - s);
        }
    }
    return 0.0;
}

std::string activation_name(Activation a) {
    switch (a) {
        case Activation::one: return "one";
        case Activation::identity: return "identity";
        case Activation::exp: return "exp";
        case Activation::log_abs: return "log_abs";
        case Activation::sigmoid: return "sigmoid";
    }
    return "?";
}

std::size_t SymbolicNetwork::neuron_count() const {
    std::size_t n = 0;
    for (const auto& layer : layers) n += layer.size();
    return n;
}

std::size_t SymbolicNetwork::active_edge_count() const {
    std::size_t n = 0;
    for (const auto& layer : layers)
        for (const Neuron& neuron : layer)
            for (const Edge& e : neuron.in)
                if (e.weight != 0.0) ++n;
    return n;
}

bool SymbolicNetwork::finite() const {
    for (const auto& layer : layers)
        for (const Neuron& neuron : layer) {
            if (!std::isfinite(neuron.bias)) return false;
            for (const Edge& e : neuron.in)
                if (!std::isfinite(e.weight)) return false;
        }
    return true;
}

double forward(const SymbolicNetwork& net, std::span<const double> inputs) {
    std::vector<double> prev(inputs.begin(), inputs.end());
    std::vector<double> next;
    for (const auto& layer : net.layers) {
        next.clear();
        next.reserve(layer.size());
        for (const Neuron& neuron : layer) {
            double z = neuron.bias;
            for (const Edge& e : neuron.in) z += e.weight * prev[e.src];
            next.push_back(activation_value(neuron.act, z));
        }
        prev.swap(next);
    }
    return prev.front();
}

double forward(const SymbolicNetwork& net, const CandidateSet& candidates,
               const Sample& sample) {
    std::vector<double> inputs(net.input_groups.size());
    for (std::size_t i = 0; i < inputs.size(); ++i)
        inputs[i] = evaluate_group(candidates.inputs[net.input_groups[i]], sample);
    return forward(net, inputs);
}

double normalizer_value(const PiGroup& output_group, const Sample& sample) {
    double value = 1.0;
    for (std::size_t j = 0; j < output_group.exponents.size(); ++j) {
        const std::int64_t e = output_group.exponents[j];
        if (e != 0) value *= std::pow(sample.get(static_cast<Column>(j)),
                                      static_cast<double>(e));
    }
    return value;
}

double predict_dl(const SymbolicNetwork& net, const CandidateSet& candidates,
                  const Sample& sample) {
    return forward(net, candidates, sample) *
           normalizer_value(candidates.outputs[net.output_group], sample);
}

NetData make_net_data(const SymbolicNetwork& net, const CandidateSet& candidates,
                      const std::vector<Sample>& samples) {
    NetData data;
    data.x.reserve(samples.size());
    data.y.reserve(samples.size());
    for (const Sample& s : samples) {
        std::vector<double> row(net.input_groups.size());
        for (std::size_t i = 0; i < row.size(); ++i)
            row[i] = evaluate_group(candidates.inputs[net.input_groups[i]], s);
        data.x.push_back(std::move(row));
        data.y.push_back(evaluate_group(candidates.outputs[net.output_group], s));
    }
    return data;
}

std::size_t parameter_count(const SymbolicNetwork& net) {
    std::size_t n = 0;
    for (const auto& layer : net.layers)
        for (const Neuron& neuron : layer) n += neuron.in.size() + 1;
    return n;
}

std::vector<double> get_parameters(const SymbolicNetwork& net) {
    std::vector<double> params;
    params.reserve(parameter_count(net));
    for (const auto& layer : net.layers)
        for (const Neuron& neuron : layer) {
            for (const Edge& e : neuron.in) params.push_back(e.weight);
            params.push_back(neuron.bias);
        }
    return params;
}

void set_parameters(SymbolicNetwork& net, std::span<const double> params) {
    std::size_t k = 0;
    for (auto& layer : net.layers)
        for (Neuron& neuron : layer) {
            for (Edge& e : neuron.in) e.weight = params[k++];
            neuron.bias = params[k++];
        }
}

void init_weights(SymbolicNetwork& net, Rng& rng) {
    for (auto& layer : net.layers)
        for (Neuron& neuron : layer) {
            for (Edge& e : neuron.in) e.weight = rng.uniform(-1.0, 1.0);
            neuron.bias = 0.0;
        }
}

namespace {

// Scratch buffers reused across samples within one loss/gradient sweep.
struct BackpropWorkspace {
    std::vector<std::vector<double>> z;      // pre-activations per layer
    std::vector<std::vector<double>> out;    // activations per layer
    std::vector<std::vector<double>> delta;  // dLoss/dz per layer
};

// Accumulates dLoss_i/dparams for one sample into `grad` (laid out as in
// get_parameters). Returns the sample's squared error, or NaN when the
// forward pass degenerates.
double sample_loss_grad(const SymbolicNetwork& net, std::span<const double> inputs,
                        double target, bool log_loss, BackpropWorkspace& ws,
                        std::vector<double>* grad) {
    const std::size_t n_layers = net.layers.size();
    ws.z.resize(n_layers);
    ws.out.resize(n_layers);

    for (std::size_t l = 0; l < n_layers; ++l) {
        const auto& layer = net.layers[l];
        ws.z[l].resize(layer.size());
        ws.out[l].resize(layer.size());
        const std::vector<double>* prev = l == 0 ? nullptr : &ws.out[l - 1];
        for (std::size_t j = 0; j < layer.size(); ++j) {
            const Neuron& neuron = layer[j];
            double z = neuron.bias;
            for (const Edge& e : neuron.in)
                z += e.weight * (l == 0 ? inputs[e.src] : (*prev)[e.src]);
            ws.z[l][j] = z;
            ws.out[l][j] = activation_value(neuron.act, z);
        }
    }

    const double pred = ws.out.back().front();
    double err, dloss_dpred;
    if (log_loss) {
        const double p = std::max(pred, kLogFloor);
        err = std::log(p) - std::log(target);
        dloss_dpred = pred > kLogFloor ? 2.0 * err / p : 0.0;
    } else {
        err = pred - target;
        dloss_dpred = 2.0 * err;
    }
    const double loss = err * err;
    if (!std::isfinite(loss)) return std::numeric_limits<double>::quiet_NaN();
    if (grad == nullptr) return loss;

    ws.delta.resize(n_layers);
    for (std::size_t l = 0; l < n_layers; ++l)
        ws.delta[l].assign(net.layers[l].size(), 0.0);
    ws.delta.back().front() =
        dloss_dpred * activation_derivative(net.output_neuron().act, ws.z.back().front());

    // Parameter offsets follow the get_parameters layout.
    std::size_t param_base = 0;
    std::vector<std::size_t> layer_base(n_layers);
    for (std::size_t l = 0; l < n_layers; ++l) {
        layer_base[l] = param_base;
        for (const Neuron& neuron : net.layers[l]) param_base += neuron.in.size() + 1;
    }

    for (std::size_t l = n_layers; l-- > 0;) {
        const auto& layer = net.layers[l];
        std::size_t k = layer_base[l];
        for (std::size_t j = 0; j < layer.size(); ++j) {
            const Neuron& neuron = layer[j];
            const double dj = ws.delta[l][j];
            for (const Edge& e : neuron.in) {
                const double src_val = l == 0 ? inputs[e.src] : ws.out[l - 1][e.src];
                (*grad)[k++] += dj * src_val;
                if (l > 0 && dj != 0.0)
                    ws.delta[l - 1][e.src] +=
                        dj * e.weight *
                        activation_derivative(net.layers[l - 1][e.src].act,
                                              ws.z[l - 1][e.src]);
            }
            (*grad)[k++] += dj;  // bias
        }
    }
    return loss;
}

}  // namespace

double loss_and_gradient(const SymbolicNetwork& net, const NetData& data,
                         std::vector<double>* gradient) {
    const bool log_loss = net.output_neuron().act == Activation::exp;
    if (gradient != nullptr) gradient->assign(parameter_count(net), 0.0);

    BackpropWorkspace ws;
    double total = 0.0;
    for (std::size_t i = 0; i < data.x.size(); ++i) {
        const double li = sample_loss_grad(net, data.x[i], data.y[i], log_loss, ws, gradient);
        total += li;
    }
    const double inv_n = 1.0 / static_cast<double>(data.x.size());
    if (gradient != nullptr)
        for (double& g : *gradient) g *= inv_n;
    return total * inv_n;
}

TrainResult train(SymbolicNetwork& net, const NetData& data, const TrainOptions& opts) {
    TrainResult result;
    if (data.x.empty()) {
        result.dead = true;
        return result;
    }
    result.initial_loss = loss_and_gradient(net, data, nullptr);
    result.final_loss = result.initial_loss;
    if (!std::isfinite(result.initial_loss)) {
        result.dead = true;
        return result;
    }
    if (opts.epochs <= 0) return result;

    const std::size_t n_params = parameter_count(net);
    std::vector<double> params = get_parameters(net);
    std::vector<double> grad;
    std::vector<double> m(n_params, 0.0), v(n_params, 0.0);

    double b1t = 1.0, b2t = 1.0;
    for (int epoch = 0; epoch < opts.epochs; ++epoch) {
        const double loss = loss_and_gradient(net, data, &grad);
        if (!std::isfinite(loss)) {
            result.dead = true;
            return result;
        }
        b1t *= opts.beta1;
        b2t *= opts.beta2;
        for (std::size_t k = 0; k < n_params; ++k) {
            m[k] = opts.beta1 * m[k] + (1.0 - opts.beta1) * grad[k];
            v[k] = opts.beta2 * v[k] + (1.0 - opts.beta2) * grad[k] * grad[k];
            const double m_hat = m[k] / (1.0 - b1t);
            const double v_hat = v[k] / (1.0 - b2t);
            params[k] -= opts.lr * m_hat / (std::sqrt(v_hat) + opts.eps);
        }
        set_parameters(net, params);
    }

    result.final_loss = loss_and_gradient(net, data, nullptr);
    if (!std::isfinite(result.final_loss) || !net.finite()) result.dead = true;
    return result;
}

}  // namespace esrn
