#pragma once

#include <json.hpp>
#include <stdexcept>
#include <string>

#include "esrn/dimensional.hpp"
#include "esrn/expression.hpp"
#include "esrn/network.hpp"
#include "esrn/stats.hpp"

namespace esrn {

using json = nlohmann::json;

/// Exponent-map form, e.g. {"exponents": {"w": 1, "d": -1}}; zero exponents
/// are omitted. Output groups carry their dependent-variable symbol.
inline json group_to_json(const PiGroup& g, const UnitMatrix& units) {
    json expo = json::object();
    for (std::size_t j = 0; j < g.exponents.size(); ++j)
        if (g.exponents[j] != 0) expo[units.variable_names[j]] = g.exponents[j];
    json out{{"exponents", expo}, {"name", group_name(g, units)}};
    if (g.is_output) out["output_symbol"] = g.output_symbol;
    return out;
}

inline PiGroup group_from_json(const json& j, const UnitMatrix& units) {
    PiGroup g;
    g.exponents.assign(units.n_vars(), 0);
    for (const auto& [name, value] : j.at("exponents").items()) {
        bool found = false;
        for (std::size_t v = 0; v < units.n_vars(); ++v) {
            if (units.variable_names[v] == name) {
                g.exponents[v] = value.get<std::int64_t>();
                found = true;
                break;
            }
        }
        if (!found) throw std::runtime_error("group_from_json: unknown variable '" + name + "'");
    }
    if (j.contains("output_symbol")) {
        g.is_output = true;
        g.output_symbol = j.at("output_symbol").get<std::string>();
    }
    return g;
}

inline json candidates_to_json(const CandidateSet& set) {
    json inputs = json::array(), outputs = json::array();
    for (const PiGroup& g : set.inputs) inputs.push_back(group_to_json(g, set.units));
    for (const PiGroup& g : set.outputs) outputs.push_back(group_to_json(g, set.units));
    return json{{"inputs", inputs}, {"outputs", outputs}};
}

inline json network_to_json(const SymbolicNetwork& net, const CandidateSet& set) {
    json inputs = json::array();
    for (int gi : net.input_groups) inputs.push_back(group_to_json(set.inputs[gi], set.units));
    json layers = json::array();
    for (const auto& layer : net.layers) {
        json jl = json::array();
        for (const Neuron& n : layer) {
            json edges = json::array();
            for (const Edge& e : n.in) edges.push_back(json{{"src", e.src}, {"w", e.weight}});
            jl.push_back(json{{"activation", activation_name(n.act)},
                              {"bias", n.bias},
                              {"in", edges}});
        }
        layers.push_back(jl);
    }
    return json{{"input_groups", inputs},
                {"output_group", group_to_json(set.outputs[net.output_group], set.units)},
                {"layers", layers}};
}

inline Activation activation_from_name(const std::string& name) {
    for (int a = 0; a < kActivationCount; ++a)
        if (activation_name(static_cast<Activation>(a)) == name)
            return static_cast<Activation>(a);
    throw std::runtime_error("unknown activation '" + name + "'");
}

inline SymbolicNetwork network_from_json(const json& j, const CandidateSet& set) {
    SymbolicNetwork net;
    auto find_group = [](const std::vector<PiGroup>& pool, const PiGroup& g) {
        for (std::size_t i = 0; i < pool.size(); ++i)
            if (pool[i] == g) return static_cast<int>(i);
        throw std::runtime_error("network_from_json: group not in candidate set");
    };
    for (const json& jg : j.at("input_groups"))
        net.input_groups.push_back(find_group(set.inputs, group_from_json(jg, set.units)));
    net.output_group = find_group(set.outputs, group_from_json(j.at("output_group"), set.units));
    for (const json& jl : j.at("layers")) {
        std::vector<Neuron> layer;
        for (const json& jn : jl) {
            Neuron n;
            n.act = activation_from_name(jn.at("activation").get<std::string>());
            n.bias = jn.at("bias").get<double>();
            for (const json& je : jn.at("in"))
                n.in.push_back(Edge{je.at("src").get<int>(), je.at("w").get<double>()});
            layer.push_back(std::move(n));
        }
        net.layers.push_back(std::move(layer));
    }
    return net;
}

inline json expression_to_json(const Expression& e, const UnitMatrix& units) {
    static const char* kind_names[] = {"constant", "variable",  "sum",     "product",
                                       "power",    "exp",       "log_abs", "sigmoid"};
    json out{{"kind", kind_names[static_cast<int>(e.kind)]}};
    if (e.kind == Expression::Kind::constant || e.kind == Expression::Kind::power)
        out["value"] = e.value;
    if (e.kind == Expression::Kind::variable) out["group"] = group_to_json(e.group, units);
    if (!e.children.empty()) {
        json children = json::array();
        for (const Expression& c : e.children) children.push_back(expression_to_json(c, units));
        out["children"] = children;
    }
    return out;
}

inline Expression expression_from_json(const json& j, const UnitMatrix& units) {
    static const char* kind_names[] = {"constant", "variable",  "sum",     "product",
                                       "power",    "exp",       "log_abs", "sigmoid"};
    Expression e;
    const std::string kind = j.at("kind").get<std::string>();
    bool matched = false;
    for (int k = 0; k < 8; ++k) {
        if (kind == kind_names[k]) {
            e.kind = static_cast<Expression::Kind>(k);
            matched = true;
            break;
        }
    }
    if (!matched) throw std::runtime_error("expression_from_json: unknown kind '" + kind + "'");
    if (j.contains("value")) e.value = j.at("value").get<double>();
    if (j.contains("group")) e.group = group_from_json(j.at("group"), units);
    if (j.contains("children"))
        for (const json& jc : j.at("children"))
            e.children.push_back(expression_from_json(jc, units));
    return e;
}

inline json column_stats_to_json(const ColumnStats& s) {
    return json{{"count", s.count},       {"min", s.min},
                {"median", s.median},     {"max", s.max},
                {"iqr", s.iqr},           {"std", s.std_dev},
                {"var", s.variance},      {"kurtosis", s.kurtosis},
                {"mad", s.mad},           {"skewness", s.skewness},
                {"degenerate", s.degenerate}};
}

inline json dataset_stats_to_json(const DatasetStats& stats) {
    json out = json::object();
    for (Column c : kAllColumns)
        out[std::string(column_name(c))] = column_stats_to_json(stats.of(c));
    return out;
}

}  // namespace esrn
