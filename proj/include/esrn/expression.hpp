#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "esrn/dimensional.hpp"
#include "esrn/network.hpp"
#include "esrn/sample.hpp"

namespace esrn {

/// Symbolic formula tree decoded from a network. Evaluation uses the same
/// guarded primitives as the network forward pass, so a decoded expression
/// reproduces its source network exactly.
struct Expression {
    enum class Kind {
        constant,  // value
        variable,  // a dimensionless input group
        sum,       // children summed in order
        product,   // children multiplied in order
        power,     // children[0] ^ value, evaluated as max(|x|, 1e-12)^value
        exp_fn,    // e^children[0], argument clamped
        log_abs,   // ln|children[0]|, floored
        sigmoid,   // logistic of children[0]
    };

    Kind kind = Kind::constant;
    double value = 0.0;  // constant value, or the exponent of a power node
    PiGroup group;       // variable nodes only
    std::vector<Expression> children;

    static Expression constant(double v);
    static Expression variable(const PiGroup& g);
};

double eval(const Expression& expr, const Sample& sample);

/// Exact symbolic transcription of a trained network: a1 -> constant 1,
/// a2 -> affine, a3 -> exp(affine), a4 -> ln|affine|, a5 -> sigmoid(affine),
/// composed layer by layer. Branches with no incoming signal fold to their
/// constant value, preserving evaluation exactly (including guard effects).
Expression decode(const SymbolicNetwork& net, const CandidateSet& candidates);

/// Snap coefficients within snap_tol of an integer, collapse
/// exp(sum of constant and coefficient*ln|group| terms) into the canonical
/// power-law product, fold constants, and — when the result is a pure
/// power law and refit data is given — refit the multiplicative constant by
/// one-dimensional least squares in log space against `targets`.
Expression simplify(const Expression& expr, double snap_tol,
                    const std::vector<Sample>& refit_samples = {},
                    std::span<const double> targets = {});

/// Power-law reading of an expression: constant * prod(group_i ^ exp_i).
struct PowerLaw {
    double constant = 1.0;
    std::vector<std::pair<PiGroup, double>> terms;
};
std::optional<PowerLaw> as_power_law(const Expression& expr);

/// Physical-variable exponents of `Dl = constant * prod(x_j ^ e_j)` implied
/// by a power law in dimensionless groups together with its output
/// normalizer. Index order is w, d, U, Ustar.
std::array<double, 4> physical_exponents(const PowerLaw& law, const PiGroup& output_group);

/// Canonical infix form, e.g. "exp(2.63 + log|w/d| - log|U/Ustar|)".
std::string to_string(const Expression& expr, const UnitMatrix& units);

}  // namespace esrn
