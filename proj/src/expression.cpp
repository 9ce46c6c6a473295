#include "esrn/expression.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "esrn/csv.hpp"

namespace esrn {

Expression Expression::constant(double v) {
    Expression e;
    e.kind = Kind::constant;
    e.value = v;
    return e;
}

Expression Expression::variable(const PiGroup& g) {
    Expression e;
    e.kind = Kind::variable;
    e.group = g;
    return e;
}

double eval(const Expression& expr, const Sample& sample) {
    switch (expr.kind) {
        case Expression::Kind::constant: return expr.value;
        case Expression::Kind::variable: return evaluate_group(expr.group, sample);
        case Expression::Kind::sum: {
            double s = 0.0;
            for (const Expression& c : expr.children) s += eval(c, sample);
            return s;
        }
        case Expression::Kind::product: {
            double p = 1.0;
            for (const Expression& c : expr.children) p *= eval(c, sample);
            return p;
        }
        case Expression::Kind::power:
            return std::pow(std::max(std::fabs(eval(expr.children.front(), sample)), kLogFloor),
                            expr.value);
        case Expression::Kind::exp_fn:
            return activation_value(Activation::exp, eval(expr.children.front(), sample));
        case Expression::Kind::log_abs:
            return activation_value(Activation::log_abs, eval(expr.children.front(), sample));
        case Expression::Kind::sigmoid:
            return activation_value(Activation::sigmoid, eval(expr.children.front(), sample));
    }
    return 0.0;
}

namespace {

// The affine combination feeding a neuron, as a sum node mirroring the
// forward pass order: bias first, then weight*input terms. Zero-weight
// terms contribute nothing and are dropped.
Expression affine_expression(const Neuron& neuron, const std::vector<Expression>& prev) {
    Expression sum;
    sum.kind = Expression::Kind::sum;
    sum.children.push_back(Expression::constant(neuron.bias));
    for (const Edge& e : neuron.in) {
        if (e.weight == 0.0) continue;
        Expression term;
        term.kind = Expression::Kind::product;
        term.children.push_back(Expression::constant(e.weight));
        term.children.push_back(prev[e.src]);
        sum.children.push_back(std::move(term));
    }
    return sum;
}

bool is_const(const Expression& e) { return e.kind == Expression::Kind::constant; }

// Fold nodes whose children are all constants; drop additive zeros and
// multiplicative ones; collapse single-child sums/products.
Expression fold(Expression e) {
    for (Expression& c : e.children) c = fold(std::move(c));
    switch (e.kind) {
        case Expression::Kind::constant:
        case Expression::Kind::variable: return e;
        case Expression::Kind::sum: {
            double c_sum = 0.0;
            std::vector<Expression> rest;
            for (Expression& c : e.children) {
                if (is_const(c)) {
                    c_sum += c.value;
                } else if (c.kind == Expression::Kind::sum) {  // splice nested sums
                    for (Expression& gc : c.children) {
                        if (is_const(gc))
                            c_sum += gc.value;
                        else
                            rest.push_back(std::move(gc));
                    }
                } else {
                    rest.push_back(std::move(c));
                }
            }
            if (rest.empty()) return Expression::constant(c_sum);
            if (c_sum != 0.0) rest.insert(rest.begin(), Expression::constant(c_sum));
            if (rest.size() == 1) return std::move(rest.front());
            e.children = std::move(rest);
            return e;
        }
        case Expression::Kind::product: {
            double c_prod = 1.0;
            std::vector<Expression> rest;
            for (Expression& c : e.children) {
                if (is_const(c)) {
                    c_prod *= c.value;
                } else if (c.kind == Expression::Kind::product) {  // splice nested products
                    for (Expression& gc : c.children) {
                        if (is_const(gc))
                            c_prod *= gc.value;
                        else
                            rest.push_back(std::move(gc));
                    }
                } else {
                    rest.push_back(std::move(c));
                }
            }
            if (c_prod == 0.0) return Expression::constant(0.0);
            if (rest.empty()) return Expression::constant(c_prod);
            if (c_prod != 1.0) rest.insert(rest.begin(), Expression::constant(c_prod));
            if (rest.size() == 1) return std::move(rest.front());
            e.children = std::move(rest);
            return e;
        }
        case Expression::Kind::power: {
            if (e.value == 0.0) return Expression::constant(1.0);
            if (is_const(e.children.front()))
                return Expression::constant(
                    std::pow(std::max(std::fabs(e.children.front().value), kLogFloor), e.value));
            if (e.value == 1.0 && e.children.front().kind == Expression::Kind::variable)
                return std::move(e.children.front());
            return e;
        }
        case Expression::Kind::exp_fn:
            if (is_const(e.children.front()))
                return Expression::constant(
                    activation_value(Activation::exp, e.children.front().value));
            return e;
        case Expression::Kind::log_abs:
            if (is_const(e.children.front()))
                return Expression::constant(
                    activation_value(Activation::log_abs, e.children.front().value));
            return e;
        case Expression::Kind::sigmoid:
            if (is_const(e.children.front()))
                return Expression::constant(
                    activation_value(Activation::sigmoid, e.children.front().value));
            return e;
    }
    return e;
}

}  // namespace

Expression decode(const SymbolicNetwork& net, const CandidateSet& candidates) {
    std::vector<Expression> prev;
    prev.reserve(net.input_groups.size());
    for (int gi : net.input_groups)
        prev.push_back(Expression::variable(candidates.inputs[gi]));

    for (const auto& layer : net.layers) {
        std::vector<Expression> next;
        next.reserve(layer.size());
        for (const Neuron& neuron : layer) {
            if (neuron.act == Activation::one) {
                next.push_back(Expression::constant(1.0));
                continue;
            }
            Expression affine = affine_expression(neuron, prev);
            switch (neuron.act) {
                case Activation::identity: next.push_back(std::move(affine)); break;
                case Activation::exp:
                case Activation::log_abs:
                case Activation::sigmoid: {
                    Expression wrap;
                    wrap.kind = neuron.act == Activation::exp ? Expression::Kind::exp_fn
                                : neuron.act == Activation::log_abs
                                    ? Expression::Kind::log_abs
                                    : Expression::Kind::sigmoid;
                    wrap.children.push_back(std::move(affine));
                    next.push_back(std::move(wrap));
                    break;
                }
                default: break;
            }
        }
        prev = std::move(next);
    }
    return fold(std::move(prev.front()));
}

namespace {

double snap(double v, double tol) {
    const double r = std::round(v);
    return std::fabs(v - r) <= tol ? r : v;
}

Expression snap_coefficients(Expression e, double tol) {
    if (e.kind == Expression::Kind::constant) e.value = snap(e.value, tol);
    if (e.kind == Expression::Kind::power) e.value = snap(e.value, tol);
    for (Expression& c : e.children) c = snap_coefficients(std::move(c), tol);
    return e;
}

// ln|c * X| == ln|c| + ln|X| away from the guard floor; normalizing this
// form lets the power-law matcher absorb inner scale factors into the
// leading constant.
Expression expand_log_products(Expression e) {
    for (Expression& c : e.children) c = expand_log_products(std::move(c));
    if (e.kind != Expression::Kind::log_abs) return e;
    Expression& arg = e.children.front();
    if (arg.kind != Expression::Kind::product || arg.children.empty() ||
        !is_const(arg.children.front()))
        return e;
    const double c = arg.children.front().value;
    if (c == 0.0) return e;

    Expression inner;
    if (arg.children.size() == 2) {
        inner = std::move(arg.children[1]);
    } else {
        inner.kind = Expression::Kind::product;
        inner.children.assign(std::make_move_iterator(arg.children.begin() + 1),
                              std::make_move_iterator(arg.children.end()));
    }
    Expression log_inner;
    log_inner.kind = Expression::Kind::log_abs;
    log_inner.children.push_back(std::move(inner));

    Expression out;
    out.kind = Expression::Kind::sum;
    out.children.push_back(Expression::constant(std::log(std::fabs(c))));
    out.children.push_back(std::move(log_inner));
    return out;
}

// c * (a + b + ...) -> c*a + c*b + ...; exposes inner log expansions to the
// power-law matcher below.
Expression distribute_const_over_sum(Expression e) {
    for (Expression& c : e.children) c = distribute_const_over_sum(std::move(c));
    if (e.kind != Expression::Kind::product || e.children.size() != 2 ||
        !is_const(e.children.front()) || e.children[1].kind != Expression::Kind::sum)
        return e;
    const double c = e.children.front().value;
    Expression out;
    out.kind = Expression::Kind::sum;
    for (Expression& term : e.children[1].children) {
        Expression scaled;
        scaled.kind = Expression::Kind::product;
        scaled.children.push_back(Expression::constant(c));
        scaled.children.push_back(std::move(term));
        out.children.push_back(std::move(scaled));
    }
    return out;
}

// Matches exp(k + sum of a_i * ln|v_i|) and rewrites it as the product
// e^k * prod(v_i ^ a_i). Terms must be constants, log|variable|, or
// constant*log|variable|.
Expression collapse_exp_of_logs(Expression e) {
    for (Expression& c : e.children) c = collapse_exp_of_logs(std::move(c));
    if (e.kind != Expression::Kind::exp_fn) return e;

    const Expression& arg = e.children.front();
    std::vector<const Expression*> summands;
    if (arg.kind == Expression::Kind::sum)
        for (const Expression& c : arg.children) summands.push_back(&c);
    else
        summands.push_back(&arg);

    double k = 0.0;
    std::vector<std::pair<const Expression*, double>> terms;  // (log argument, coefficient)
    for (const Expression* s : summands) {
        if (is_const(*s)) {
            k += s->value;
        } else if (s->kind == Expression::Kind::log_abs &&
                   s->children.front().kind == Expression::Kind::variable) {
            terms.emplace_back(&s->children.front(), 1.0);
        } else if (s->kind == Expression::Kind::product && s->children.size() == 2 &&
                   is_const(s->children[0]) &&
                   s->children[1].kind == Expression::Kind::log_abs &&
                   s->children[1].children.front().kind == Expression::Kind::variable) {
            terms.emplace_back(&s->children[1].children.front(), s->children[0].value);
        } else {
            return e;  // not a pure power law
        }
    }

    Expression out;
    out.kind = Expression::Kind::product;
    out.children.push_back(Expression::constant(std::exp(k)));
    for (const auto& [var, coeff] : terms) {
        Expression p;
        p.kind = Expression::Kind::power;
        p.value = coeff;
        p.children.push_back(*var);
        out.children.push_back(std::move(p));
    }
    return out;
}

}  // namespace

std::optional<PowerLaw> as_power_law(const Expression& expr) {
    PowerLaw law;
    std::vector<const Expression*> factors;
    if (expr.kind == Expression::Kind::product)
        for (const Expression& c : expr.children) factors.push_back(&c);
    else
        factors.push_back(&expr);

    for (const Expression* f : factors) {
        if (is_const(*f)) {
            law.constant *= f->value;
        } else if (f->kind == Expression::Kind::variable) {
            law.terms.emplace_back(f->group, 1.0);
        } else if (f->kind == Expression::Kind::power &&
                   f->children.front().kind == Expression::Kind::variable) {
            law.terms.emplace_back(f->children.front().group, f->value);
        } else {
            return std::nullopt;
        }
    }
    return law;
}

std::array<double, 4> physical_exponents(const PowerLaw& law, const PiGroup& output_group) {
    std::array<double, 4> exps{};
    for (std::size_t j = 0; j < output_group.exponents.size() && j < 4; ++j)
        exps[j] += static_cast<double>(output_group.exponents[j]);
    for (const auto& [group, power] : law.terms)
        for (std::size_t j = 0; j < group.exponents.size() && j < 4; ++j)
            exps[j] += power * static_cast<double>(group.exponents[j]);
    return exps;
}

Expression simplify(const Expression& expr, double snap_tol,
                    const std::vector<Sample>& refit_samples,
                    std::span<const double> targets) {
    Expression e = fold(snap_coefficients(expr, snap_tol));
    e = fold(expand_log_products(std::move(e)));
    e = fold(distribute_const_over_sum(std::move(e)));
    e = fold(collapse_exp_of_logs(std::move(e)));

    if (!refit_samples.empty() && refit_samples.size() == targets.size() &&
        as_power_law(e).has_value()) {
        // Least squares for the multiplicative constant in log space:
        // ln C* = ln C + mean(ln t_i - ln p_i).
        double shift = 0.0;
        std::size_t n = 0;
        bool valid = true;
        for (std::size_t i = 0; i < refit_samples.size(); ++i) {
            const double p = eval(e, refit_samples[i]);
            if (!(p > 0.0) || !(targets[i] > 0.0) || !std::isfinite(p)) {
                valid = false;
                break;
            }
            shift += std::log(targets[i]) - std::log(p);
            ++n;
        }
        if (valid && n > 0) {
            const double factor = std::exp(shift / static_cast<double>(n));
            if (e.kind == Expression::Kind::product && is_const(e.children.front())) {
                e.children.front().value *= factor;
            } else {
                Expression out;
                out.kind = Expression::Kind::product;
                out.children.push_back(Expression::constant(factor));
                out.children.push_back(std::move(e));
                e = std::move(out);
            }
            e = fold(std::move(e));
        }
    }
    return e;
}

namespace {

std::string format_coeff(double v) { return format_double(v); }

std::string render(const Expression& e, const UnitMatrix& units, bool parenthesize) {
    switch (e.kind) {
        case Expression::Kind::constant: {
            std::string s = format_coeff(e.value);
            if (parenthesize && e.value < 0.0) return "(" + s + ")";
            return s;
        }
        case Expression::Kind::variable: {
            const std::string name = group_name(e.group, units);
            if (name.find('/') != std::string::npos || name.find('*') != std::string::npos)
                return "(" + name + ")";
            return name;
        }
        case Expression::Kind::sum: {
            std::string s;
            for (std::size_t i = 0; i < e.children.size(); ++i) {
                if (i > 0) s += " + ";
                s += render(e.children[i], units, false);
            }
            if (parenthesize) return "(" + s + ")";
            return s;
        }
        case Expression::Kind::product: {
            std::string s;
            for (std::size_t i = 0; i < e.children.size(); ++i) {
                if (i > 0) s += " * ";
                s += render(e.children[i], units, true);
            }
            if (parenthesize) return "(" + s + ")";
            return s;
        }
        case Expression::Kind::power:
            return render(e.children.front(), units, true) + "^" + format_coeff(e.value);
        case Expression::Kind::exp_fn:
            return "exp(" + render(e.children.front(), units, false) + ")";
        case Expression::Kind::log_abs:
            return "log|" + render(e.children.front(), units, false) + "|";
        case Expression::Kind::sigmoid:
            return "sigmoid(" + render(e.children.front(), units, false) + ")";
    }
    return "?";
}

}  // namespace

std::string to_string(const Expression& expr, const UnitMatrix& units) {
    return render(expr, units, false);
}

}  // namespace esrn
