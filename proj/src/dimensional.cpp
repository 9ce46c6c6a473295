#include "esrn/dimensional.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace esrn {

namespace {

// Exact rational scalar for the elimination; exponents in unit matrices are
// tiny, so int64 never gets close to overflow here.
struct Rat {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rat() = default;
    Rat(std::int64_t n) : num(n) {}
    Rat(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const std::int64_t g = std::gcd(std::abs(num), den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        if (num == 0) den = 1;
    }

    bool zero() const { return num == 0; }
    friend Rat operator*(Rat a, Rat b) { return Rat(a.num * b.num, a.den * b.den); }
    friend Rat operator/(Rat a, Rat b) { return Rat(a.num * b.den, a.den * b.num); }
    friend Rat operator-(Rat a, Rat b) {
        return Rat(a.num * b.den - b.num * a.den, a.den * b.den);
    }
};

using RatMatrix = std::vector<std::vector<Rat>>;

// Gauss-Jordan to reduced row echelon form; returns pivot column per row.
std::vector<std::size_t> rref(RatMatrix& a) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && a[pivot][c].zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[r], a[pivot]);
        const Rat inv = Rat(1) / a[r][c];
        for (std::size_t j = c; j < cols; ++j) a[r][j] = a[r][j] * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c].zero()) continue;
            const Rat f = a[i][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] = a[i][j] - f * a[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

RatMatrix to_rows(const UnitMatrix& m) {
    RatMatrix a(m.n_dims(), std::vector<Rat>(m.n_vars()));
    for (std::size_t j = 0; j < m.n_vars(); ++j)
        for (std::size_t i = 0; i < m.n_dims(); ++i) a[i][j] = Rat(m.unit_of[j][i]);
    return a;
}

// Scale a rational vector to the smallest integer vector with positive
// leading nonzero entry.
std::vector<std::int64_t> to_primitive(const std::vector<Rat>& v) {
    std::int64_t lcm = 1;
    for (const Rat& x : v) lcm = std::lcm(lcm, x.den);
    std::vector<std::int64_t> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].num * (lcm / v[i].den);
    std::int64_t g = 0;
    for (std::int64_t x : out) g = std::gcd(g, std::abs(x));
    if (g > 1)
        for (std::int64_t& x : out) x /= g;
    for (std::int64_t x : out) {
        if (x != 0) {
            if (x < 0)
                for (std::int64_t& y : out) y = -y;
            break;
        }
    }
    return out;
}

}  // namespace

bool PiGroup::constant_one() const {
    return !is_output &&
           std::all_of(exponents.begin(), exponents.end(), [](auto e) { return e == 0; });
}

std::vector<std::vector<std::int64_t>> nullspace_exponents(const UnitMatrix& m) {
    const std::size_t n = m.n_vars();
    RatMatrix a = to_rows(m);
    const std::vector<std::size_t> pivots = rref(a);

    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<std::vector<std::int64_t>> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rat> v(n, Rat(0));
        v[free] = Rat(1);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = Rat(0) - a[r][free];
        basis.push_back(to_primitive(v));
    }
    return basis;
}

std::vector<PiGroup> output_normalizers(const UnitMatrix& m, const UnitVector& output_unit,
                                        const std::string& output_symbol,
                                        std::int64_t min_exp, std::int64_t max_exp) {
    if (output_unit.size() != m.n_dims())
        throw std::invalid_argument("output_normalizers: dimension count mismatch");
    const std::size_t n = m.n_vars();

    // Augmented system [M | u] in RREF gives a particular solution over the
    // pivot variables (free variables zero) and exposes inconsistency.
    RatMatrix a = to_rows(m);
    for (std::size_t i = 0; i < m.n_dims(); ++i) a[i].push_back(Rat(output_unit[i]));
    const std::vector<std::size_t> pivots = rref(a);
    for (std::size_t c : pivots)
        if (c == n)
            throw std::invalid_argument(
                "output_normalizers: output unit not expressible in the input variables");

    std::vector<Rat> particular(n, Rat(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) particular[pivots[r]] = a[r][n];

    // Free columns, in order; nullspace basis vector k has a nonzero entry
    // only at free column k among the free columns, which bounds its
    // combination coefficient directly.
    std::vector<std::size_t> free_cols;
    {
        std::vector<bool> is_pivot(n, false);
        for (std::size_t c : pivots) is_pivot[c] = true;
        for (std::size_t c = 0; c < n; ++c)
            if (!is_pivot[c]) free_cols.push_back(c);
    }
    const auto basis = nullspace_exponents(m);

    std::vector<PiGroup> result;
    std::vector<Rat> current = particular;

    auto emit_if_integral = [&]() {
        std::vector<std::int64_t> e(n);
        for (std::size_t j = 0; j < n; ++j) {
            if (current[j].den != 1) return;
            if (current[j].num < min_exp || current[j].num > max_exp) return;
            e[j] = current[j].num;
        }
        PiGroup g;
        g.exponents = std::move(e);
        g.is_output = true;
        g.output_symbol = output_symbol;
        result.push_back(std::move(g));
    };

    // Depth-first over basis coefficients. The particular solution is zero
    // at every free column, and basis vector k is the only one with a
    // nonzero entry at free column k, so its coefficient is pinned by the
    // exponent this column must take.
    auto search = [&](auto&& self, std::size_t k) -> void {
        if (k == basis.size()) {
            emit_if_integral();
            return;
        }
        const std::int64_t step = basis[k][free_cols[k]];  // nonzero by construction
        for (std::int64_t target = min_exp; target <= max_exp; ++target) {
            if (target % step != 0) continue;
            const std::int64_t coeff = target / step;
            for (std::size_t j = 0; j < n; ++j)
                current[j] = current[j] - Rat(-coeff * basis[k][j]);
            self(self, k + 1);
            for (std::size_t j = 0; j < n; ++j)
                current[j] = current[j] - Rat(coeff * basis[k][j]);
        }
    };
    search(search, 0);

    std::sort(result.begin(), result.end(), [](const PiGroup& x, const PiGroup& y) {
        return x.exponents > y.exponents;
    });
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
}

double evaluate_group(const PiGroup& group, const Sample& sample) {
    double value = 1.0;
    for (std::size_t j = 0; j < group.exponents.size(); ++j) {
        const std::int64_t e = group.exponents[j];
        if (e == 0) continue;
        const double x = sample.get(static_cast<Column>(j));
        value *= std::pow(x, group.is_output ? -static_cast<double>(e)
                                             : static_cast<double>(e));
    }
    if (group.is_output) value *= sample.Dl;
    return value;
}

std::string group_name(const PiGroup& group, const UnitMatrix& m) {
    std::string num, den;
    auto append = [](std::string& s, const std::string& name, std::int64_t e) {
        if (!s.empty()) s += "*";
        s += name;
        if (e != 1) s += "^" + std::to_string(e);
    };
    for (std::size_t j = 0; j < group.exponents.size(); ++j) {
        const std::int64_t e = group.exponents[j];
        if (e > 0) append(num, m.variable_names[j], e);
        if (e < 0) append(den, m.variable_names[j], -e);
    }
    if (group.is_output) {
        // Normalizer exponents all live in the denominator of the group.
        std::string norm = num;
        if (!den.empty()) norm += (norm.empty() ? "1/" : "/") + den;
        if (norm.empty()) return group.output_symbol;
        if (norm.find('*') != std::string::npos || norm.find('/') != std::string::npos)
            return group.output_symbol + "/(" + norm + ")";
        return group.output_symbol + "/" + norm;
    }
    if (num.empty() && den.empty()) return "1";
    if (den.empty()) return num;
    if (num.empty()) num = "1";
    return num + "/" + den;
}

UnitMatrix ldc_unit_matrix() {
    UnitMatrix m;
    m.variable_names = {"w", "d", "U", "Ustar"};
    m.unit_of = {{1, 0}, {1, 0}, {1, -1}, {1, -1}};
    return m;
}

UnitVector ldc_output_unit() { return {2, -1}; }

CandidateSet ldc_candidates(std::int64_t min_exp, std::int64_t max_exp) {
    CandidateSet set;
    set.units = ldc_unit_matrix();
    for (auto& e : nullspace_exponents(set.units)) {
        PiGroup g;
        g.exponents = std::move(e);
        set.inputs.push_back(std::move(g));
    }
    PiGroup one;
    one.exponents.assign(set.units.n_vars(), 0);
    set.inputs.push_back(std::move(one));
    set.outputs = output_normalizers(set.units, ldc_output_unit(), "Dl", min_exp, max_exp);
    return set;
}

}  // namespace esrn
