#pragma once

#include <array>
#include <cmath>
#include <limits>
#include <string_view>
#include <vector>

namespace esrn {

/// Column ids of the river-observation schema.
enum class Column { w = 0, d = 1, U = 2, Ustar = 3, Dl = 4 };

inline constexpr std::array<Column, 5> kAllColumns = {Column::w, Column::d, Column::U,
                                                      Column::Ustar, Column::Dl};

constexpr std::string_view column_name(Column c) {
    switch (c) {
        case Column::w: return "w";
        case Column::d: return "d";
        case Column::U: return "U";
        case Column::Ustar: return "Ustar";
        case Column::Dl: return "Dl";
    }
    return "?";
}

/// One river observation: channel width and depth [m], mean velocity and
/// shear velocity [m/s], and the measured longitudinal dispersion
/// coefficient [m^2/s]. A missing field is stored as NaN; `Dl` may be
/// missing on prediction-only inputs.
struct Sample {
    static constexpr double kMissing = std::numeric_limits<double>::quiet_NaN();

    double w = kMissing;
    double d = kMissing;
    double U = kMissing;
    double Ustar = kMissing;
    double Dl = kMissing;

    double get(Column c) const {
        switch (c) {
            case Column::w: return w;
            case Column::d: return d;
            case Column::U: return U;
            case Column::Ustar: return Ustar;
            case Column::Dl: return Dl;
        }
        return kMissing;
    }

    void set(Column c, double v) {
        switch (c) {
            case Column::w: w = v; break;
            case Column::d: d = v; break;
            case Column::U: U = v; break;
            case Column::Ustar: Ustar = v; break;
            case Column::Dl: Dl = v; break;
        }
    }

    /// All five fields present, finite and strictly positive.
    bool complete() const {
        for (Column c : kAllColumns) {
            const double v = get(c);
            if (!std::isfinite(v) || v <= 0.0) return false;
        }
        return true;
    }

    /// Exact field-by-field equality; missing matches missing.
    friend bool operator==(const Sample& a, const Sample& b) {
        for (Column c : kAllColumns) {
            const double x = a.get(c), y = b.get(c);
            if (std::isnan(x) != std::isnan(y)) return false;
            if (!std::isnan(x) && x != y) return false;
        }
        return true;
    }
};

/// Extract one column as a flat vector.
inline std::vector<double> column_values(const std::vector<Sample>& samples, Column c) {
    std::vector<double> out;
    out.reserve(samples.size());
    for (const Sample& s : samples) out.push_back(s.get(c));
    return out;
}

}  // namespace esrn
