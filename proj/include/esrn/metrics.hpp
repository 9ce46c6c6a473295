#pragma once

#include <array>
#include <functional>
#include <span>
#include <vector>

#include "esrn/sample.hpp"

namespace esrn {

double rmse(std::span<const double> obs, std::span<const double> pred);

/// Sum-weighted absolute percentage error: sum|pred-obs| / sum|obs|.
/// Throws std::invalid_argument when sum|obs| is zero.
double wmape(std::span<const double> obs, std::span<const double> pred);

/// 1 - SSE/SST. A constant observation vector (SST = 0) yields 1 for a
/// perfect prediction and -infinity otherwise.
double r2(std::span<const double> obs, std::span<const double> pred);

/// Discrepancy ratio log10(pred/obs); NaN when either side is not strictly
/// positive (callers exclude and flag such pairs).
double dr(double obs, double pred);

/// Standard-deviation/correlation/centered-RMS summary behind a Taylor
/// diagram (population convention, so the law of cosines
/// crms^2 = s_p^2 + s_o^2 - 2 s_p s_o rho holds exactly).
struct TaylorStats {
    double pred_std = 0.0;
    double obs_std = 0.0;
    double correlation = 0.0;
    double centered_rms = 0.0;
};
TaylorStats taylor_stats(std::span<const double> obs, std::span<const double> pred);

struct EvalReport {
    double rmse = 0.0;
    double wmape = 0.0;
    double r2 = 0.0;
    /// Fractions over pairs with a defined DR, bin edges as printed:
    /// (-inf,-0.3], (-0.3,0], (0,0.3], (0.3,inf).
    std::array<double, 4> dr_bins{};
    /// Percent with -0.3 < dr < 0.3 (open band; differs from the two middle
    /// bins by the boundary points, so both are reported).
    double accuracy_pct = 0.0;
    std::size_t n_samples = 0;
    std::size_t n_dr_excluded = 0;  // non-positive obs or pred
    TaylorStats taylor;
};

using Predictor = std::function<double(const Sample&)>;

/// All metrics of a predictor against the samples' measured Dl.
EvalReport evaluate(const Predictor& predictor, const std::vector<Sample>& samples);
EvalReport evaluate_pairs(std::span<const double> obs, std::span<const double> pred);

}  // namespace esrn
