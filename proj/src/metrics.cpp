#include "esrn/metrics.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace esrn {

namespace {

void check_lengths(std::span<const double> obs, std::span<const double> pred) {
    if (obs.size() != pred.size() || obs.empty())
        throw std::invalid_argument("metrics: need equally sized, non-empty vectors");
}

double mean_of(std::span<const double> v) {
    return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

}  // namespace

double rmse(std::span<const double> obs, std::span<const double> pred) {
    check_lengths(obs, pred);
    double sse = 0.0;
    for (std::size_t i = 0; i < obs.size(); ++i) {
        const double e = pred[i] - obs[i];
        sse += e * e;
    }
    return std::sqrt(sse / static_cast<double>(obs.size()));
}

double wmape(std::span<const double> obs, std::span<const double> pred) {
    check_lengths(obs, pred);
    double abs_err = 0.0, abs_obs = 0.0;
    for (std::size_t i = 0; i < obs.size(); ++i) {
        abs_err += std::fabs(pred[i] - obs[i]);
        abs_obs += std::fabs(obs[i]);
    }
    if (abs_obs == 0.0) throw std::invalid_argument("wmape: sum|obs| is zero");
    return abs_err / abs_obs;
}

double r2(std::span<const double> obs, std::span<const double> pred) {
    check_lengths(obs, pred);
    const double mean = mean_of(obs);
    double sse = 0.0, sst = 0.0;
    for (std::size_t i = 0; i < obs.size(); ++i) {
        const double e = obs[i] - pred[i];
        const double d = obs[i] - mean;
        sse += e * e;
        sst += d * d;
    }
    if (sst == 0.0)
        return sse == 0.0 ? 1.0 : -std::numeric_limits<double>::infinity();
    return 1.0 - sse / sst;
}

double dr(double obs, double pred) {
    if (!(obs > 0.0) || !(pred > 0.0)) return std::numeric_limits<double>::quiet_NaN();
    return std::log10(pred / obs);
}

TaylorStats taylor_stats(std::span<const double> obs, std::span<const double> pred) {
    check_lengths(obs, pred);
    const double mo = mean_of(obs);
    const double mp = mean_of(pred);
    double so2 = 0.0, sp2 = 0.0, cov = 0.0, crms2 = 0.0;
    const double n = static_cast<double>(obs.size());
    for (std::size_t i = 0; i < obs.size(); ++i) {
        const double od = obs[i] - mo;
        const double pd = pred[i] - mp;
        so2 += od * od;
        sp2 += pd * pd;
        cov += od * pd;
        const double c = pd - od;
        crms2 += c * c;
    }
    TaylorStats t;
    t.obs_std = std::sqrt(so2 / n);
    t.pred_std = std::sqrt(sp2 / n);
    t.centered_rms = std::sqrt(crms2 / n);
    t.correlation = (so2 > 0.0 && sp2 > 0.0) ? cov / std::sqrt(so2 * sp2) : 0.0;
    return t;
}

EvalReport evaluate_pairs(std::span<const double> obs, std::span<const double> pred) {
    check_lengths(obs, pred);
    EvalReport report;
    report.n_samples = obs.size();
    report.rmse = rmse(obs, pred);
    report.wmape = wmape(obs, pred);
    report.r2 = r2(obs, pred);
    report.taylor = taylor_stats(obs, pred);

    std::size_t in_band = 0, defined = 0;
    for (std::size_t i = 0; i < obs.size(); ++i) {
        const double r = dr(obs[i], pred[i]);
        if (std::isnan(r)) {
            ++report.n_dr_excluded;
            continue;
        }
        ++defined;
        if (r <= -0.3)
            report.dr_bins[0] += 1.0;
        else if (r <= 0.0)
            report.dr_bins[1] += 1.0;
        else if (r <= 0.3)
            report.dr_bins[2] += 1.0;
        else
            report.dr_bins[3] += 1.0;
        if (r > -0.3 && r < 0.3) ++in_band;
    }
    if (defined > 0) {
        for (double& b : report.dr_bins) b /= static_cast<double>(defined);
        report.accuracy_pct =
            100.0 * static_cast<double>(in_band) / static_cast<double>(defined);
    }
    return report;
}

EvalReport evaluate(const Predictor& predictor, const std::vector<Sample>& samples) {
    std::vector<double> obs, pred;
    obs.reserve(samples.size());
    pred.reserve(samples.size());
    for (const Sample& s : samples) {
        obs.push_back(s.Dl);
        pred.push_back(predictor(s));
    }
    return evaluate_pairs(obs, pred);
}

}  // namespace esrn
