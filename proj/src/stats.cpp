#include "esrn/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace esrn {

namespace {

double median_sorted(std::span<const double> sorted) {
    const std::size_t n = sorted.size();
    if (n == 0) throw std::invalid_argument("median: empty input");
    if (n % 2 == 1) return sorted[n / 2];
    return 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
}

std::vector<double> sorted_copy(std::span<const double> values) {
    std::vector<double> v(values.begin(), values.end());
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

double median(std::span<const double> values) {
    return median_sorted(sorted_copy(values));
}

Quartiles quartiles(std::span<const double> values) {
    if (values.empty()) throw std::invalid_argument("quartiles: empty input");
    const std::vector<double> v = sorted_copy(values);
    const std::size_t half = v.size() / 2;
    if (half == 0) return {v[0], v[0]};
    Quartiles q;
    q.q1 = median_sorted(std::span(v).first(half));
    q.q3 = median_sorted(std::span(v).last(half));
    return q;
}

Fences iqr_fences(std::span<const double> values) {
    const Quartiles q = quartiles(values);
    const double iqr = q.iqr();
    return {q.q1 - 1.5 * iqr, q.q3 + 1.5 * iqr};
}

ColumnStats column_stats(std::span<const double> values) {
    if (values.empty()) throw std::invalid_argument("column_stats: empty input");
    const std::vector<double> v = sorted_copy(values);
    const std::size_t n = v.size();

    ColumnStats s;
    s.count = n;
    s.min = v.front();
    s.max = v.back();
    s.median = median_sorted(v);
    s.iqr = quartiles(v).iqr();

    const double mean = std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(n);
    double m2 = 0.0, m3 = 0.0, m4 = 0.0;
    for (double x : v) {
        const double d = x - mean;
        m2 += d * d;
        m3 += d * d * d;
        m4 += d * d * d * d;
    }
    m2 /= static_cast<double>(n);
    m3 /= static_cast<double>(n);
    m4 /= static_cast<double>(n);

    s.variance = n > 1 ? m2 * static_cast<double>(n) / static_cast<double>(n - 1) : 0.0;
    s.std_dev = std::sqrt(s.variance);

    if (m2 > 0.0) {
        s.skewness = m3 / std::pow(m2, 1.5);
        s.kurtosis = m4 / (m2 * m2) - 3.0;
    } else {
        s.degenerate = true;  // constant column: moments undefined, report 0
    }

    std::vector<double> dev(n);
    for (std::size_t i = 0; i < n; ++i) dev[i] = std::fabs(v[i] - s.median);
    s.mad = median(dev);
    return s;
}

DatasetStats summarize(const std::vector<Sample>& samples) {
    if (samples.empty()) throw std::invalid_argument("summarize: empty dataset");
    DatasetStats stats;
    for (Column c : kAllColumns)
        stats.columns[static_cast<int>(c)] = column_stats(column_values(samples, c));
    return stats;
}

std::vector<double> average_ranks(std::span<const double> values) {
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

    std::vector<double> ranks(n, 0.0);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
        const double shared = 0.5 * static_cast<double>(i + j) + 1.0;  // mean of 1-based ranks
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = shared;
        i = j + 1;
    }
    return ranks;
}

namespace {

double pearson(std::span<const double> x, std::span<const double> y) {
    const std::size_t n = x.size();
    const double mx = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(n);
    const double my = std::accumulate(y.begin(), y.end(), 0.0) / static_cast<double>(n);
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = x[i] - mx, dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0) return 0.0;
    return sxy / std::sqrt(sxx * syy);
}

}  // namespace

SpearmanMatrix spearman_matrix(const std::vector<Sample>& samples) {
    if (samples.size() < 3)
        throw std::invalid_argument("spearman_matrix: need at least 3 samples");

    std::array<std::vector<double>, 5> ranks;
    SpearmanMatrix m;
    for (Column c : kAllColumns) {
        const std::vector<double> col = column_values(samples, c);
        const auto [lo, hi] = std::minmax_element(col.begin(), col.end());
        m.degenerate_column[static_cast<int>(c)] = (*lo == *hi);
        ranks[static_cast<int>(c)] = average_ranks(col);
    }
    for (int i = 0; i < 5; ++i) {
        m.rho[i][i] = 1.0;
        for (int j = i + 1; j < 5; ++j) {
            const double r = (m.degenerate_column[i] || m.degenerate_column[j])
                                 ? 0.0
                                 : pearson(ranks[i], ranks[j]);
            m.rho[i][j] = r;
            m.rho[j][i] = r;
        }
    }
    return m;
}

}  // namespace esrn
