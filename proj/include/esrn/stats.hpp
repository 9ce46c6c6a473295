#pragma once

#include <array>
#include <span>
#include <vector>

#include "esrn/sample.hpp"

namespace esrn {

/// Median of a non-empty sequence (middle element, or the mean of the two
/// middle elements). Throws std::invalid_argument on empty input.
double median(std::span<const double> values);

/// Quartiles by the split-halves rule: for a sorted set of 2n or 2n+1
/// values, Q1 is the median of the n smallest and Q3 the median of the n
/// largest; for odd sizes the overall median belongs to neither half
/// (Moore-McCabe). A single value is its own Q1 and Q3.
struct Quartiles {
    double q1 = 0.0;
    double q3 = 0.0;
    double iqr() const { return q3 - q1; }
};
Quartiles quartiles(std::span<const double> values);

/// Tukey fences [Q1 - 1.5*IQR, Q3 + 1.5*IQR] on the split-halves quartiles.
struct Fences {
    double lo = 0.0;
    double hi = 0.0;
    bool contains(double v) const { return v >= lo && v <= hi; }
};
Fences iqr_fences(std::span<const double> values);

/// Per-column descriptive statistics of a dataset.
struct ColumnStats {
    std::size_t count = 0;
    double min = 0.0;
    double median = 0.0;
    double max = 0.0;
    double iqr = 0.0;
    double std_dev = 0.0;   // sample (n-1)
    double variance = 0.0;  // std_dev^2
    double kurtosis = 0.0;  // excess, moment estimator
    double mad = 0.0;       // median absolute deviation from the median
    double skewness = 0.0;  // moment estimator
    bool degenerate = false;  // constant column: skewness/kurtosis set to 0
};

struct DatasetStats {
    std::array<ColumnStats, 5> columns;  // indexed by Column
    const ColumnStats& of(Column c) const { return columns[static_cast<int>(c)]; }
};

ColumnStats column_stats(std::span<const double> values);

/// All Table-style metrics for every column. Requires complete samples.
/// Throws std::invalid_argument on empty input.
DatasetStats summarize(const std::vector<Sample>& samples);

/// Spearman rank correlation matrix over the five columns. Ties receive
/// average ranks. A constant column has undefined correlation; those
/// entries are reported as 0 and flagged. Requires >= 3 samples.
struct SpearmanMatrix {
    std::array<std::array<double, 5>, 5> rho{};
    std::array<bool, 5> degenerate_column{};  // constant column flag
};
SpearmanMatrix spearman_matrix(const std::vector<Sample>& samples);

/// Average ranks of a sequence (1-based; ties share the mean rank).
std::vector<double> average_ranks(std::span<const double> values);

}  // namespace esrn
