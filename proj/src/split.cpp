#include "esrn/split.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace esrn {

std::vector<std::array<double, 5>> standardize(const std::vector<Sample>& samples) {
    if (samples.empty()) throw std::invalid_argument("standardize: empty input");
    const std::size_t n = samples.size();
    std::vector<std::array<double, 5>> z(n);

    for (Column c : kAllColumns) {
        const int ci = static_cast<int>(c);
        double mean = 0.0;
        for (const Sample& s : samples) mean += s.get(c);
        mean /= static_cast<double>(n);
        double var = 0.0;
        for (const Sample& s : samples) {
            const double d = s.get(c) - mean;
            var += d * d;
        }
        var /= static_cast<double>(n);
        if (var <= 0.0)
            throw std::invalid_argument(std::string("standardize: constant column '") +
                                        std::string(column_name(c)) + "'");
        const double inv_std = 1.0 / std::sqrt(var);
        for (std::size_t i = 0; i < n; ++i) z[i][ci] = (samples[i].get(c) - mean) * inv_std;
    }
    return z;
}

namespace {

double sq_dist(const std::array<double, 5>& a, const std::array<double, 5>& b) {
    double s = 0.0;
    for (int k = 0; k < 5; ++k) {
        const double d = a[k] - b[k];
        s += d * d;
    }
    return s;
}

}  // namespace

Split ssmd_split(const std::vector<Sample>& samples, double train_fraction,
                 std::uint64_t seed) {
    const std::size_t n = samples.size();
    if (n < 4) throw std::invalid_argument("ssmd_split: need at least 4 samples");
    if (!(train_fraction > 0.0 && train_fraction < 1.0))
        throw std::invalid_argument("ssmd_split: fraction must be in (0,1)");

    const auto z = standardize(samples);

    const std::size_t n_train = std::max<std::size_t>(
        2, std::min<std::size_t>(
               n - 1, static_cast<std::size_t>(
                          std::llround(train_fraction * static_cast<double>(n)))));

    // Seed pair: the two mutually farthest points (lowest indices on ties).
    std::size_t seed_a = 0, seed_b = 1;
    double best = -1.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double d = sq_dist(z[i], z[j]);
            if (d > best) {
                best = d;
                seed_a = i;
                seed_b = j;
            }
        }
    }

    std::vector<bool> in_train(n, false);
    in_train[seed_a] = in_train[seed_b] = true;

    // min squared distance from each point to the current training set
    std::vector<double> min_d(n);
    for (std::size_t i = 0; i < n; ++i)
        min_d[i] = std::min(sq_dist(z[i], z[seed_a]), sq_dist(z[i], z[seed_b]));

    for (std::size_t picked = 2; picked < n_train; ++picked) {
        std::size_t arg = n;
        double far = -1.0;
        for (std::size_t i = 0; i < n; ++i) {
            if (in_train[i]) continue;
            if (min_d[i] > far) {  // strict '>' keeps the lowest index on ties
                far = min_d[i];
                arg = i;
            }
        }
        in_train[arg] = true;
        for (std::size_t i = 0; i < n; ++i)
            if (!in_train[i]) min_d[i] = std::min(min_d[i], sq_dist(z[i], z[arg]));
    }

    Split split;
    split.train_fraction = train_fraction;
    split.seed = seed;
    for (std::size_t i = 0; i < n; ++i) {
        if (in_train[i]) {
            split.train.push_back(samples[i]);
            split.train_indices.push_back(i);
        } else {
            split.test.push_back(samples[i]);
            split.test_indices.push_back(i);
        }
    }
    return split;
}

}  // namespace esrn
