#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "esrn/sample.hpp"

namespace esrn {

/// Training/testing partition produced by maximum-dissimilarity selection.
/// Selection starts from the two mutually farthest points and greedily adds
/// the point with the largest minimum distance to the chosen set, so for
/// representative data every feature's training range contains the testing
/// range.
struct Split {
    std::vector<Sample> train;
    std::vector<Sample> test;
    std::vector<std::size_t> train_indices;  // positions in the input order
    std::vector<std::size_t> test_indices;
    double train_fraction = 0.0;
    std::uint64_t seed = 0;
};

/// Column-wise z-scores (population std). Result is row-major, one row of
/// five entries per sample. Throws std::invalid_argument on a constant
/// column or empty input.
std::vector<std::array<double, 5>> standardize(const std::vector<Sample>& samples);

/// Maximum-dissimilarity (Kennard-Stone) split on standardized features of
/// all five columns, Euclidean distance. |train| = round(fraction * n),
/// clamped to [2, n-1] so the seed pair and a non-empty test set exist.
/// Deterministic: exact distance ties break toward the lowest original row
/// index; the seed is recorded for the manifest and reserved for any
/// residual tie. Requires n >= 4 and 0 < fraction < 1.
Split ssmd_split(const std::vector<Sample>& samples, double train_fraction,
                 std::uint64_t seed);

}  // namespace esrn
