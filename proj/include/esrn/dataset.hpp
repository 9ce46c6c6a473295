#pragma once

#include <set>
#include <vector>

#include "esrn/sample.hpp"
#include "esrn/stats.hpp"

namespace esrn {

/// Drop records with missing, non-finite or non-positive fields, then drop
/// exact duplicates (all five parsed values equal), keeping first
/// occurrences in order. An empty result is allowed.
std::vector<Sample> clean(const std::vector<Sample>& samples);

/// One-pass IQR outlier filter: fences are computed per selected column on
/// the input set and fixed before any removal; a sample is kept iff every
/// selected column's value lies within that column's fences. A second pass
/// over the output may remove further samples (the fences move); this
/// function applies exactly one pass.
std::vector<Sample> filter_outliers(const std::vector<Sample>& samples,
                                    const std::set<Column>& columns);

}  // namespace esrn
