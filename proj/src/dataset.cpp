#include "esrn/dataset.hpp"

#include <algorithm>

namespace esrn {

std::vector<Sample> clean(const std::vector<Sample>& samples) {
    std::vector<Sample> out;
    out.reserve(samples.size());
    for (const Sample& s : samples) {
        if (!s.complete()) continue;
        const bool seen = std::any_of(out.begin(), out.end(),
                                      [&](const Sample& t) { return t == s; });
        if (!seen) out.push_back(s);
    }
    return out;
}

std::vector<Sample> filter_outliers(const std::vector<Sample>& samples,
                                    const std::set<Column>& columns) {
    if (samples.empty() || columns.empty()) return samples;

    std::vector<std::pair<Column, Fences>> fences;
    fences.reserve(columns.size());
    for (Column c : columns) fences.emplace_back(c, iqr_fences(column_values(samples, c)));

    std::vector<Sample> out;
    out.reserve(samples.size());
    for (const Sample& s : samples) {
        const bool keep = std::all_of(fences.begin(), fences.end(), [&](const auto& f) {
            return f.second.contains(s.get(f.first));
        });
        if (keep) out.push_back(s);
    }
    return out;
}

}  // namespace esrn
