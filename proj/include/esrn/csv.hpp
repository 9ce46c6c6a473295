#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "esrn/sample.hpp"

namespace esrn {

/// Parse the observation CSV: comma-delimited, '.' decimal separator, header
/// row naming columns from {w, d, U, Ustar, Dl} in any order. Dl may be
/// omitted for prediction-only files. Blank cells, "NA" and unparseable
/// numerics are kept as missing fields (the clean pass removes them).
/// Throws std::runtime_error on an empty file, an unknown header name, or a
/// missing required column.
std::vector<Sample> parse_csv(std::istream& in);
std::vector<Sample> parse_csv(const std::string& text);
std::vector<Sample> read_csv_file(const std::string& path);

/// Write samples in the same schema (header w,d,U,Ustar,Dl). Values are
/// round-trip formatted; missing fields become empty cells.
void write_csv(std::ostream& out, const std::vector<Sample>& samples);
void write_csv_file(const std::string& path, const std::vector<Sample>& samples);

/// Round-trip decimal formatting used for all emitted tables, so reruns of
/// identical configs produce byte-identical files.
std::string format_double(double v);

}  // namespace esrn
