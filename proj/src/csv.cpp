#include "esrn/csv.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace esrn {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur.push_back(ch);
        }
    }
    fields.push_back(cur);
    return fields;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

double parse_cell(const std::string& raw) {
    const std::string cell = trim(raw);
    if (cell.empty() || cell == "NA" || cell == "na" || cell == "NaN" || cell == "nan")
        return Sample::kMissing;
    const char* first = cell.data();
    const char* last = cell.data() + cell.size();
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) return Sample::kMissing;
    return value;
}

}  // namespace

std::vector<Sample> parse_csv(std::istream& in) {
    std::string line;
    // Header
    if (!std::getline(in, line)) throw std::runtime_error("csv: empty file");
    // Strip a UTF-8 BOM if present.
    if (line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0) line.erase(0, 3);

    const std::vector<std::string> header = split_fields(line);
    std::array<int, 5> col_index;  // position of each Column in the row, -1 if absent
    col_index.fill(-1);
    for (std::size_t i = 0; i < header.size(); ++i) {
        const std::string name = trim(header[i]);
        bool known = false;
        for (Column c : kAllColumns) {
            if (name == column_name(c)) {
                if (col_index[static_cast<int>(c)] != -1)
                    throw std::runtime_error("csv: duplicate header column '" + name + "'");
                col_index[static_cast<int>(c)] = static_cast<int>(i);
                known = true;
                break;
            }
        }
        if (!known) throw std::runtime_error("csv: unknown header column '" + name + "'");
    }
    for (Column c : {Column::w, Column::d, Column::U, Column::Ustar}) {
        if (col_index[static_cast<int>(c)] == -1)
            throw std::runtime_error(std::string("csv: missing required header column '") +
                                     std::string(column_name(c)) + "'");
    }

    std::vector<Sample> samples;
    while (std::getline(in, line)) {
        if (trim(line).empty()) continue;
        const std::vector<std::string> fields = split_fields(line);
        Sample s;
        for (Column c : kAllColumns) {
            const int idx = col_index[static_cast<int>(c)];
            if (idx >= 0 && idx < static_cast<int>(fields.size()))
                s.set(c, parse_cell(fields[idx]));
        }
        samples.push_back(s);
    }
    if (samples.empty()) throw std::runtime_error("csv: no data rows");
    return samples;
}

std::vector<Sample> parse_csv(const std::string& text) {
    std::istringstream in(text);
    return parse_csv(in);
}

std::vector<Sample> read_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("csv: cannot open '" + path + "'");
    return parse_csv(in);
}

std::string format_double(double v) {
    // Shortest representation that parses back to the same double.
    std::array<char, 32> buf;
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    if (ec != std::errc{}) return "nan";
    return std::string(buf.data(), ptr);
}

void write_csv(std::ostream& out, const std::vector<Sample>& samples) {
    out << "w,d,U,Ustar,Dl\n";
    for (const Sample& s : samples) {
        bool first = true;
        for (Column c : kAllColumns) {
            if (!first) out << ',';
            first = false;
            const double v = s.get(c);
            if (std::isfinite(v)) out << format_double(v);
        }
        out << '\n';
    }
}

void write_csv_file(const std::string& path, const std::vector<Sample>& samples) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("csv: cannot write '" + path + "'");
    write_csv(out, samples);
}

}  // namespace esrn
