#include "csv.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace scenval::cli {

std::string format_double(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) {
        std::size_t begin = 0;
        std::size_t end = field.size();
        while (begin < end && std::isspace(static_cast<unsigned char>(field[begin]))) {
            ++begin;
        }
        while (end > begin && std::isspace(static_cast<unsigned char>(field[end - 1]))) {
            --end;
        }
        fields.push_back(field.substr(begin, end - begin));
    }
    if (!line.empty() && line.back() == ',') {
        fields.emplace_back();
    }
    return fields;
}

namespace {

bool parse_field(const std::string& field, double& out) {
    if (field.empty()) {
        return false;
    }
    const char* begin = field.c_str();
    char* end = nullptr;
    out = std::strtod(begin, &end);
    return end == begin + field.size();
}

}  // namespace

PointSet read_point_set_csv(const std::string& path, SourceLabel label) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open '" + path + "' for reading");
    }

    std::vector<std::vector<double>> rows;
    std::string line;
    std::size_t line_no = 0;
    bool first_data_line = true;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty() || line.front() == '#') {
            continue;
        }
        const auto fields = split_csv_line(line);
        std::vector<double> row(fields.size());
        bool numeric = true;
        for (std::size_t c = 0; c < fields.size(); ++c) {
            if (!parse_field(fields[c], row[c])) {
                numeric = false;
                break;
            }
        }
        if (!numeric) {
            if (first_data_line) {
                first_data_line = false;  // header row, skip it
                continue;
            }
            throw CsvParseError(path + ":" + std::to_string(line_no) +
                                ": non-numeric value in a data row");
        }
        first_data_line = false;
        if (!rows.empty() && row.size() != rows.front().size()) {
            throw CsvParseError(path + ":" + std::to_string(line_no) + ": row has " +
                                std::to_string(row.size()) + " columns, expected " +
                                std::to_string(rows.front().size()));
        }
        rows.push_back(std::move(row));
    }
    if (in.bad()) {
        throw IoError("I/O error while reading '" + path + "'");
    }
    // Re-raise construction failures with the file named, keeping their
    // type so the exit-code mapping stays a validation error.
    try {
        return PointSet::from_rows(rows, label);
    } catch (const NonFinite& e) {
        throw NonFinite(path + ": " + e.what());
    } catch (const TooSmall& e) {
        throw TooSmall(path + ": " + e.what());
    } catch (const DimensionMismatch& e) {
        throw DimensionMismatch(path + ": " + e.what());
    }
}

void write_point_set_csv(const std::string& path, const PointSet& points) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto p = points.point(i);
        for (std::size_t c = 0; c < p.size(); ++c) {
            if (c > 0) {
                out << ',';
            }
            out << format_double(p[c]);
        }
        out << '\n';
    }
    if (!out) {
        throw IoError("I/O error while writing '" + path + "'");
    }
}

}  // namespace scenval::cli
