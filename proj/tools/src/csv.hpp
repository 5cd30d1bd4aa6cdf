#pragma once

#include <string>
#include <vector>

#include "scenval/errors.hpp"
#include "scenval/point_set.hpp"

namespace scenval::cli {

/// File could not be opened, read or written.
class IoError : public Error {
public:
    using Error::Error;
};

/// Malformed CSV content; the message names the file and row.
class CsvParseError : public Error {
public:
    using Error::Error;
};

/// Reads a point set from CSV: one point per row, comma separated, '.'
/// decimal separator. A non-numeric first row is treated as a header;
/// lines starting with '#' are skipped.
PointSet read_point_set_csv(const std::string& path, SourceLabel label);

/// Writes a point set as plain CSV rows with 17 significant digits, which
/// round-trips doubles losslessly.
void write_point_set_csv(const std::string& path, const PointSet& points);

/// Shortest lossless text form of a double (17 significant digits).
std::string format_double(double value);

/// Splits one CSV line on commas and trims surrounding blanks.
std::vector<std::string> split_csv_line(const std::string& line);

}  // namespace scenval::cli
