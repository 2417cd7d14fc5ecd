#pragma once

#include <string>
#include <vector>

#include "eca/types.hpp"

namespace eca {

struct CsvTable {
    std::vector<std::string> column_names;  // empty when the file has no header
    Matrix values;                          // rows = records
};

// Strict numeric CSV reader.  Every row must have the same cell count;
// every cell must parse fully as a double.  Errors carry 1-based file
// coordinates (the header, when present, is row 1).
CsvTable load_csv(const std::string& path, bool has_header);

// One double, 17 significant digits (round-trip exact), C locale.
std::string format_double(double v);

// Writes `names` (when non-empty) and then the matrix, one record per row.
void write_csv(const std::string& path, const std::vector<std::string>& names,
               const Matrix& values);

}  // namespace eca
