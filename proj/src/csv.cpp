#include "eca/csv.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <stdexcept>

#include "eca/errors.hpp"

namespace eca {

namespace {

std::vector<std::string> split_cells(const std::string& line) {
    std::vector<std::string> cells;
    std::size_t begin = 0;
    while (true) {
        const std::size_t comma = line.find(',', begin);
        if (comma == std::string::npos) {
            cells.push_back(line.substr(begin));
            break;
        }
        cells.push_back(line.substr(begin, comma - begin));
        begin = comma + 1;
    }
    return cells;
}

double parse_cell(const std::string& cell, long row, long col) {
    const char* s = cell.c_str();
    char* end = nullptr;
    const double v = std::strtod(s, &end);
    // Require full consumption apart from surrounding blanks.
    while (end && (*end == ' ' || *end == '\t')) ++end;
    const char* p = s;
    while (*p == ' ' || *p == '\t') ++p;
    if (end == p || (end && *end != '\0')) {
        throw CsvParseError("cell '" + cell + "' at row " + std::to_string(row) + ", column " +
                                std::to_string(col) + " is not a number",
                            row, col);
    }
    return v;
}

}  // namespace

CsvTable load_csv(const std::string& path, bool has_header) {
    std::ifstream in(path);
    if (!in) {
        throw CsvParseError("cannot open '" + path + "' for reading", 0, 0);
    }
    CsvTable table;
    std::vector<std::vector<double>> rows;
    std::string line;
    long row_no = 0;
    long width = -1;
    while (std::getline(in, line)) {
        ++row_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) {
            // Tolerate a trailing blank line only.
            if (in.peek() == EOF) break;
            throw CsvParseError("row " + std::to_string(row_no) + " is empty", row_no, 1);
        }
        const std::vector<std::string> cells = split_cells(line);
        if (width < 0) {
            width = static_cast<long>(cells.size());
        } else if (static_cast<long>(cells.size()) != width) {
            throw CsvParseError("row " + std::to_string(row_no) + " has " +
                                    std::to_string(cells.size()) + " cells, expected " +
                                    std::to_string(width),
                                row_no, static_cast<long>(cells.size()));
        }
        if (row_no == 1 && has_header) {
            table.column_names = cells;
            continue;
        }
        std::vector<double> parsed(cells.size());
        for (std::size_t c = 0; c < cells.size(); ++c) {
            parsed[c] = parse_cell(cells[c], row_no, static_cast<long>(c + 1));
        }
        rows.push_back(std::move(parsed));
    }
    if (rows.empty()) {
        throw CsvParseError("'" + path + "' contains no data rows", row_no, 1);
    }
    table.values.resize(static_cast<Index>(rows.size()), static_cast<Index>(width));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (long c = 0; c < width; ++c) {
            table.values(static_cast<Index>(r), c) = rows[r][static_cast<std::size_t>(c)];
        }
    }
    return table;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_csv(const std::string& path, const std::vector<std::string>& names,
               const Matrix& values) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("write_csv: cannot open '" + path + "' for writing");
    }
    if (!names.empty()) {
        if (static_cast<Index>(names.size()) != values.cols()) {
            throw std::invalid_argument("write_csv: header width does not match the matrix");
        }
        for (std::size_t j = 0; j < names.size(); ++j) {
            if (j) out << ',';
            out << names[j];
        }
        out << '\n';
    }
    for (Index i = 0; i < values.rows(); ++i) {
        for (Index j = 0; j < values.cols(); ++j) {
            if (j) out << ',';
            out << format_double(values(i, j));
        }
        out << '\n';
    }
    if (!out) {
        throw std::runtime_error("write_csv: failed while writing '" + path + "'");
    }
}

}  // namespace eca
