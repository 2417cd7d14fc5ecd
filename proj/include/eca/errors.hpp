#pragma once

#include <stdexcept>
#include <string>

namespace eca {

// Input data is degenerate in a way the estimator cannot work around
// (duplicate observation pairs under the Error policy, zero-variance
// columns, empty datasets after filtering, ...).
class DegenerateDataError : public std::runtime_error {
public:
    explicit DegenerateDataError(const std::string& what)
        : std::runtime_error(what) {}
};

// A combinatorial search was asked to enumerate more subsets than its budget
// allows.  The message names the offending count so callers can decide
// whether to raise the budget or switch to the iterative solver.
class CombinatorialBudgetError : public std::runtime_error {
public:
    explicit CombinatorialBudgetError(const std::string& what)
        : std::runtime_error(what) {}
};

// Numerical failure inside an iterative routine: non-finite iterates, a dead
// power iterate, a root finder that failed to bracket, and the like.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& what)
        : std::runtime_error(what) {}
};

// Malformed tabular input.  Row/column are 1-based and refer to the file as
// read (header line included), so messages can be pasted into an editor.
class CsvParseError : public std::runtime_error {
public:
    CsvParseError(const std::string& what, long row, long col)
        : std::runtime_error(what), row(row), col(col) {}
    long row;
    long col;
};

}  // namespace eca
