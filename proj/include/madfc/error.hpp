#pragma once

#include <stdexcept>
#include <string>

namespace madfc {

// Base class for every error thrown by this library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Value outside a transform's domain: non-positive or non-finite fold change,
// non-finite coordinate, or a coordinate in a gap the transform never reaches.
class domain_error : public error {
public:
    using error::error;
};

// Input falls in the contraction transform's undefined region [-1, 1).
class undefined_region_error : public domain_error {
public:
    using domain_error::domain_error;
};

// Malformed delimited input. Row and column are 1-based; 0 means the error is
// not tied to a single cell.
class parse_error : public error {
public:
    parse_error(const std::string& message, int row = 0, int column = 0)
        : error(locate(message, row, column)), row_(row), column_(column) {}

    int row() const { return row_; }
    int column() const { return column_; }

private:
    static std::string locate(const std::string& message, int row, int column) {
        if (row <= 0)
            return message;
        std::string where = "row " + std::to_string(row);
        if (column > 0)
            where += ", column " + std::to_string(column);
        return where + ": " + message;
    }

    int row_ = 0;
    int column_ = 0;
};

// Dataset too small or too degenerate for the requested statistic.
class degenerate_input_error : public error {
public:
    using error::error;
};

// Chart cannot be produced from the given data/spec combination.
class render_error : public error {
public:
    using error::error;
};

}  // namespace madfc
