#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace capcheck {

// Base for every error the library raises.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input violates a type invariant (non-increasing timestamps, bad ranges, ...).
class InvalidInput : public Error {
public:
    using Error::Error;
};

// Fewer than two points remain once the series is restricted to the x range.
class EmptyChart : public Error {
public:
    EmptyChart() : Error("empty chart: fewer than 2 points inside the x range") {}
};

// i >= j passed where an ordered vertex range is required.
class InvalidRange : public Error {
public:
    using Error::Error;
};

// Malformed CSV/JSON input. row and column are 1-based; 0 means "not applicable".
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t row = 0, std::size_t column = 0)
        : Error(locate(what, row, column)), row_(row), column_(column) {}

    std::size_t row() const noexcept { return row_; }
    std::size_t column() const noexcept { return column_; }

private:
    static std::string locate(const std::string& what, std::size_t row, std::size_t column) {
        if (row == 0) return what;
        std::string out = "row " + std::to_string(row);
        if (column != 0) out += ", column " + std::to_string(column);
        return out + ": " + what;
    }

    std::size_t row_;
    std::size_t column_;
};

} // namespace capcheck
