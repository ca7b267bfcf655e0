#pragma once

#include <stdexcept>
#include <string>

namespace lrc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionError : Error {
    using Error::Error;
};

struct CommutationError : Error {
    using Error::Error;
};

struct RingError : Error {
    using Error::Error;
};

// Carries 1-based line/column of the offending token.
struct ParseError : Error {
    int line;
    int column;
    ParseError(const std::string& msg, int line_, int column_)
        : Error(msg + " (line " + std::to_string(line_) + ", column " + std::to_string(column_) + ")"),
          line(line_),
          column(column_) {}
};

struct IoError : Error {
    using Error::Error;
};

struct CollisionError : Error {
    using Error::Error;
};

struct ImproperColoringError : Error {
    using Error::Error;
};

struct ColoringError : Error {
    using Error::Error;
};

struct EstimatorError : Error {
    using Error::Error;
};

struct InconsistentSyndrome : Error {
    using Error::Error;
};

struct BasisError : Error {
    using Error::Error;
};

}  // namespace lrc
