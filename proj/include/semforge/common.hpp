#pragma once

#include <stdexcept>
#include <string>

namespace semforge {

inline constexpr const char* kVersion = "0.1.0";

// Bad inputs: dimension mismatches, violated disjointness, unknown names.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// File-level failures; line/col are 1-based, 0 when not applicable.
class IoError : public std::runtime_error {
public:
    IoError(const std::string& msg, int line = 0, int col = 0)
        : std::runtime_error(msg), line_(line), col_(col) {}
    int line() const { return line_; }
    int col() const { return col_; }

private:
    int line_;
    int col_;
};

// Numeric degeneracies: zero design, rank deficiency where full rank is required.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace semforge
