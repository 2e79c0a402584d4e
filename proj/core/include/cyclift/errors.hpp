#pragma once

#include <stdexcept>
#include <string>

namespace cyclift {

// Input text could not be parsed (alist / D-matrix / catalog files).
// line is 1-based; 0 means the error is not tied to a specific line.
class parse_error : public std::runtime_error {
public:
    parse_error(std::string msg, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
          line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

// Structurally invalid arguments: support mismatch, out-of-range index,
// non-alternating path, and the like.
class validation_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An explicit work cap was exceeded (cycle enumeration cap, pattern-count cap).
class budget_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace cyclift
