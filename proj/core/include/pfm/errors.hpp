#pragma once

#include <stdexcept>
#include <string>

namespace pfm {

// Input parsing failure; line is 1-based within the offending stream.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, int line)
        : std::runtime_error(what + " (line " + std::to_string(line) + ")"), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

// A search exceeded its configured budget. Never stands for a wrong answer.
class budget_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A proven bound or internal consistency check failed: a bug, not bad input.
class invariant_violation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace pfm
