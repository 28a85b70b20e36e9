// Error types shared across the toolkit. Each maps to one failure mode of the
// public API; the CLI translates them to exit code 2 (usage / bad input).
#pragma once

#include <stdexcept>
#include <string>

namespace qnl {

struct InvalidDims : std::invalid_argument {
    explicit InvalidDims(const std::string& what) : std::invalid_argument("InvalidDims: " + what) {}
};

struct NotHermitian : std::invalid_argument {
    explicit NotHermitian(const std::string& what) : std::invalid_argument("NotHermitian: " + what) {}
};

struct TooLarge : std::invalid_argument {
    explicit TooLarge(const std::string& what) : std::invalid_argument("TooLarge: " + what) {}
};

struct ScenarioMismatch : std::invalid_argument {
    explicit ScenarioMismatch(const std::string& what) : std::invalid_argument("ScenarioMismatch: " + what) {}
};

struct Unsupported : std::invalid_argument {
    explicit Unsupported(const std::string& what) : std::invalid_argument("Unsupported: " + what) {}
};

struct DegenerateState : std::invalid_argument {
    explicit DegenerateState(const std::string& what) : std::invalid_argument("DegenerateState: " + what) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error("ParseError: " + what) {}
};

} // namespace qnl
