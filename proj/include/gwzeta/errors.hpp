#pragma once

#include <stdexcept>
#include <string>

namespace gwzeta {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Variety-spec / input validation failures (CLI exit code 2).
struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

// Point counts that cannot come from a variety, mismatched data files (exit 3).
struct InconsistentData : Error {
    explicit InconsistentData(const std::string& msg) : Error(msg) {}
};

// Operation requested on a source that does not support it (exit 4).
struct MissingCapability : Error {
    explicit MissingCapability(const std::string& msg) : Error(msg) {}
};

// Rational-form reconstruction failures (exit 5).
struct FitError : Error {
    explicit FitError(const std::string& msg) : Error(msg) {}
};

}  // namespace gwzeta
