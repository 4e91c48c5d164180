#pragma once

#include <stdexcept>
#include <string>

namespace surfcalc {

struct SingularMatrix : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateChart : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct VanishingGradient : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvertedBounds : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InterfaceEscapesVolume : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CFLViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InterfaceLeavesDomain : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZeroJump : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MissingExtension : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An internal cross-check (two routes to the same quantity) failed.
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnknownCatalogEntry : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigParse : std::runtime_error {
    ConfigParse(const std::string& msg, int line_no)
        : std::runtime_error(msg + " (line " + std::to_string(line_no) + ")"), line(line_no) {}
    int line;
};

}  // namespace surfcalc
