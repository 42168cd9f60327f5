#pragma once

#include <cstdint>
#include <stdexcept>

namespace sar {

// Cell index into a row-major grid; valid ids are [0, width*height).
using VertexId = std::int32_t;

// Position marker for a target that has drifted off the mapped grid.
inline constexpr VertexId kOutside = -1;

// Absolute tolerance for probability-level comparisons.
inline constexpr double kProbTol = 1e-9;

// Tighter tolerance for mass-conservation bookkeeping.
inline constexpr double kMassTol = 1e-12;

// Bad arguments or malformed input. CLI exit code 2.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A model was queried outside its defined range (e.g. motion at an
// undefined time step).
struct ConfigError : InputError {
    using InputError::InputError;
};

// The scenario admits no solution path. CLI exit code 1.
struct InfeasibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Filesystem failures.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace sar
