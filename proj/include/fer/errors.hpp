#pragma once

#include <stdexcept>
#include <string>

namespace fer {

// Error taxonomy. The CLI maps each kind to a distinct exit code, so new
// failure modes must either reuse an existing kind or extend the mapping.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Shape mismatches: a class used with a surface of different rank, wrong
// vector lengths, malformed configurations.
struct StructuralError : Error {
    using Error::Error;
};

// A mathematical invariant failed (parity of D^2 + K.D, a cross-checked
// identity, ...). Signals a bug or corrupted input, never a user error.
struct InvariantError : Error {
    using Error::Error;
};

// Bad argument values (negative multiplicity, non-ample polarization, ...).
struct ArgumentError : Error {
    using Error::Error;
};

// The request falls outside the range a method is valid in (anticanonical
// range, closed-form hypotheses, scanner grid caps). Callers may fall back.
struct UnsupportedRangeError : Error {
    using Error::Error;
};

// Enumeration bounds could not be derived or are demonstrably insufficient.
struct BoundsError : Error {
    using Error::Error;
};

} // namespace fer
