#pragma once

#include <stdexcept>
#include <string>

namespace hadstar {

/// Base class for all toolkit errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed user input (bad JSON, bad rational literal, wrong shape).
/// Messages carry the offending location when one is known.
struct InputError : Error {
    using Error::Error;
};

/// A mathematically degenerate configuration that the requested operation
/// does not accept (coincident points, identically-zero product, ...).
struct DegenerateError : Error {
    using Error::Error;
};

/// A configured resource cap was exceeded (Groebner step limit,
/// implicitization degree cap, sampler retry bound).  Never downgraded to a
/// truncated result: callers either raise the cap or treat it as failure.
struct LimitError : Error {
    using Error::Error;
};

/// An internal invariant failed.  Reaching this is a bug in the toolkit.
struct InternalError : Error {
    using Error::Error;
};

/// Center-based quadric reconstruction can fail in two distinct ways that
/// callers need to tell apart.
struct ReconstructError : Error {
    enum class Kind {
        Inconsistent,  ///< kernel dimension 0: no quadric fits the centers
        Degenerate,    ///< kernel dimension >= 2: centers underdetermine it
    };
    Kind kind;
    ReconstructError(Kind k, const std::string& msg) : Error(msg), kind(k) {}
};

}  // namespace hadstar
