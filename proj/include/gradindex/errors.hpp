// Exception types shared across the library.  Each maps to a documented
// failure mode of the analysis pipeline; the CLI translates them to exit
// codes (parse errors: 2, non-isolated critical locus: 3, identity
// violations: 4).
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gradindex {

// Input could not be parsed; `offset` is the byte position in the input.
struct ParseError : std::runtime_error {
    std::size_t offset;
    ParseError(const std::string& msg, std::size_t off)
        : std::runtime_error(msg + " at offset " + std::to_string(off)), offset(off) {}
};

// gcd(f_x, f_y) has a nonconstant factor with infinitely many real zeros,
// so the critical points are not isolated and the invariants are undefined.
struct NonIsolatedCriticalLocus : std::runtime_error {
    explicit NonIsolatedCriticalLocus(const std::string& msg)
        : std::runtime_error(msg) {}
};

// Two independently computed routes disagree on a quantity they must agree
// on.  This always indicates a bug and is never swallowed.
struct IdentityViolation : std::runtime_error {
    explicit IdentityViolation(const std::string& msg)
        : std::runtime_error(msg) {}
};

// A supplied distance-like function h is unusable (its top form has real
// linear factors, so circles of h are not compact ovals near infinity).
struct InvalidH : std::runtime_error {
    explicit InvalidH(const std::string& msg) : std::runtime_error(msg) {}
};

// The tangency curve vanishes identically (f is a function of h), so ends
// cannot be enumerated.
struct IdenticallyZeroTangency : std::runtime_error {
    explicit IdenticallyZeroTangency(const std::string& msg)
        : std::runtime_error(msg) {}
};

// A branch expansion was requested at a point that does not lie on the
// curve's completion.
struct PointNotOnCurve : std::runtime_error {
    explicit PointNotOnCurve(const std::string& msg)
        : std::runtime_error(msg) {}
};

// The line at infinity divides the queried completion, so chart-local
// vanishing orders along it are undefined.
struct LineAtInfinityComponent : std::runtime_error {
    explicit LineAtInfinityComponent(const std::string& msg)
        : std::runtime_error(msg) {}
};

// An end-sign (or similar) decision procedure exhausted its certified
// escalation budget.  Raised rather than guessed.
struct InconclusiveSign : std::runtime_error {
    explicit InconclusiveSign(const std::string& msg)
        : std::runtime_error(msg) {}
};

// A winding-number certificate (or similar posterior check) failed to
// validate.  This always indicates a bug and is never swallowed.
struct CertificationFailure : std::runtime_error {
    explicit CertificationFailure(const std::string& msg)
        : std::runtime_error(msg) {}
};

// A proven bound on the index was violated by computed data.  Like
// IdentityViolation, this indicates a bug, not a property of the input.
struct BoundViolation : std::runtime_error {
    explicit BoundViolation(const std::string& msg) : std::runtime_error(msg) {}
};

// A deformation-family analysis could not match critical points between
// parameter samples or asymptotic branches.
struct TrackingFailure : std::runtime_error {
    explicit TrackingFailure(const std::string& msg)
        : std::runtime_error(msg) {}
};

// Internal invariant failed (a bug in this library, not in the input).
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace gradindex
