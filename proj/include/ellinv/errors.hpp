// Error types shared across the library.
#pragma once

#include <stdexcept>
#include <string>

namespace ellinv {

// Base class for all domain errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Operation evaluated at (or too close to) the center of the inversion
// ellipse, where the map is singular.
class CenterSingularError : public Error {
public:
    explicit CenterSingularError(const std::string& what) : Error(what) {}
};

// A point that was required to lie on a given line does not.
class OffLineError : public Error {
public:
    explicit OffLineError(const std::string& what) : Error(what) {}
};

// Four points handed to a cross-ratio style computation are degenerate
// (coincident points, or not all on one line).
class DegenerateQuadError : public Error {
public:
    explicit DegenerateQuadError(const std::string& what) : Error(what) {}
};

// Harmonic conjugate requested for the midpoint of the base segment,
// where the conjugate escapes to infinity.
class MidpointSingularError : public Error {
public:
    explicit MidpointSingularError(const std::string& what) : Error(what) {}
};

// Curve degree outside the supported range of an operation.
class UnsupportedDegreeError : public Error {
public:
    explicit UnsupportedDegreeError(const std::string& what) : Error(what) {}
};

// The zero polynomial was passed where a curve is required, or every
// coefficient cancelled during a transformation.
class ZeroCurveError : public Error {
public:
    explicit ZeroCurveError(const std::string& what) : Error(what) {}
};

// A curve operation anchored at the origin was applied to a curve that is
// singular there (no well-defined tangent line).
class SingularAtOriginError : public Error {
public:
    explicit SingularAtOriginError(const std::string& what) : Error(what) {}
};

// Invalid construction parameters (non-positive semi-axis, ratio outside
// (0,1), non-positive squash factor, ...).
class InvalidSpecError : public Error {
public:
    explicit InvalidSpecError(const std::string& what) : Error(what) {}
};

// Chain/witness index outside the constructed range.
class IndexOutOfRangeError : public Error {
public:
    explicit IndexOutOfRangeError(const std::string& what) : Error(what) {}
};

// A query over a computed set matched nothing.
class EmptyResultError : public Error {
public:
    explicit EmptyResultError(const std::string& what) : Error(what) {}
};

// Malformed textual input (curve strings, config files, numbers).
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

} // namespace ellinv
