#pragma once

#include <stdexcept>
#include <string>

namespace satokdv {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define SATOKDV_ERROR(Name)                \
    class Name : public Error {            \
    public:                                \
        using Error::Error;                \
    }

/// An element of Q[sqrt(-2)] had a nonzero irrational part where a rational was required.
SATOKDV_ERROR(NonRational);
/// A series could not be inverted (zero constant term or positive powers present).
SATOKDV_ERROR(NonUnit);
/// A G-matrix or point does not satisfy G_0 = I (equivalently b_1 = 0).
SATOKDV_ERROR(NotNormalized);
/// A coefficient beyond the valid truncation order was requested.
SATOKDV_ERROR(InsufficientDepth);
/// Index outside a finite table.
SATOKDV_ERROR(OutOfRange);
/// An affine table too small for the requested tau degree.
SATOKDV_ERROR(InsufficientTable);
/// A graded object was requested beyond its degree bound.
SATOKDV_ERROR(DegreeExceeded);
/// Division by (w + z) left a nonzero remainder.
SATOKDV_ERROR(InconsistentDivision);
/// Bad argument to an arithmetic helper (even n for n!!, division by zero, ...).
SATOKDV_ERROR(InvalidArgument);
/// Malformed textual or JSON input.
SATOKDV_ERROR(ParseError);

#undef SATOKDV_ERROR

} // namespace satokdv
