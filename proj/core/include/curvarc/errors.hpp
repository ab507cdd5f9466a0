#pragma once

#include <stdexcept>
#include <string>

namespace curvarc {

/// Base class for every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Fewer points than the contour kind admits (2 open, 3 closed), counted
/// after duplicate merging.
struct TooFewPoints : Error {
    using Error::Error;
};

/// A coordinate is NaN or infinite.
struct NonFiniteCoordinate : Error {
    using Error::Error;
};

/// Normalized parameter outside [0, 1] on an open contour.
struct ParameterOutOfRange : Error {
    using Error::Error;
};

/// An edge shorter than the degeneracy tolerance was encountered.
struct DegenerateAngle : Error {
    using Error::Error;
};

/// The bisector tangent vanishes (exact cusp: incident edges reverse).
struct DegenerateTangent : Error {
    using Error::Error;
};

/// Angle and edge-length counts do not match the closed/open convention.
struct InconsistentCounts : Error {
    using Error::Error;
};

/// All reparameterization weights vanish (straight line with c = 0).
struct ZeroTotalWeight : Error {
    using Error::Error;
};

/// Landmark sets of different sizes were compared.
struct CountMismatch : Error {
    using Error::Error;
};

/// Malformed input file; message carries the location.
struct ParseError : Error {
    using Error::Error;
};

}  // namespace curvarc
