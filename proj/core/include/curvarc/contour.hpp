#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "curvarc/vec2.hpp"

namespace curvarc {

/// Two consecutive points closer than this are treated as one.
inline constexpr double kDuplicateTolerance = 1e-12;

/// Slack accepted on the normalized parameter of an open contour.
inline constexpr double kParameterTolerance = 1e-12;

enum class InterpolationMode {
    Polyline,     ///< piecewise-linear through the vertices
    CubicSpline,  ///< component-wise cubic spline over chord-length knots,
                  ///< re-indexed by its own arc length
};

/// Ordered planar point sequence, open or closed.
///
/// Construction validates: coordinates must be finite, consecutive
/// duplicates (closing wrap included) are merged, and at least 2 (open)
/// or 3 (closed) distinct points must remain. Simplicity is a caller
/// contract, not checked here.
class PlanarContour {
public:
    PlanarContour(std::vector<Vec2> points, bool closed);

    /// Wraps an already-validated point sequence without re-checking.
    /// Resampling and reconstruction build their outputs through this.
    static PlanarContour unchecked(std::vector<Vec2> points, bool closed);

    const std::vector<Vec2>& points() const { return points_; }
    bool closed() const { return closed_; }
    std::size_t size() const { return points_.size(); }
    const Vec2& operator[](std::size_t i) const { return points_[i]; }

    /// Vertex i+1 with closing wrap; valid for i < size() on closed
    /// contours and i < size()-1 on open ones.
    const Vec2& next(std::size_t i) const {
        return points_[i + 1 == points_.size() ? 0 : i + 1];
    }

private:
    PlanarContour() = default;

    std::vector<Vec2> points_;
    bool closed_ = false;
};

/// Cumulative chord lengths of a contour.
///
/// `cumulative` starts at 0 and has one entry per vertex, plus the closing
/// edge for closed contours (so its last entry is always the total length).
/// `normalized` has one entry per vertex: s_i = cumulative_i / L, hence
/// s values live in [0, 1) for closed contours and reach 1 for open ones.
struct ArcLengthTable {
    std::vector<double> cumulative;
    std::vector<double> normalized;
    double total_length = 0.0;
};

ArcLengthTable arc_length_table(const PlanarContour& contour);

/// Evaluation of a contour's interpolant by normalized arc length.
///
/// For Polyline mode the parameter is exact chord-length fraction. For
/// CubicSpline mode the spline fitted over chord-length knots is re-indexed
/// by its own arc length: a dense refinement (32 subsamples per knot
/// interval, Gauss-Legendre order 5 each) tabulates the spline's length and
/// queries invert it by bisection to 1e-10 in s.
class CurveInterpolant {
public:
    CurveInterpolant(const PlanarContour& contour, InterpolationMode mode);
    ~CurveInterpolant();
    CurveInterpolant(CurveInterpolant&&) noexcept;
    CurveInterpolant& operator=(CurveInterpolant&&) noexcept;

    /// Point at normalized arc length s along the interpolant. Closed
    /// contours take s modulo 1; open ones throw ParameterOutOfRange
    /// outside [0, 1] beyond 1e-12.
    Vec2 evaluate(double s) const;

    /// Arc length of the interpolant (chord length in Polyline mode).
    double length() const;

    bool closed() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// One-shot form of CurveInterpolant::evaluate.
Vec2 evaluate(const PlanarContour& contour, InterpolationMode mode, double s);

/// n points equally spaced along the interpolant: s = k/n on closed
/// contours (k = 0..n-1), s = k/(n-1) on open ones.
PlanarContour resample_uniform(const PlanarContour& contour, InterpolationMode mode,
                               std::size_t n);

}  // namespace curvarc
