#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "curvarc/contour.hpp"
#include "curvarc/reparam.hpp"

namespace curvarc {

/// Canonically indexed landmarks on one contour. Index k is the position
/// in the vectors; source_s holds the normalized arc-length parameter of
/// each landmark on the (counterclockwise-oriented) source contour, so the
/// sequence is cyclically increasing starting from the anchor landmark 0.
struct LandmarkSet {
    std::vector<Vec2> points;
    std::vector<double> source_s;

    std::size_t size() const { return points.size(); }
};

/// Per-landmark Euclidean distances between two sets plus summary stats.
struct CorrespondenceReport {
    std::vector<double> distances;
    double mean = 0.0;
    double max = 0.0;
};

/// Signed area of a closed polygon (shoelace); positive when
/// counterclockwise.
double signed_area(const PlanarContour& contour);

/// The same contour traversed counterclockwise: returns the input when its
/// signed area is already positive, otherwise the reversed traversal
/// keeping the first point first.
PlanarContour oriented_ccw(const PlanarContour& contour);

/// Contour scaled about the origin.
PlanarContour scaled(const PlanarContour& contour, double factor);

/// Places n landmarks on a closed contour with the (c, lambda) map:
/// landmark k sits at s = invert(map, (map(anchor_s) + k/n) mod 1) and
/// landmark 0 exactly at the caller-supplied anchor. The contour is
/// re-oriented counterclockwise first (the anchor parameter refers to the
/// input traversal and is remapped). With normalize_length the profile is
/// taken on the contour rescaled to unit length, which makes the map, and
/// hence the landmark parameters, scale-invariant.
LandmarkSet place_landmarks(const PlanarContour& contour, InterpolationMode mode,
                            const WeightSpec& spec, std::size_t n, double anchor_s,
                            bool normalize_length = false);

/// Distances between equally indexed landmarks. Throws CountMismatch when
/// the sets differ in size.
CorrespondenceReport correspondence_error(const LandmarkSet& candidate,
                                          const LandmarkSet& reference);

/// place_landmarks on both contours with the same (spec, n); matching
/// indices give the canonical-parameterization correspondence.
std::pair<LandmarkSet, LandmarkSet> transfer_landmarks(
    const PlanarContour& source, const PlanarContour& target, InterpolationMode mode,
    const WeightSpec& spec, std::size_t n, double source_anchor_s,
    double target_anchor_s, bool normalize_length = false);

/// Parameter of the vertex with the largest |kappa| on the contour's own
/// traversal. Convenience anchor used by the CLI; feature-based anchoring
/// is the caller's own modeling choice.
double curvature_peak_anchor(const PlanarContour& contour);

}  // namespace curvarc
