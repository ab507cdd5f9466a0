#pragma once

#include <cstddef>
#include <vector>

#include "curvarc/contour.hpp"
#include "curvarc/vec2.hpp"

namespace curvarc {

/// Edges shorter than this make turning angles ill-defined.
inline constexpr double kDegenerateEdgeTolerance = 1e-12;

/// Signed exterior angles of a polygon together with its edge lengths.
///
/// Closed: one angle per vertex (the angle at vertex i turns edge i-1 into
/// edge i, indices mod n) and one length per edge, closing edge included.
/// Open: one angle per interior vertex (angles[k] sits at vertex k+1) and
/// one length per edge, so angles.size() + 1 == edge_lengths.size().
struct TurningAngleSequence {
    std::vector<double> angles;        // each in (-pi, pi], ccw positive
    std::vector<double> edge_lengths;  // same units as the contour
};

/// Sampled signed curvature over normalized arc length.
///
/// s is strictly increasing; closed profiles sample every vertex with
/// s in [0, 1), open profiles sample interior vertices only (endpoint
/// curvature is undefined and omitted).
struct CurvatureProfile {
    std::vector<double> s;
    std::vector<double> kappa;  // units 1/length
    double total_length = 0.0;
    bool closed = false;
};

/// Rigid motion attached to a curve point: position, unit tangent, unit
/// normal (tangent rotated +pi/2), and the tangent angle unwrapped to a
/// continuous sequence along the curve.
struct MovingFrame {
    Vec2 position;
    Vec2 tangent;
    Vec2 normal;
    double theta = 0.0;
};

/// Signed turning angle at each vertex plus all edge lengths.
/// Throws DegenerateAngle if an edge is shorter than 1e-12.
TurningAngleSequence turning_angles(const PlanarContour& contour);

/// Discrete signed curvature: turning angle divided by the average of the
/// two incident edge lengths. With that normalization the sum of
/// kappa_i * len_i reproduces the total turning angle exactly.
CurvatureProfile discrete_curvature(const PlanarContour& contour);

/// Frame at every vertex. The tangent bisects the incident edges
/// (endpoints of open contours use their single edge); theta starts at
/// atan2 of the first tangent and advances by the turning-angle increments,
/// so it is continuous and never wraps. Throws DegenerateTangent at exact
/// cusps, where the bisector direction vanishes.
std::vector<MovingFrame> moving_frames(const PlanarContour& contour);

/// Total curvature-length C = L * integral of |kappa| ds, trapezoidal over
/// the profile samples. Closed profiles wrap the final interval, which
/// makes C equal the sum of |turning angles| exactly on polygons; open
/// profiles integrate over the sampled range.
double total_curvature_length(const CurvatureProfile& profile);

/// L + integral of |kappa| ds = L + C/L, the length of the SE(2) curve
/// traced by the moving frame.
double curvarc_length(const CurvatureProfile& profile);

/// Integrates turning data back into a polygon: starting at initial_point
/// with the first edge along initial_heading, each edge advances the
/// current heading and each angle updates it. Inverse of turning_angles
/// given the first vertex and first-edge heading.
/// Throws InconsistentCounts when the angle/edge counts do not match the
/// closed/open convention.
PlanarContour reconstruct_from_curvature(const TurningAngleSequence& data,
                                         Vec2 initial_point, double initial_heading,
                                         bool closed);

}  // namespace curvarc
