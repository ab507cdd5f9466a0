#include "curvarc/invariants.hpp"

#include <cmath>
#include <cstddef>
#include <utility>

#include "curvarc/errors.hpp"

namespace curvarc {

namespace {

// Edge vectors p_{i+1} - p_i; one per edge, closing edge included when
// closed. Throws when an edge is too short to carry a direction.
std::vector<Vec2> edge_vectors(const PlanarContour& contour) {
    const std::size_t edges = contour.closed() ? contour.size() : contour.size() - 1;
    std::vector<Vec2> e(edges);
    for (std::size_t i = 0; i < edges; ++i) {
        e[i] = contour.next(i) - contour[i];
        if (norm(e[i]) < kDegenerateEdgeTolerance)
            throw DegenerateAngle("degenerate edge: consecutive points coincide");
    }
    return e;
}

// Turning angle at each vertex, zero at the endpoints of an open contour.
std::vector<double> vertex_angles(const PlanarContour& contour, const std::vector<Vec2>& e) {
    const std::size_t n = contour.size();
    std::vector<double> angle(n, 0.0);
    if (contour.closed()) {
        for (std::size_t i = 0; i < n; ++i) angle[i] = signed_angle(e[(i + n - 1) % n], e[i]);
    } else {
        for (std::size_t i = 1; i + 1 < n; ++i) angle[i] = signed_angle(e[i - 1], e[i]);
    }
    return angle;
}

}  // namespace

TurningAngleSequence turning_angles(const PlanarContour& contour) {
    const std::vector<Vec2> e = edge_vectors(contour);
    const std::vector<double> at_vertex = vertex_angles(contour, e);

    TurningAngleSequence out;
    out.edge_lengths.reserve(e.size());
    for (const Vec2& v : e) out.edge_lengths.push_back(norm(v));

    if (contour.closed()) {
        out.angles = at_vertex;
    } else {
        out.angles.assign(at_vertex.begin() + 1, at_vertex.end() - 1);
    }
    return out;
}

CurvatureProfile discrete_curvature(const PlanarContour& contour) {
    const ArcLengthTable table = arc_length_table(contour);
    const TurningAngleSequence data = turning_angles(contour);
    const std::size_t n = contour.size();

    CurvatureProfile profile;
    profile.total_length = table.total_length;
    profile.closed = contour.closed();

    if (contour.closed()) {
        profile.s.resize(n);
        profile.kappa.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            const double incident = 0.5 * (data.edge_lengths[(i + n - 1) % n] +
                                           data.edge_lengths[i]);
            profile.s[i] = table.normalized[i];
            profile.kappa[i] = data.angles[i] / incident;
        }
    } else {
        profile.s.reserve(n - 2);
        profile.kappa.reserve(n - 2);
        for (std::size_t i = 1; i + 1 < n; ++i) {
            const double incident = 0.5 * (data.edge_lengths[i - 1] + data.edge_lengths[i]);
            profile.s.push_back(table.normalized[i]);
            profile.kappa.push_back(data.angles[i - 1] / incident);
        }
    }
    return profile;
}

std::vector<MovingFrame> moving_frames(const PlanarContour& contour) {
    const std::size_t n = contour.size();
    const std::vector<Vec2> e = edge_vectors(contour);
    const std::vector<double> at_vertex = vertex_angles(contour, e);

    std::vector<Vec2> unit(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) unit[i] = normalized(e[i]);

    std::vector<MovingFrame> frames(n);
    for (std::size_t i = 0; i < n; ++i) {
        Vec2 bisector;
        if (contour.closed()) {
            bisector = unit[(i + n - 1) % n] + unit[i];
        } else if (i == 0) {
            bisector = unit[0];
        } else if (i == n - 1) {
            bisector = unit[n - 2];
        } else {
            bisector = unit[i - 1] + unit[i];
        }
        if (norm(bisector) < kDegenerateEdgeTolerance)
            throw DegenerateTangent("cusp: incident edges point in opposite directions");
        frames[i].position = contour[i];
        frames[i].tangent = normalized(bisector);
        frames[i].normal = rot90(frames[i].tangent);
    }

    frames[0].theta = std::atan2(frames[0].tangent.y, frames[0].tangent.x);
    for (std::size_t i = 0; i + 1 < n; ++i)
        frames[i + 1].theta = frames[i].theta + 0.5 * (at_vertex[i] + at_vertex[i + 1]);
    return frames;
}

double total_curvature_length(const CurvatureProfile& profile) {
    const std::size_t m = profile.s.size();
    if (m == 0) return 0.0;

    double integral = 0.0;
    if (profile.closed) {
        for (std::size_t i = 0; i < m; ++i) {
            const std::size_t j = (i + 1) % m;
            const double ds = j > i ? profile.s[j] - profile.s[i]
                                    : profile.s[0] + 1.0 - profile.s[m - 1];
            integral += 0.5 * (std::abs(profile.kappa[i]) + std::abs(profile.kappa[j])) * ds;
        }
    } else {
        for (std::size_t i = 0; i + 1 < m; ++i)
            integral += 0.5 * (std::abs(profile.kappa[i]) + std::abs(profile.kappa[i + 1])) *
                        (profile.s[i + 1] - profile.s[i]);
    }
    return profile.total_length * integral;
}

double curvarc_length(const CurvatureProfile& profile) {
    return profile.total_length + total_curvature_length(profile) / profile.total_length;
}

PlanarContour reconstruct_from_curvature(const TurningAngleSequence& data, Vec2 initial_point,
                                         double initial_heading, bool closed) {
    const std::size_t edges = data.edge_lengths.size();
    if (closed) {
        if (edges < 3 || data.angles.size() != edges)
            throw InconsistentCounts("closed turning data needs one angle per edge, >= 3");
    } else {
        if (edges < 1 || data.angles.size() + 1 != edges)
            throw InconsistentCounts("open turning data needs one angle per interior vertex");
    }
    for (double len : data.edge_lengths)
        if (!(len >= kDegenerateEdgeTolerance))
            throw DegenerateAngle("edge lengths must be positive");

    // Edge k runs along the current heading; arriving at vertex k+1 turns
    // the heading by that vertex's angle. The closing edge of a closed
    // polygon and the angle at vertex 0 are implied, not integrated.
    std::vector<Vec2> points;
    points.reserve(closed ? edges : edges + 1);
    points.push_back(initial_point);
    double heading = initial_heading;
    const std::size_t steps = closed ? edges - 1 : edges;
    for (std::size_t k = 0; k < steps; ++k) {
        points.push_back(points.back() + data.edge_lengths[k] * unit_from_angle(heading));
        if (closed) {
            heading += data.angles[k + 1];
        } else if (k + 1 < steps) {
            heading += data.angles[k];
        }
    }
    return PlanarContour::unchecked(std::move(points), closed);
}

}  // namespace curvarc
