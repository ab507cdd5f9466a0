#include "curvarc/correspondence.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "curvarc/errors.hpp"
#include "curvarc/invariants.hpp"

namespace curvarc {

double signed_area(const PlanarContour& contour) {
    double twice = 0.0;
    for (std::size_t i = 0; i < contour.size(); ++i)
        twice += cross(contour[i], contour.next(i));
    return 0.5 * twice;
}

PlanarContour oriented_ccw(const PlanarContour& contour) {
    if (!contour.closed() || signed_area(contour) >= 0.0) return contour;
    std::vector<Vec2> pts;
    pts.reserve(contour.size());
    pts.push_back(contour[0]);
    for (std::size_t i = contour.size(); i-- > 1;) pts.push_back(contour[i]);
    return PlanarContour::unchecked(std::move(pts), true);
}

PlanarContour scaled(const PlanarContour& contour, double factor) {
    if (!(factor > 0.0) || !std::isfinite(factor))
        throw Error("scale factor must be positive and finite");
    std::vector<Vec2> pts(contour.points());
    for (Vec2& p : pts) p = factor * p;
    return PlanarContour::unchecked(std::move(pts), contour.closed());
}

LandmarkSet place_landmarks(const PlanarContour& contour, InterpolationMode mode,
                            const WeightSpec& spec, std::size_t n, double anchor_s,
                            bool normalize_length) {
    if (!contour.closed()) throw Error("landmark placement needs a closed contour");
    if (n == 0) throw Error("landmark placement needs n >= 1");

    double anchor = anchor_s - std::floor(anchor_s);
    const bool reversed = signed_area(contour) < 0.0;
    const PlanarContour work = oriented_ccw(contour);
    if (reversed && anchor > 0.0) anchor = 1.0 - anchor;

    CurvatureProfile profile;
    if (normalize_length) {
        const double length = arc_length_table(work).total_length;
        profile = discrete_curvature(scaled(work, 1.0 / length));
    } else {
        profile = discrete_curvature(work);
    }
    const ReparamMap map = build_map(profile, spec);
    const double u_anchor = map.forward(anchor);

    const CurveInterpolant interp(work, mode);
    LandmarkSet out;
    out.points.resize(n);
    out.source_s.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        double s = anchor;
        if (k > 0) {
            double u = u_anchor + static_cast<double>(k) / static_cast<double>(n);
            u -= std::floor(u);
            s = map.invert(u);
        }
        out.points[k] = interp.evaluate(s);
        out.source_s[k] = s;
    }
    return out;
}

CorrespondenceReport correspondence_error(const LandmarkSet& candidate,
                                          const LandmarkSet& reference) {
    if (candidate.size() != reference.size())
        throw CountMismatch("landmark sets differ in size");

    CorrespondenceReport report;
    report.distances.resize(candidate.size());
    double sum = 0.0;
    for (std::size_t k = 0; k < candidate.size(); ++k) {
        report.distances[k] = distance(candidate.points[k], reference.points[k]);
        sum += report.distances[k];
        report.max = std::max(report.max, report.distances[k]);
    }
    if (!report.distances.empty()) report.mean = sum / static_cast<double>(candidate.size());
    return report;
}

std::pair<LandmarkSet, LandmarkSet> transfer_landmarks(
    const PlanarContour& source, const PlanarContour& target, InterpolationMode mode,
    const WeightSpec& spec, std::size_t n, double source_anchor_s, double target_anchor_s,
    bool normalize_length) {
    return {place_landmarks(source, mode, spec, n, source_anchor_s, normalize_length),
            place_landmarks(target, mode, spec, n, target_anchor_s, normalize_length)};
}

double curvature_peak_anchor(const PlanarContour& contour) {
    const CurvatureProfile profile = discrete_curvature(contour);
    if (profile.kappa.empty()) return 0.0;
    std::size_t best = 0;
    for (std::size_t i = 1; i < profile.kappa.size(); ++i)
        if (std::abs(profile.kappa[i]) > std::abs(profile.kappa[best])) best = i;
    return profile.s[best];
}

}  // namespace curvarc
