#pragma once

#include <cstddef>
#include <vector>

#include "curvarc/contour.hpp"
#include "curvarc/invariants.hpp"

namespace curvarc {

/// Consecutive map values closer than this belong to one plateau.
inline constexpr double kPlateauTolerance = 1e-14;

/// Weight pair (c, lambda) selecting one member of the canonical
/// parameterization family with integrand c*L + |kappa|^lambda.
///
/// (c=0, lambda=1) is the curvature-length parameterization, (c=1,
/// lambda=1) the curvarc-length one, and growing c approaches arc length.
/// Requires c >= 0 and lambda > 0.
struct WeightSpec {
    double c = 1.0;
    double lambda_exp = 1.0;
};

/// Tie-break for inverting a plateau: which end of the flat run receives
/// the parameter value.
enum class PlateauPolicy { PlateauStart, PlateauEnd };

/// Maximal index range [begin, end] of the map grid over which the map is
/// constant.
struct PlateauRange {
    std::size_t begin = 0;
    std::size_t end = 0;
};

/// Monotone map u: [0,1] -> [0,1] as a sampled graph.
///
/// u is non-decreasing with u(0) = 0 and u(1) = 1, strictly increasing
/// outside the recorded plateaus (and everywhere when built with c > 0).
class ReparamMap {
public:
    /// Wraps a sampled graph: s_grid strictly increasing over [0, 1],
    /// u_values non-decreasing from 0 to 1. Plateaus are detected here.
    ReparamMap(std::vector<double> s_grid, std::vector<double> u_values);

    const std::vector<double>& s_grid() const { return s_grid_; }
    const std::vector<double>& u_values() const { return u_values_; }
    const std::vector<PlateauRange>& plateaus() const { return plateaus_; }

    /// u(s) by piecewise-linear interpolation of the graph.
    double forward(double s) const;

    /// s with u(s) = u, by monotone piecewise-linear inversion. A u that
    /// falls on a plateau image resolves to the plateau start (default)
    /// or end.
    double invert(double u, PlateauPolicy policy = PlateauPolicy::PlateauStart) const;

private:
    std::vector<double> s_grid_;
    std::vector<double> u_values_;
    std::vector<PlateauRange> plateaus_;
};

/// Integrand samples w_i = c*L + |kappa_i|^lambda of the family map.
std::vector<double> weight_samples(const CurvatureProfile& profile, const WeightSpec& spec);

/// Cumulative trapezoidal quadrature of the weights, normalized to [0, 1].
///
/// The grid is the profile grid extended to cover [0, 1]: closed profiles
/// wrap the final interval back to s = 1 (periodic weight), open profiles
/// extend the end intervals with their boundary weight. Throws
/// ZeroTotalWeight when every weight vanishes (a straight line with c = 0
/// has no curvature-length parameterization).
ReparamMap build_map(const CurvatureProfile& profile, const WeightSpec& spec);

/// n points uniform in the map image: point k sits at
/// s = invert(map, k/n) (closed) or invert(map, k/(n-1)) (open), so the
/// samples concentrate where the weight is large and flat pieces of a
/// c = 0 map receive only the plateau endpoint.
PlanarContour resample_by_map(const PlanarContour& contour, InterpolationMode mode,
                              const ReparamMap& map, std::size_t n,
                              PlateauPolicy policy = PlateauPolicy::PlateauStart);

}  // namespace curvarc
