#include "curvarc/reparam.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "curvarc/errors.hpp"

namespace curvarc {

namespace {

constexpr double kGridTolerance = 1e-12;

double power_weight(double kappa, double lambda) {
    const double a = std::abs(kappa);
    if (lambda == 1.0) return a;
    if (lambda == 2.0) return a * a;
    return std::pow(a, lambda);
}

}  // namespace

std::vector<double> weight_samples(const CurvatureProfile& profile, const WeightSpec& spec) {
    if (!(spec.c >= 0.0)) throw Error("weight spec requires c >= 0");
    if (!(spec.lambda_exp > 0.0)) throw Error("weight spec requires lambda > 0");

    std::vector<double> w(profile.kappa.size());
    const double base = spec.c * profile.total_length;
    for (std::size_t i = 0; i < w.size(); ++i)
        w[i] = base + power_weight(profile.kappa[i], spec.lambda_exp);
    return w;
}

ReparamMap::ReparamMap(std::vector<double> s_grid, std::vector<double> u_values)
    : s_grid_(std::move(s_grid)), u_values_(std::move(u_values)) {
    if (s_grid_.size() != u_values_.size() || s_grid_.size() < 2)
        throw Error("map grid needs matching s and u samples, at least two");
    if (std::abs(s_grid_.front()) > kGridTolerance ||
        std::abs(s_grid_.back() - 1.0) > kGridTolerance)
        throw Error("map grid must span [0, 1]");
    if (std::abs(u_values_.front()) > kGridTolerance ||
        std::abs(u_values_.back() - 1.0) > kGridTolerance)
        throw Error("map values must run from 0 to 1");
    s_grid_.front() = 0.0;
    s_grid_.back() = 1.0;
    u_values_.front() = 0.0;
    u_values_.back() = 1.0;
    for (std::size_t i = 0; i + 1 < s_grid_.size(); ++i) {
        if (!(s_grid_[i] < s_grid_[i + 1])) throw Error("map grid must be strictly increasing");
        if (u_values_[i + 1] < u_values_[i]) throw Error("map values must be non-decreasing");
    }

    // Record maximal runs over which u is constant to tolerance.
    std::size_t i = 0;
    while (i + 1 < u_values_.size()) {
        if (u_values_[i + 1] - u_values_[i] <= kPlateauTolerance) {
            std::size_t j = i + 1;
            while (j + 1 < u_values_.size() &&
                   u_values_[j + 1] - u_values_[j] <= kPlateauTolerance)
                ++j;
            plateaus_.push_back({i, j});
            i = j;
        } else {
            ++i;
        }
    }
}

double ReparamMap::forward(double s) const {
    s = std::clamp(s, 0.0, 1.0);
    auto it = std::upper_bound(s_grid_.begin(), s_grid_.end(), s);
    std::size_t i = it == s_grid_.begin() ? 0 : static_cast<std::size_t>(it - s_grid_.begin()) - 1;
    i = std::min(i, s_grid_.size() - 2);
    const double t = (s - s_grid_[i]) / (s_grid_[i + 1] - s_grid_[i]);
    return std::lerp(u_values_[i], u_values_[i + 1], t);
}

double ReparamMap::invert(double u, PlateauPolicy policy) const {
    u = std::clamp(u, 0.0, 1.0);
    for (const PlateauRange& p : plateaus_)
        if (u >= u_values_[p.begin] && u <= u_values_[p.end])
            return policy == PlateauPolicy::PlateauStart ? s_grid_[p.begin] : s_grid_[p.end];

    auto it = std::lower_bound(u_values_.begin(), u_values_.end(), u);
    const std::size_t i = static_cast<std::size_t>(it - u_values_.begin());
    if (i == 0) return s_grid_.front();
    if (u_values_[i] == u) return s_grid_[i];
    const double t = (u - u_values_[i - 1]) / (u_values_[i] - u_values_[i - 1]);
    return std::lerp(s_grid_[i - 1], s_grid_[i], t);
}

ReparamMap build_map(const CurvatureProfile& profile, const WeightSpec& spec) {
    std::vector<double> w = weight_samples(profile, spec);

    if (w.empty()) {
        // No curvature samples (a straight open segment): the weight is the
        // constant c * L, so the map is the identity when it is positive.
        if (spec.c * profile.total_length > 0.0) return ReparamMap({0.0, 1.0}, {0.0, 1.0});
        throw ZeroTotalWeight("zero weight everywhere: straight segment with c = 0");
    }

    std::vector<double> grid(profile.s);
    if (profile.closed) {
        // Periodic extension: the weight at s = 1 (and 0) interpolates
        // across the wrap interval.
        double w_end = w.front();
        if (grid.front() > 0.0) {
            const double span = 1.0 - grid.back() + grid.front();
            const double t = (1.0 - grid.back()) / span;
            w_end = std::lerp(w.back(), w.front(), t);
            grid.insert(grid.begin(), 0.0);
            w.insert(w.begin(), w_end);
        }
        grid.push_back(1.0);
        w.push_back(w_end);
    } else {
        if (grid.front() > 0.0) {
            grid.insert(grid.begin(), 0.0);
            w.insert(w.begin(), w.front());
        }
        if (grid.back() < 1.0) {
            grid.push_back(1.0);
            w.push_back(w.back());
        }
    }

    std::vector<double> cum(grid.size(), 0.0);
    for (std::size_t i = 0; i + 1 < grid.size(); ++i)
        cum[i + 1] = cum[i] + 0.5 * (w[i] + w[i + 1]) * (grid[i + 1] - grid[i]);
    const double total = cum.back();
    if (!(total > 0.0)) throw ZeroTotalWeight("zero weight everywhere over the contour");

    for (double& v : cum) v /= total;
    return ReparamMap(std::move(grid), std::move(cum));
}

PlanarContour resample_by_map(const PlanarContour& contour, InterpolationMode mode,
                              const ReparamMap& map, std::size_t n, PlateauPolicy policy) {
    const std::size_t minimum = contour.closed() ? 3 : 2;
    if (n < minimum)
        throw TooFewPoints(contour.closed() ? "closed resampling needs n >= 3"
                                            : "open resampling needs n >= 2");
    const CurveInterpolant interp(contour, mode);
    std::vector<Vec2> out(n);
    const double denom = contour.closed() ? static_cast<double>(n)
                                          : static_cast<double>(n - 1);
    for (std::size_t k = 0; k < n; ++k)
        out[k] = interp.evaluate(map.invert(static_cast<double>(k) / denom, policy));
    return PlanarContour::unchecked(std::move(out), contour.closed());
}

}  // namespace curvarc
