#include "curvarc/contour.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "curvarc/errors.hpp"
#include "curvarc/spline.hpp"

namespace curvarc {

namespace {

bool finite(Vec2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }

constexpr int kRefinePerInterval = 32;  // dense subsamples per knot interval
constexpr double kInvertToleranceS = 1e-10;

// 5-point Gauss-Legendre quadrature of f over [a, b].
template <typename F>
double gauss_legendre5(F&& f, double a, double b) {
    static constexpr double node[5] = {-0.9061798459386640, -0.5384693101056831, 0.0,
                                       0.5384693101056831, 0.9061798459386640};
    static constexpr double weight[5] = {0.2369268850561891, 0.4786286704993665,
                                         0.5688888888888889, 0.4786286704993665,
                                         0.2369268850561891};
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double sum = 0.0;
    for (int i = 0; i < 5; ++i) sum += weight[i] * f(mid + half * node[i]);
    return half * sum;
}

}  // namespace

PlanarContour::PlanarContour(std::vector<Vec2> points, bool closed) : closed_(closed) {
    for (const Vec2& p : points)
        if (!finite(p)) throw NonFiniteCoordinate("contour coordinate is not finite");

    points_.reserve(points.size());
    for (const Vec2& p : points) {
        if (!points_.empty() && distance(points_.back(), p) < kDuplicateTolerance) continue;
        points_.push_back(p);
    }
    if (closed_) {
        while (points_.size() > 1 &&
               distance(points_.back(), points_.front()) < kDuplicateTolerance)
            points_.pop_back();
    }

    const std::size_t minimum = closed_ ? 3 : 2;
    if (points_.size() < minimum)
        throw TooFewPoints(closed_ ? "closed contour needs at least 3 distinct points"
                                   : "open contour needs at least 2 distinct points");
}

PlanarContour PlanarContour::unchecked(std::vector<Vec2> points, bool closed) {
    PlanarContour c;
    c.points_ = std::move(points);
    c.closed_ = closed;
    return c;
}

ArcLengthTable arc_length_table(const PlanarContour& contour) {
    const std::size_t n = contour.size();
    const std::size_t edges = contour.closed() ? n : n - 1;

    ArcLengthTable table;
    table.cumulative.resize(edges + 1);
    table.cumulative[0] = 0.0;
    for (std::size_t i = 0; i < edges; ++i)
        table.cumulative[i + 1] = table.cumulative[i] + distance(contour[i], contour.next(i));
    table.total_length = table.cumulative.back();

    table.normalized.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        table.normalized[i] = table.cumulative[i] / table.total_length;
    return table;
}

struct CurveInterpolant::Impl {
    PlanarContour contour;
    InterpolationMode mode;
    ArcLengthTable chords;

    // CubicSpline mode only.
    std::vector<CubicSpline1D> spline;  // x then y
    std::vector<double> refine_t;       // dense knot-space parameters
    std::vector<double> refine_len;     // cumulative spline arc length at refine_t
    double total_length = 0.0;

    Impl(const PlanarContour& c, InterpolationMode m)
        : contour(c), mode(m), chords(arc_length_table(c)) {
        if (mode == InterpolationMode::Polyline) {
            total_length = chords.total_length;
            return;
        }
        build_spline();
        build_refinement();
    }

    void build_spline() {
        const std::size_t n = contour.size();
        std::vector<double> knots(chords.cumulative.begin(), chords.cumulative.begin() + n);
        std::vector<double> xs(n), ys(n);
        for (std::size_t i = 0; i < n; ++i) {
            xs[i] = contour[i].x;
            ys[i] = contour[i].y;
        }
        const auto boundary = contour.closed() ? CubicSpline1D::Boundary::Periodic
                                               : CubicSpline1D::Boundary::Natural;
        const double period = contour.closed() ? chords.total_length : 0.0;
        spline.emplace_back(knots, xs, boundary, period);
        spline.emplace_back(std::move(knots), std::move(ys), boundary, period);
    }

    Vec2 spline_point(double t) const { return {spline[0].value(t), spline[1].value(t)}; }

    double spline_speed(double t) const {
        return std::hypot(spline[0].derivative(t), spline[1].derivative(t));
    }

    void build_refinement() {
        const std::size_t segments = spline[0].segment_count();
        refine_t.reserve(segments * kRefinePerInterval + 1);
        refine_len.reserve(segments * kRefinePerInterval + 1);
        refine_t.push_back(spline[0].knot(0));
        refine_len.push_back(0.0);
        auto speed = [this](double t) { return spline_speed(t); };
        for (std::size_t j = 0; j < segments; ++j) {
            const double t0 = spline[0].knot(j);
            const double t1 = spline[0].knot(j + 1);
            for (int q = 1; q <= kRefinePerInterval; ++q) {
                const double t = t0 + (t1 - t0) * q / kRefinePerInterval;
                refine_len.push_back(refine_len.back() +
                                     gauss_legendre5(speed, refine_t.back(), t));
                refine_t.push_back(t);
            }
        }
        total_length = refine_len.back();
    }

    Vec2 eval_polyline(double s) const {
        const auto& cum = chords.cumulative;
        const double target = s * chords.total_length;
        auto it = std::upper_bound(cum.begin(), cum.end(), target);
        std::size_t i = it == cum.begin() ? 0 : static_cast<std::size_t>(it - cum.begin()) - 1;
        i = std::min(i, cum.size() - 2);
        const double frac = (target - cum[i]) / (cum[i + 1] - cum[i]);
        const Vec2 a = contour[i];
        const Vec2 b = contour.next(i);
        return a + frac * (b - a);
    }

    // Inverts the dense arc-length table by bisection, then evaluates the
    // spline at the recovered knot parameter.
    Vec2 eval_spline(double s) const {
        const double target = s * total_length;
        auto it = std::upper_bound(refine_len.begin(), refine_len.end(), target);
        std::size_t k =
            it == refine_len.begin() ? 0 : static_cast<std::size_t>(it - refine_len.begin()) - 1;
        k = std::min(k, refine_len.size() - 2);

        double lo = refine_t[k], hi = refine_t[k + 1];
        double len_lo = refine_len[k], len_hi = refine_len[k + 1];
        auto speed = [this](double t) { return spline_speed(t); };
        const double tol = kInvertToleranceS * total_length;
        while (len_hi - len_lo > tol) {
            const double mid = 0.5 * (lo + hi);
            const double len_mid = refine_len[k] + gauss_legendre5(speed, refine_t[k], mid);
            if (len_mid < target) {
                lo = mid;
                len_lo = len_mid;
            } else {
                hi = mid;
                len_hi = len_mid;
            }
        }
        double t = lo;
        if (len_hi > len_lo) t = lo + (target - len_lo) / (len_hi - len_lo) * (hi - lo);
        return spline_point(t);
    }

    Vec2 evaluate(double s) const {
        if (contour.closed()) {
            s -= std::floor(s);
        } else {
            if (s < -kParameterTolerance || s > 1.0 + kParameterTolerance)
                throw ParameterOutOfRange("parameter outside [0, 1] on an open contour");
            s = std::clamp(s, 0.0, 1.0);
        }
        return mode == InterpolationMode::Polyline ? eval_polyline(s) : eval_spline(s);
    }
};

CurveInterpolant::CurveInterpolant(const PlanarContour& contour, InterpolationMode mode)
    : impl_(std::make_unique<Impl>(contour, mode)) {}

CurveInterpolant::~CurveInterpolant() = default;
CurveInterpolant::CurveInterpolant(CurveInterpolant&&) noexcept = default;
CurveInterpolant& CurveInterpolant::operator=(CurveInterpolant&&) noexcept = default;

Vec2 CurveInterpolant::evaluate(double s) const { return impl_->evaluate(s); }
double CurveInterpolant::length() const { return impl_->total_length; }
bool CurveInterpolant::closed() const { return impl_->contour.closed(); }

Vec2 evaluate(const PlanarContour& contour, InterpolationMode mode, double s) {
    return CurveInterpolant(contour, mode).evaluate(s);
}

PlanarContour resample_uniform(const PlanarContour& contour, InterpolationMode mode,
                               std::size_t n) {
    const std::size_t minimum = contour.closed() ? 3 : 2;
    if (n < minimum)
        throw TooFewPoints(contour.closed() ? "closed resampling needs n >= 3"
                                            : "open resampling needs n >= 2");
    const CurveInterpolant interp(contour, mode);
    std::vector<Vec2> out(n);
    const double denom = contour.closed() ? static_cast<double>(n)
                                          : static_cast<double>(n - 1);
    for (std::size_t k = 0; k < n; ++k)
        out[k] = interp.evaluate(static_cast<double>(k) / denom);
    return PlanarContour::unchecked(std::move(out), contour.closed());
}

}  // namespace curvarc
