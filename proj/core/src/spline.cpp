#include "curvarc/spline.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace curvarc {

namespace {

// Thomas algorithm. sub[0] and super[n-1] are ignored.
std::vector<double> solve_tridiagonal(std::vector<double> sub, std::vector<double> diag,
                                      std::vector<double> super, std::vector<double> rhs) {
    const std::size_t n = diag.size();
    for (std::size_t i = 1; i < n; ++i) {
        const double m = sub[i] / diag[i - 1];
        diag[i] -= m * super[i - 1];
        rhs[i] -= m * rhs[i - 1];
    }
    std::vector<double> x(n);
    x[n - 1] = rhs[n - 1] / diag[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) x[i] = (rhs[i] - super[i] * x[i + 1]) / diag[i];
    return x;
}

}  // namespace

CubicSpline1D::CubicSpline1D(std::vector<double> knots, std::vector<double> values,
                             Boundary boundary, double period)
    : knots_(std::move(knots)), values_(std::move(values)) {
    if (knots_.size() != values_.size() || knots_.size() < 2)
        throw std::invalid_argument("spline needs matching knots and values, at least two");
    for (std::size_t i = 0; i + 1 < knots_.size(); ++i)
        if (!(knots_[i] < knots_[i + 1]))
            throw std::invalid_argument("spline knots must be strictly increasing");

    if (boundary == Boundary::Natural) {
        build_natural();
    } else {
        if (!(period > 0.0) || !(knots_.back() - knots_.front() < period))
            throw std::invalid_argument("periodic spline needs period > knot span");
        build_periodic(period);
    }
    segment_count_ = knots_.size() - 1;
}

double CubicSpline1D::knot(std::size_t i) const { return knots_[i]; }

void CubicSpline1D::build_natural() {
    const std::size_t n = knots_.size();
    second_.assign(n, 0.0);
    if (n == 2) return;

    const std::size_t m = n - 2;  // interior unknowns
    std::vector<double> sub(m), diag(m), super(m), rhs(m);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double h0 = knots_[i] - knots_[i - 1];
        const double h1 = knots_[i + 1] - knots_[i];
        sub[i - 1] = h0;
        diag[i - 1] = 2.0 * (h0 + h1);
        super[i - 1] = h1;
        rhs[i - 1] = 6.0 * ((values_[i + 1] - values_[i]) / h1 -
                            (values_[i] - values_[i - 1]) / h0);
    }
    const std::vector<double> interior = solve_tridiagonal(std::move(sub), std::move(diag),
                                                           std::move(super), std::move(rhs));
    for (std::size_t i = 0; i < m; ++i) second_[i + 1] = interior[i];
}

// Periodic closure: the wrap knot knots_[0] + period is appended, the cyclic
// tridiagonal moment system is reduced to two Thomas solves (Sherman-Morrison).
void CubicSpline1D::build_periodic(double period) {
    const std::size_t n = knots_.size();
    if (n < 3) throw std::invalid_argument("periodic spline needs at least 3 points");

    std::vector<double> h(n);
    for (std::size_t i = 0; i + 1 < n; ++i) h[i] = knots_[i + 1] - knots_[i];
    h[n - 1] = knots_[0] + period - knots_[n - 1];

    auto value_at = [&](std::size_t i) { return values_[i % n]; };
    std::vector<double> sub(n), diag(n), super(n), rhs(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double hp = h[(i + n - 1) % n];
        const double hi = h[i];
        sub[i] = hp;
        diag[i] = 2.0 * (hp + hi);
        super[i] = hi;
        rhs[i] = 6.0 * ((value_at(i + 1) - value_at(i)) / hi -
                        (value_at(i) - value_at(i + n - 1)) / hp);
    }

    const double alpha = sub[0];      // coupling of row 0 to x[n-1]
    const double beta = super[n - 1]; // coupling of row n-1 to x[0]
    const double gamma = -diag[0];

    std::vector<double> diag_mod = diag;
    diag_mod[0] -= gamma;
    diag_mod[n - 1] -= alpha * beta / gamma;

    std::vector<double> u(n, 0.0);
    u[0] = gamma;
    u[n - 1] = beta;

    const std::vector<double> y = solve_tridiagonal(sub, diag_mod, super, rhs);
    const std::vector<double> z = solve_tridiagonal(sub, diag_mod, super, u);

    const double factor = (y[0] + alpha * y[n - 1] / gamma) /
                          (1.0 + z[0] + alpha * z[n - 1] / gamma);

    second_.resize(n + 1);
    for (std::size_t i = 0; i < n; ++i) second_[i] = y[i] - factor * z[i];
    second_[n] = second_[0];
    knots_.push_back(knots_[0] + period);
    values_.push_back(values_[0]);
}

std::size_t CubicSpline1D::locate(double t) const {
    t = std::clamp(t, knots_.front(), knots_.back());
    auto it = std::upper_bound(knots_.begin(), knots_.end(), t);
    std::size_t i = it == knots_.begin() ? 0 : static_cast<std::size_t>(it - knots_.begin()) - 1;
    return std::min(i, segment_count() - 1);
}

double CubicSpline1D::value(double t) const {
    const std::size_t i = locate(t);
    t = std::clamp(t, knots_.front(), knots_.back());
    const double h = knots_[i + 1] - knots_[i];
    const double a = (knots_[i + 1] - t) / h;
    const double b = (t - knots_[i]) / h;
    return a * values_[i] + b * values_[i + 1] +
           ((a * a * a - a) * second_[i] + (b * b * b - b) * second_[i + 1]) * h * h / 6.0;
}

double CubicSpline1D::derivative(double t) const {
    const std::size_t i = locate(t);
    t = std::clamp(t, knots_.front(), knots_.back());
    const double h = knots_[i + 1] - knots_[i];
    const double a = (knots_[i + 1] - t) / h;
    const double b = (t - knots_[i]) / h;
    return (values_[i + 1] - values_[i]) / h +
           ((3.0 * b * b - 1.0) * second_[i + 1] - (3.0 * a * a - 1.0) * second_[i]) * h / 6.0;
}

}  // namespace curvarc
