#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include "curvarc/contour.hpp"
#include "curvarc/invariants.hpp"
#include "curvarc/vec2.hpp"

namespace testutil {

using curvarc::PlanarContour;
using curvarc::Vec2;

inline constexpr double kPi = std::numbers::pi;

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64{seed}; }

inline PlanarContour regular_ngon(std::size_t n, double radius = 1.0, Vec2 center = {0, 0},
                                  bool ccw = true) {
    std::vector<Vec2> pts(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double a = 2.0 * kPi * static_cast<double>(i) / static_cast<double>(n);
        pts[i] = center + radius * Vec2{std::cos(a), ccw ? std::sin(a) : -std::sin(a)};
    }
    return PlanarContour(std::move(pts), true);
}

inline PlanarContour ellipse_contour(std::size_t n, double a, double b) {
    std::vector<Vec2> pts(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = 2.0 * kPi * static_cast<double>(i) / static_cast<double>(n);
        pts[i] = {a * std::cos(t), b * std::sin(t)};
    }
    return PlanarContour(std::move(pts), true);
}

// Sorted angles with a guaranteed positive gap, covering one full turn.
inline std::vector<double> spread_angles(std::mt19937_64& gen, std::size_t n) {
    std::exponential_distribution<double> gap(1.0);
    std::vector<double> g(n);
    double sum = 0.0;
    for (double& v : g) {
        v = gap(gen) + 0.02;
        sum += v;
    }
    std::vector<double> angles(n);
    double acc = std::uniform_real_distribution<double>(0.0, 2.0 * kPi)(gen);
    for (std::size_t i = 0; i < n; ++i) {
        angles[i] = acc;
        acc += g[i] * 2.0 * kPi / sum;
    }
    return angles;
}

// Convex ccw polygon: points on a common circle in angular order.
inline PlanarContour random_convex_polygon(std::mt19937_64& gen, std::size_t max_n = 100) {
    const std::size_t n =
        std::uniform_int_distribution<std::size_t>(3, max_n)(gen);
    const double radius = std::uniform_real_distribution<double>(0.5, 3.0)(gen);
    const Vec2 center{std::uniform_real_distribution<double>(-5.0, 5.0)(gen),
                      std::uniform_real_distribution<double>(-5.0, 5.0)(gen)};
    const std::vector<double> angles = spread_angles(gen, n);
    std::vector<Vec2> pts(n);
    for (std::size_t i = 0; i < n; ++i)
        pts[i] = center + radius * Vec2{std::cos(angles[i]), std::sin(angles[i])};
    return PlanarContour(std::move(pts), true);
}

// Star-shaped (hence simple) ccw polygon with varying radii.
inline PlanarContour random_star_polygon(std::mt19937_64& gen, std::size_t max_n = 200) {
    const std::size_t n =
        std::uniform_int_distribution<std::size_t>(3, max_n)(gen);
    const Vec2 center{std::uniform_real_distribution<double>(-5.0, 5.0)(gen),
                      std::uniform_real_distribution<double>(-5.0, 5.0)(gen)};
    const std::vector<double> angles = spread_angles(gen, n);
    std::uniform_real_distribution<double> radius(0.5, 2.0);
    std::vector<Vec2> pts(n);
    for (std::size_t i = 0; i < n; ++i)
        pts[i] = center + radius(gen) * Vec2{std::cos(angles[i]), std::sin(angles[i])};
    return PlanarContour(std::move(pts), true);
}

// Open polyline: a heading-bounded random walk (no exact reversals).
inline PlanarContour random_open_polyline(std::mt19937_64& gen, std::size_t max_n = 200) {
    const std::size_t n =
        std::uniform_int_distribution<std::size_t>(2, max_n)(gen);
    std::uniform_real_distribution<double> turn(-2.8, 2.8);
    std::uniform_real_distribution<double> step(0.1, 1.5);
    std::vector<Vec2> pts;
    pts.reserve(n);
    pts.push_back({std::uniform_real_distribution<double>(-5.0, 5.0)(gen),
                   std::uniform_real_distribution<double>(-5.0, 5.0)(gen)});
    double heading = std::uniform_real_distribution<double>(0.0, 2.0 * kPi)(gen);
    for (std::size_t i = 1; i < n; ++i) {
        pts.push_back(pts.back() + step(gen) * curvarc::unit_from_angle(heading));
        heading += turn(gen);
    }
    return PlanarContour(std::move(pts), false);
}

inline PlanarContour rigid_copy(const PlanarContour& contour, double angle, Vec2 shift) {
    const double c = std::cos(angle), s = std::sin(angle);
    std::vector<Vec2> pts(contour.points());
    for (Vec2& p : pts) p = Vec2{c * p.x - s * p.y, s * p.x + c * p.y} + shift;
    return PlanarContour(std::move(pts), contour.closed());
}

inline Vec2 apply_rigid(Vec2 p, double angle, Vec2 shift) {
    const double c = std::cos(angle), s = std::sin(angle);
    return Vec2{c * p.x - s * p.y, s * p.x + c * p.y} + shift;
}

// The same traversal reversed, keeping the first point first.
inline PlanarContour reversed_copy(const PlanarContour& contour) {
    std::vector<Vec2> pts;
    pts.reserve(contour.size());
    pts.push_back(contour[0]);
    for (std::size_t i = contour.size(); i-- > 1;) pts.push_back(contour[i]);
    return PlanarContour(std::move(pts), contour.closed());
}

inline double point_segment_distance(Vec2 p, Vec2 a, Vec2 b) {
    const Vec2 ab = b - a;
    const double len2 = dot(ab, ab);
    double t = len2 > 0.0 ? dot(p - a, ab) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    return distance(p, a + t * ab);
}

inline double point_contour_distance(Vec2 p, const PlanarContour& contour) {
    const std::size_t edges = contour.closed() ? contour.size() : contour.size() - 1;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < edges; ++i)
        best = std::min(best, point_segment_distance(p, contour[i], contour.next(i)));
    return best;
}

struct ChordStats {
    double mean = 0.0;
    double stddev = 0.0;
};

inline ChordStats chord_stats(const PlanarContour& contour) {
    const std::size_t edges = contour.closed() ? contour.size() : contour.size() - 1;
    double sum = 0.0;
    std::vector<double> len(edges);
    for (std::size_t i = 0; i < edges; ++i) {
        len[i] = distance(contour[i], contour.next(i));
        sum += len[i];
    }
    ChordStats st;
    st.mean = sum / static_cast<double>(edges);
    double var = 0.0;
    for (double l : len) var += (l - st.mean) * (l - st.mean);
    st.stddev = std::sqrt(var / static_cast<double>(edges));
    return st;
}

inline double turning_sum(const curvarc::TurningAngleSequence& data) {
    double sum = 0.0;
    for (double a : data.angles) sum += a;
    return sum;
}

inline double abs_turning_sum(const curvarc::TurningAngleSequence& data) {
    double sum = 0.0;
    for (double a : data.angles) sum += std::abs(a);
    return sum;
}

// Discrete circle curvature of a chord-sampled R-circle with N vertices.
inline double ngon_curvature(std::size_t n, double radius) {
    const double central = kPi / static_cast<double>(n);
    return (2.0 * central) / (2.0 * radius * std::sin(central));
}

}  // namespace testutil
