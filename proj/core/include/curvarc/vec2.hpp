#pragma once

#include <cmath>
#include <numbers>

namespace curvarc {

/// 2D point / vector with double coordinates.
struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator*(double k, Vec2 v) { return {k * v.x, k * v.y}; }
    friend Vec2 operator*(Vec2 v, double k) { return {k * v.x, k * v.y}; }
    friend Vec2 operator/(Vec2 v, double k) { return {v.x / k, v.y / k}; }
    friend bool operator==(const Vec2&, const Vec2&) = default;
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 v) { return std::hypot(v.x, v.y); }
inline double distance(Vec2 a, Vec2 b) { return norm(b - a); }

/// v rotated by +pi/2 (counterclockwise quarter turn).
inline Vec2 rot90(Vec2 v) { return {-v.y, v.x}; }

inline Vec2 normalized(Vec2 v) {
    double n = norm(v);
    return {v.x / n, v.y / n};
}

/// Direction of the angle theta.
inline Vec2 unit_from_angle(double theta) { return {std::cos(theta), std::sin(theta)}; }

/// Signed angle from a to b in (-pi, pi], counterclockwise positive.
/// atan2 can land on -pi when the cross product underflows to -0; fold that
/// onto +pi so a half-turn has one representation.
inline double signed_angle(Vec2 a, Vec2 b) {
    double ang = std::atan2(cross(a, b), dot(a, b));
    if (ang <= -std::numbers::pi) ang = std::numbers::pi;
    return ang;
}

}  // namespace curvarc
