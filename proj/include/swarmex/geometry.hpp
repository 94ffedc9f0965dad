#pragma once

#include <cmath>
#include <numbers>

namespace swarmex {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
    friend bool operator==(Vec2 a, Vec2 b) { return a.x == b.x && a.y == b.y; }
};

inline double norm(Vec2 v) { return std::hypot(v.x, v.y); }

inline double distance(Vec2 a, Vec2 b) { return norm(a - b); }

// Angle wrapped into [0, 2*pi).
inline double wrap_angle(double theta) {
    double t = std::fmod(theta, kTwoPi);
    if (t < 0.0) t += kTwoPi;
    if (t == kTwoPi) t = 0.0;
    return t;
}

// Signed angular difference wrapped into (-pi, pi].
inline double wrap_signed(double theta) {
    double t = std::fmod(theta, kTwoPi);
    if (t <= -std::numbers::pi) t += kTwoPi;
    if (t > std::numbers::pi) t -= kTwoPi;
    return t;
}

inline double deg_to_rad(double deg) { return deg * std::numbers::pi / 180.0; }

// Continuous robot pose; theta is kept in [0, 2*pi).
struct Pose {
    double x = 0.0;
    double y = 0.0;
    double theta = 0.0;

    Vec2 position() const { return {x, y}; }
};

inline Vec2 heading_vector(double theta) { return {std::cos(theta), std::sin(theta)}; }

}  // namespace swarmex
