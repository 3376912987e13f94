#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

namespace vmap {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;

inline constexpr double kPi = 3.14159265358979323846;

/// Wrap an angle to (-pi, pi].
inline double wrap_angle(double a) {
    a = std::fmod(a, 2.0 * kPi);
    if (a <= -kPi) a += 2.0 * kPi;
    if (a > kPi) a -= 2.0 * kPi;
    return a;
}

inline double deg2rad(double d) { return d * kPi / 180.0; }
inline double rad2deg(double r) { return r * 180.0 / kPi; }

/// Sign of the cross product (b-a) x (c-a).
inline double orient2d(const Vec2& a, const Vec2& b, const Vec2& c) {
    return (b.x() - a.x()) * (c.y() - a.y()) - (b.y() - a.y()) * (c.x() - a.x());
}

/// True if open segments ab and cd cross at a single interior point.
/// Touching endpoints and collinear overlap do not count.
inline bool segments_properly_cross(const Vec2& a, const Vec2& b,
                                    const Vec2& c, const Vec2& d) {
    const double o1 = orient2d(a, b, c);
    const double o2 = orient2d(a, b, d);
    const double o3 = orient2d(c, d, a);
    const double o4 = orient2d(c, d, b);
    return ((o1 > 0.0 && o2 < 0.0) || (o1 < 0.0 && o2 > 0.0)) &&
           ((o3 > 0.0 && o4 < 0.0) || (o3 < 0.0 && o4 > 0.0));
}

inline double point_segment_dist(const Vec2& p, const Vec2& a, const Vec2& b) {
    const Vec2 ab = b - a;
    const double len2 = ab.squaredNorm();
    if (len2 == 0.0) return (p - a).norm();
    const double t = std::clamp((p - a).dot(ab) / len2, 0.0, 1.0);
    return (p - (a + t * ab)).norm();
}

inline double segment_segment_dist(const Vec2& a, const Vec2& b,
                                   const Vec2& c, const Vec2& d) {
    if (segments_properly_cross(a, b, c, d)) return 0.0;
    return std::min(std::min(point_segment_dist(a, c, d), point_segment_dist(b, c, d)),
                    std::min(point_segment_dist(c, a, b), point_segment_dist(d, a, b)));
}

/// Distance from point to the half-line origin + t*dir, t >= 0 (dir unit).
inline double point_ray_dist(const Vec2& p, const Vec2& origin, const Vec2& dir) {
    const double t = std::max(0.0, (p - origin).dot(dir));
    return (p - (origin + t * dir)).norm();
}

/// Distance between segment ab and the half-line origin + t*dir, t >= 0.
inline double segment_ray_dist(const Vec2& a, const Vec2& b,
                               const Vec2& origin, const Vec2& dir) {
    // Treat the ray as a long segment for the crossing test; beyond that the
    // closest pair involves an endpoint or the ray origin.
    const double reach = (a - origin).norm() + (b - origin).norm() + (b - a).norm() + 1.0;
    const Vec2 far = origin + reach * dir;
    if (segments_properly_cross(a, b, origin, far)) return 0.0;
    return std::min({point_ray_dist(a, origin, dir), point_ray_dist(b, origin, dir),
                     point_segment_dist(origin, a, b)});
}

/// Unsigned angle between two 3D directions, in [0, pi].
inline double angle_between(const Vec3& u, const Vec3& v) {
    const double nu = u.norm(), nv = v.norm();
    if (nu == 0.0 || nv == 0.0) return 0.0;
    const double c = std::clamp(u.dot(v) / (nu * nv), -1.0, 1.0);
    return std::acos(c);
}

inline double angle_between2d(const Vec2& u, const Vec2& v) {
    const double nu = u.norm(), nv = v.norm();
    if (nu == 0.0 || nv == 0.0) return 0.0;
    const double c = std::clamp(u.dot(v) / (nu * nv), -1.0, 1.0);
    return std::acos(c);
}

}  // namespace vmap
