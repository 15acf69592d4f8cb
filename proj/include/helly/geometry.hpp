#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "helly/vec2.hpp"

namespace helly {

enum class OriginPosition { interior, boundary, exterior };

const char *to_string(OriginPosition pos);

/// Sign of the turn a -> b -> c: +1 counterclockwise, -1 clockwise, 0 collinear.
template <Scalar T>
int orientation(const Vec2<T> &a, const Vec2<T> &b, const Vec2<T> &c) {
    return sign(T(cross(Vec2<T>(b - a), Vec2<T>(c - a))));
}

/// True when p lies on the closed segment [a, b].
template <Scalar T>
bool on_segment(const Vec2<T> &p, const Vec2<T> &a, const Vec2<T> &b);

/// Counterclockwise extreme points with collinear points dropped, starting at
/// the lexicographically smallest point. Degenerate inputs come back as a
/// single point or the two endpoints of a segment.
template <Scalar T>
std::vector<Vec2<T>> convex_hull(std::span<const Vec2<T>> points);

template <Scalar T>
OriginPosition origin_in_hull(std::span<const Vec2<T>> points);

/// Classifies p against conv(points).
template <Scalar T>
OriginPosition point_in_hull(const Vec2<T> &p, std::span<const Vec2<T>> points);

/// A direction u with u.p > 0 for every point, present iff the origin is
/// exterior to the hull. The returned u is re-verified before returning.
template <Scalar T>
std::optional<Vec2<T>> strict_separating_direction(std::span<const Vec2<T>> points);

/// Lexicographically first i < j < k whose closed triangle contains the origin.
template <Scalar T>
std::optional<std::array<std::size_t, 3>> caratheodory_triple(std::span<const Vec2<T>> points);

// Overloads so callers holding a vector need not spell out the span type.
template <Scalar T>
std::vector<Vec2<T>> convex_hull(const std::vector<Vec2<T>> &points) {
    return convex_hull(std::span<const Vec2<T>>(points));
}
template <Scalar T>
OriginPosition origin_in_hull(const std::vector<Vec2<T>> &points) {
    return origin_in_hull(std::span<const Vec2<T>>(points));
}
template <Scalar T>
OriginPosition point_in_hull(const Vec2<T> &p, const std::vector<Vec2<T>> &points) {
    return point_in_hull(p, std::span<const Vec2<T>>(points));
}
template <Scalar T>
std::optional<Vec2<T>> strict_separating_direction(const std::vector<Vec2<T>> &points) {
    return strict_separating_direction(std::span<const Vec2<T>>(points));
}
template <Scalar T>
std::optional<std::array<std::size_t, 3>> caratheodory_triple(const std::vector<Vec2<T>> &points) {
    return caratheodory_triple(std::span<const Vec2<T>>(points));
}

}  // namespace helly
