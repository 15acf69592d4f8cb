#pragma once

#include <vector>

#include "helly/vec2.hpp"

namespace helly {

/// The linear map z -> p*z.x + q*z.y, equal to 1 on the line through one
/// edge of a polygonal unit ball.
template <Scalar T>
struct EdgeFunctional {
    T p{};
    T q{};

    T operator()(const Vec2<T> &z) const { return p * z.x + q * z.y; }
    friend bool operator==(const EdgeFunctional &, const EdgeFunctional &) = default;
};

/// The functional equal to 1 at both a and b (a, b not collinear with 0).
template <Scalar T>
EdgeFunctional<T> functional_through(const Vec2<T> &a, const Vec2<T> &b) {
    const T det = cross(a, b);
    return {(b.y - a.y) / det, (a.x - b.x) / det};
}

enum class BallKind { euclidean, polygonal };

/// Unit ball of a norm on the plane: the Euclidean disc or a 0-symmetric
/// convex polygon. Polygonal balls are only built through
/// make_polygonal_ball, which enforces the invariants: counterclockwise
/// vertices starting at the smallest polar angle, strictly convex, symmetric,
/// origin strictly inside.
template <Scalar T>
class UnitBall {
public:
    static UnitBall euclidean() { return UnitBall(); }

    BallKind kind() const { return kind_; }
    bool is_polygonal() const { return kind_ == BallKind::polygonal; }
    const std::vector<Vec2<T>> &vertices() const { return vertices_; }
    /// edges()[i] is the functional of the edge vertices()[i] -> vertices()[i+1].
    const std::vector<EdgeFunctional<T>> &edges() const { return edges_; }

    template <Scalar U>
    friend UnitBall<U> make_polygonal_ball(const std::vector<Vec2<U>> &vertices);

private:
    UnitBall() = default;

    BallKind kind_ = BallKind::euclidean;
    std::vector<Vec2<T>> vertices_;
    std::vector<EdgeFunctional<T>> edges_;
};

/// Validates and canonicalizes a polygonal ball. Throws NotConvexBody or
/// NotSymmetric.
template <Scalar T>
UnitBall<T> make_polygonal_ball(const std::vector<Vec2<T>> &vertices);

/// The max norm, unit ball [-1,1]^2.
template <Scalar T>
UnitBall<T> max_norm_ball() {
    return make_polygonal_ball<T>({{T(1), T(1)}, {T(-1), T(1)}, {T(-1), T(-1)}, {T(1), T(-1)}});
}

/// Minkowski functional of the ball. For polygons this is the maximum of the
/// edge functionals. The Euclidean norm of a rational vector is exact only
/// when |z|^2 is a rational square; use compare_gauge for exact decisions.
template <Scalar T>
T gauge(const UnitBall<T> &ball, const Vec2<T> &z);

/// sign(gauge(z) - r) for r >= 0, exact in exact mode for both ball kinds.
template <Scalar T>
int compare_gauge(const UnitBall<T> &ball, const Vec2<T> &z, const T &r);

template <Scalar T>
bool on_unit_sphere(const UnitBall<T> &ball, const Vec2<T> &z) { return compare_gauge(ball, z, T(1)) == 0; }

template <Scalar T>
bool in_ball(const UnitBall<T> &ball, const Vec2<T> &z) { return compare_gauge(ball, z, T(1)) <= 0; }

/// Throws NotPolygonal for the Euclidean ball.
template <Scalar T>
std::vector<EdgeFunctional<T>> edge_functionals(const UnitBall<T> &ball);

/// The point t*direction, t > 0, with gauge 1. Throws ZeroDirection.
template <Scalar T>
Vec2<T> boundary_point(const UnitBall<T> &ball, const Vec2<T> &direction);

/// conv{+-p : p in points}. Throws DegenerateHull when all points lie on one
/// line through the origin.
template <Scalar T>
UnitBall<T> symmetric_hull(const std::vector<Vec2<T>> &points);

/// A functional l with l(v) = 1 and l <= gauge everywhere (a supporting
/// line at the boundary point v). At a polygon vertex the normalized sum of
/// the two incident edge functionals is used.
template <Scalar T>
EdgeFunctional<T> supporting_functional(const UnitBall<T> &ball, const Vec2<T> &v);

/// Polar-angle order on nonzero vectors, angle measured in [0, 2*pi).
template <Scalar T>
bool polar_less(const Vec2<T> &a, const Vec2<T> &b) {
    auto half = [](const Vec2<T> &v) { return (sign(v.y) > 0 || (sign(v.y) == 0 && sign(v.x) > 0)) ? 0 : 1; };
    const int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    return sign(cross(a, b)) > 0;
}

template <Scalar To, Scalar From>
UnitBall<To> ball_cast(const UnitBall<From> &ball) {
    if (!ball.is_polygonal()) return UnitBall<To>::euclidean();
    return make_polygonal_ball(vec_cast<To>(ball.vertices()));
}

/// Multiplies a polygonal ball by a positive factor.
template <Scalar T>
UnitBall<T> scaled_ball(const UnitBall<T> &ball, const T &factor) {
    if (!ball.is_polygonal()) return ball;
    std::vector<Vec2<T>> vs;
    for (const auto &v : ball.vertices()) vs.push_back(v * factor);
    return make_polygonal_ball(vs);
}

}  // namespace helly
