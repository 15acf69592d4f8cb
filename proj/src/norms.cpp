#include "helly/norms.hpp"

#include <algorithm>

#include "helly/error.hpp"
#include "helly/geometry.hpp"

namespace helly {

template <Scalar T>
UnitBall<T> make_polygonal_ball(const std::vector<Vec2<T>> &vertices) {
    if (vertices.empty()) throw Error(ErrorCode::not_convex_body, "empty vertex list");
    auto hull = convex_hull(vertices);
    if (hull.size() < 3) throw Error(ErrorCode::not_convex_body, "vertices are collinear");

    for (const auto &v : hull) {
        const Vec2<T> w = -v;
        if (std::none_of(hull.begin(), hull.end(), [&](const Vec2<T> &h) { return same_point(h, w); }))
            throw Error(ErrorCode::not_symmetric, "vertex set differs from its negation");
    }
    if (point_in_hull(Vec2<T>{}, hull) != OriginPosition::interior)
        throw Error(ErrorCode::not_convex_body, "origin is not strictly inside");

    auto first = std::min_element(hull.begin(), hull.end(), polar_less<T>);
    std::rotate(hull.begin(), first, hull.end());

    UnitBall<T> ball;
    ball.kind_ = BallKind::polygonal;
    ball.edges_.reserve(hull.size());
    for (std::size_t i = 0; i < hull.size(); ++i)
        ball.edges_.push_back(functional_through(hull[i], hull[(i + 1) % hull.size()]));
    ball.vertices_ = std::move(hull);
    return ball;
}

template <Scalar T>
T gauge(const UnitBall<T> &ball, const Vec2<T> &z) {
    if (!ball.is_polygonal()) return approx_sqrt(T(dot(z, z)));
    T best = ball.edges().front()(z);
    for (const auto &e : ball.edges()) {
        T value = e(z);
        if (value > best) best = std::move(value);
    }
    return best;
}

template <Scalar T>
int compare_gauge(const UnitBall<T> &ball, const Vec2<T> &z, const T &r) {
    if (!ball.is_polygonal()) return compare(T(dot(z, z)), T(r * r));
    return compare(gauge(ball, z), r);
}

template <Scalar T>
std::vector<EdgeFunctional<T>> edge_functionals(const UnitBall<T> &ball) {
    if (!ball.is_polygonal()) throw Error(ErrorCode::not_polygonal, "edge functionals need a polygonal ball");
    return ball.edges();
}

template <Scalar T>
Vec2<T> boundary_point(const UnitBall<T> &ball, const Vec2<T> &direction) {
    if (is_zero(direction)) throw Error(ErrorCode::zero_direction, "boundary_point of the zero vector");
    return direction / gauge(ball, direction);
}

template <Scalar T>
UnitBall<T> symmetric_hull(const std::vector<Vec2<T>> &points) {
    std::vector<Vec2<T>> signed_points;
    signed_points.reserve(2 * points.size());
    for (const auto &p : points) {
        if (is_zero(p)) continue;
        signed_points.push_back(p);
        signed_points.push_back(-p);
    }
    const bool independent = !signed_points.empty() &&
        std::any_of(signed_points.begin(), signed_points.end(),
                    [&](const Vec2<T> &p) { return sign(cross(signed_points.front(), p)) != 0; });
    if (!independent) throw Error(ErrorCode::degenerate_hull, "points lie on a line through the origin");
    return make_polygonal_ball(signed_points);
}

template <Scalar T>
EdgeFunctional<T> supporting_functional(const UnitBall<T> &ball, const Vec2<T> &v) {
    if (!on_unit_sphere(ball, v)) throw Error(ErrorCode::not_on_boundary, "supporting line needs a unit vector");
    if (!ball.is_polygonal()) {
        const T n2 = dot(v, v);
        return {v.x / n2, v.y / n2};
    }
    std::vector<const EdgeFunctional<T> *> active;
    for (const auto &e : ball.edges())
        if (compare(e(v), T(1)) == 0) active.push_back(&e);
    if (active.size() == 1) return *active.front();
    // A vertex: two incident edges reach 1 there.
    EdgeFunctional<T> sum{active[0]->p + active[1]->p, active[0]->q + active[1]->q};
    const T rho = sum(v);
    return {sum.p / rho, sum.q / rho};
}

#define HELLY_INSTANTIATE(T)                                                                  \
    template UnitBall<T> make_polygonal_ball<T>(const std::vector<Vec2<T>> &);               \
    template T gauge<T>(const UnitBall<T> &, const Vec2<T> &);                               \
    template int compare_gauge<T>(const UnitBall<T> &, const Vec2<T> &, const T &);          \
    template std::vector<EdgeFunctional<T>> edge_functionals<T>(const UnitBall<T> &);        \
    template Vec2<T> boundary_point<T>(const UnitBall<T> &, const Vec2<T> &);                \
    template UnitBall<T> symmetric_hull<T>(const std::vector<Vec2<T>> &);                    \
    template EdgeFunctional<T> supporting_functional<T>(const UnitBall<T> &, const Vec2<T> &);

HELLY_INSTANTIATE(Rational)
HELLY_INSTANTIATE(double)

}  // namespace helly
