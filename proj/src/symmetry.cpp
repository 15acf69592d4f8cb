#include "helly/symmetry.hpp"

#include <algorithm>

#include "helly/error.hpp"
#include "helly/geometry.hpp"

namespace helly {

namespace {

template <Scalar T>
bool strictly_inside(const ConvexBody<T> &body, const Vec2<T> &z) {
    return point_in_hull(z, body.vertices()) == OriginPosition::interior;
}

template <Scalar T>
bool on_boundary(const ConvexBody<T> &body, const Vec2<T> &z) {
    return point_in_hull(z, body.vertices()) == OriginPosition::boundary;
}

template <Scalar T>
Vec2<T> ray_exit(const ConvexBody<T> &body, const Vec2<T> &direction) {
    return direction / body_gauge(body, direction);
}

// Chord directions to try: a fan of 4 * |vertices| directions, then
// the vertex directions. If every vertex v had -v on the boundary, -K would
// lie inside K and the body would be symmetric, so for an asymmetric body some
// vertex direction always gives a chord through 0 with a + c != 0.
template <Scalar T>
std::vector<Vec2<T>> chord_candidates(const ConvexBody<T> &body) {
    std::vector<Vec2<T>> dirs;
    // fan points on the boundary of [-1,1]^2: exact, small denominators
    const long q = static_cast<long>(body.vertices().size());
    for (long j = 0; j < q; ++j) {
        const T t = T(2 * j - q) / T(q);
        dirs.push_back({T(1), t});
        dirs.push_back({-t, T(1)});
        dirs.push_back({T(-1), -t});
        dirs.push_back({t, T(-1)});
    }
    for (const auto &v : body.vertices()) dirs.push_back(v);
    return dirs;
}

template <Scalar T>
struct Chord {
    Vec2<T> a, c;  // exits along +d and -d
};

template <Scalar T>
std::optional<Chord<T>> asymmetric_chord(const ConvexBody<T> &body, const Vec2<T> &d) {
    if (is_zero(d)) return std::nullopt;
    Chord<T> ch{ray_exit(body, d), ray_exit(body, Vec2<T>(-d))};
    if (is_zero(Vec2<T>(ch.a + ch.c))) return std::nullopt;
    return ch;
}

// The two points where the line {z : nu.z = level} meets the boundary,
// ordered by their coordinate along d.
template <Scalar T>
std::optional<std::pair<Vec2<T>, Vec2<T>>> line_exits(const ConvexBody<T> &body, const Vec2<T> &nu, const T &level,
                                                      const Vec2<T> &d) {
    const auto &vs = body.vertices();
    std::vector<Vec2<T>> hits;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        const Vec2<T> &p = vs[i], &q = vs[(i + 1) % vs.size()];
        const T fp = dot(nu, p) - level, fq = dot(nu, q) - level;
        if (sign(fp) == 0) hits.push_back(p);
        else if (sign(fp) * sign(fq) < 0) hits.push_back(p + (q - p) * (fp / (fp - fq)));
    }
    if (hits.size() < 2) return std::nullopt;
    auto along = [&](const Vec2<T> &x, const Vec2<T> &y) { return dot(d, x) < dot(d, y); };
    auto [lo, hi] = std::minmax_element(hits.begin(), hits.end(), along);
    if (same_point(*lo, *hi)) return std::nullopt;
    return std::make_pair(*lo, *hi);
}

template <Scalar T>
std::optional<ViolationWitness<T>> halfplane_from_chord(const ConvexBody<T> &body, Chord<T> ch) {
    // The sum a + c points from the shorter end towards the longer one, so b
    // is taken next to the shorter end.
    if (dot(ch.a, ch.a) > dot(ch.c, ch.c)) std::swap(ch.a, ch.c);
    for (int side : {1, -1}) {
        const Vec2<T> normal = perp(ch.a) * T(side);
        T step(1);
        for (int it = 0; it < search_iteration_cap; ++it, step = step / T(2)) {
            const Vec2<T> b = ray_exit(body, Vec2<T>(ch.a + normal * step));
            ViolationWitness<T> w{ch.a, b, ch.c, ch.a + b + ch.c, WitnessKind::halfplane_interior_sum};
            if (verify_witness(body, w)) return w;
        }
    }
    return std::nullopt;
}

template <Scalar T>
std::optional<ViolationWitness<T>> surrounding_from_chord(const ConvexBody<T> &body, const Vec2<T> &d) {
    const auto &vs = body.vertices();
    for (int side : {1, -1}) {
        const Vec2<T> nu = perp(d) * T(side);
        auto best = std::max_element(vs.begin(), vs.end(),
                                     [&](const Vec2<T> &x, const Vec2<T> &y) { return compare(dot(nu, x), dot(nu, y)) < 0; });
        const T top = dot(nu, *best);
        if (std::count_if(vs.begin(), vs.end(), [&](const Vec2<T> &v) { return compare(dot(nu, v), top) == 0; }) != 1)
            continue;  // an edge parallel to the chord: b would not be a single point
        const Vec2<T> b = *best;
        T depth = dot(nu, vs.front());
        for (const auto &v : vs) depth = std::min(depth, T(dot(nu, v)));
        T delta = -depth / T(2);
        for (int it = 0; it < search_iteration_cap; ++it, delta = delta / T(2)) {
            const auto exits = line_exits(body, nu, T(-delta), d);
            if (!exits) continue;
            const auto &[c1, a1] = *exits;
            ViolationWitness<T> w{a1, b, c1, a1 + b + c1, WitnessKind::surrounding_exterior_sum};
            if (verify_witness(body, w)) return w;
        }
    }
    return std::nullopt;
}

}  // namespace

const char *to_string(WitnessKind kind) {
    return kind == WitnessKind::halfplane_interior_sum ? "halfplane_interior_sum" : "surrounding_exterior_sum";
}

template <Scalar T>
ConvexBody<T> make_convex_body(const std::vector<Vec2<T>> &vertices) {
    if (vertices.empty()) throw Error(ErrorCode::not_convex_body, "empty vertex list");
    auto hull = convex_hull(vertices);
    if (hull.size() < 3) throw Error(ErrorCode::not_convex_body, "vertices are collinear");
    if (point_in_hull(Vec2<T>{}, hull) != OriginPosition::interior)
        throw Error(ErrorCode::not_convex_body, "origin is not strictly inside");
    auto first = std::min_element(hull.begin(), hull.end(), polar_less<T>);
    std::rotate(hull.begin(), first, hull.end());
    ConvexBody<T> body;
    for (std::size_t i = 0; i < hull.size(); ++i)
        body.edges_.push_back(functional_through(hull[i], hull[(i + 1) % hull.size()]));
    body.vertices_ = std::move(hull);
    return body;
}

template <Scalar T>
T body_gauge(const ConvexBody<T> &body, const Vec2<T> &z) {
    T best = body.edges().front()(z);
    for (const auto &e : body.edges()) best = std::max(best, e(z));
    return best;
}

template <Scalar T>
bool is_centrally_symmetric(const ConvexBody<T> &body) {
    const auto &vs = body.vertices();
    return std::all_of(vs.begin(), vs.end(), [&](const Vec2<T> &v) {
        return std::any_of(vs.begin(), vs.end(), [&](const Vec2<T> &w) { return same_point(w, Vec2<T>(-v)); });
    });
}

template <Scalar T>
bool verify_witness(const ConvexBody<T> &body, const ViolationWitness<T> &w) {
    if (!same_point(w.h, Vec2<T>(w.a + w.b + w.c))) return false;
    if (same_point(w.a, w.b) || same_point(w.b, w.c) || same_point(w.a, w.c)) return false;
    if (!on_boundary(body, w.a) || !on_boundary(body, w.b) || !on_boundary(body, w.c)) return false;
    const std::vector<Vec2<T>> tri{w.a, w.b, w.c};
    const auto origin = origin_in_hull(tri);
    if (w.kind == WitnessKind::halfplane_interior_sum)
        return origin != OriginPosition::interior && strictly_inside(body, w.h);
    return origin == OriginPosition::interior && !strictly_inside(body, w.h);
}

template <Scalar T>
std::optional<ViolationWitness<T>> find_violation_halfplane(const ConvexBody<T> &body) {
    if (is_centrally_symmetric(body)) return std::nullopt;
    for (const auto &d : chord_candidates(body)) {
        auto ch = asymmetric_chord(body, d);
        if (!ch) continue;
        if (auto w = halfplane_from_chord(body, *ch)) return w;
    }
    throw Error(ErrorCode::search_budget_exceeded, "no halfplane witness within the iteration cap");
}

template <Scalar T>
std::optional<ViolationWitness<T>> find_violation_surrounding(const ConvexBody<T> &body) {
    if (is_centrally_symmetric(body)) return std::nullopt;
    for (const auto &base : chord_candidates(body)) {
        // Small tilts of an asymmetric chord keep a + c != 0 and move the
        // chord off any edge direction.
        T tilt(0);
        for (int j = 0; j <= 16; ++j) {
            const Vec2<T> d = base + perp(base) * tilt;
            tilt = j == 0 ? T(1) / T(16) : tilt / T(2);
            if (!asymmetric_chord(body, d)) continue;
            if (auto w = surrounding_from_chord(body, d)) return w;
        }
    }
    throw Error(ErrorCode::search_budget_exceeded, "no surrounding witness within the iteration cap");
}

#define HELLY_INSTANTIATE(T)                                                                         \
    template ConvexBody<T> make_convex_body<T>(const std::vector<Vec2<T>> &);                       \
    template T body_gauge<T>(const ConvexBody<T> &, const Vec2<T> &);                               \
    template bool is_centrally_symmetric<T>(const ConvexBody<T> &);                                 \
    template bool verify_witness<T>(const ConvexBody<T> &, const ViolationWitness<T> &);            \
    template std::optional<ViolationWitness<T>> find_violation_halfplane<T>(const ConvexBody<T> &); \
    template std::optional<ViolationWitness<T>> find_violation_surrounding<T>(const ConvexBody<T> &);

HELLY_INSTANTIATE(Rational)
HELLY_INSTANTIATE(double)

}  // namespace helly
