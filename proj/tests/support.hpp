#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "helly/geometry.hpp"
#include "helly/norms.hpp"
#include "helly/scalar.hpp"
#include "helly/vec2.hpp"

// Helpers and brute-force oracles shared by the unit tests. The oracles only
// use cross/dot products so they stay independent of the library predicates.
namespace test {

using helly::Rational;
using helly::UnitBall;
using helly::Vec2;
using QV = Vec2<Rational>;

inline Rational q(const char *s) { return Rational::parse(s); }
inline QV v(const char *x, const char *y) { return {q(x), q(y)}; }
inline QV v(int x, int y) { return {Rational(x), Rational(y)}; }

inline std::vector<QV> figure1_vertices() {
    return {v("1", "1"), v("-0.3", "1.4"), v("-1", "1"), v("-1", "-1"), v("0.3", "-1.4"), v("1", "-1")};
}

inline UnitBall<Rational> square() { return helly::max_norm_ball<Rational>(); }

// Gauge by intersecting the ray through z with every edge: the ray meets the
// edge [p, p + d] at t*z with t = cross(p, d) / cross(z, d), and gauge = 1/t.
inline Rational gauge_by_ray(const UnitBall<Rational> &ball, const QV &z) {
    if (z.x.sign() == 0 && z.y.sign() == 0) return Rational(0);
    const auto &vs = ball.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i) {
        const QV p = vs[i], d = vs[(i + 1) % vs.size()] - vs[i];
        const Rational den = helly::cross(z, d);
        if (den.sign() == 0) continue;
        const Rational t = helly::cross(p, d) / den;
        const Rational s = helly::cross(p, z) / den;
        if (t.sign() > 0 && s.sign() >= 0 && s <= Rational(1)) return Rational(1) / t;
    }
    return Rational(-1);  // unreachable for a valid ball
}

template <class T>
int sgn_cross(const Vec2<T> &a, const Vec2<T> &b, const Vec2<T> &c) {
    return helly::sign(T(helly::cross(Vec2<T>(b - a), Vec2<T>(c - a))));
}

template <class T>
bool on_closed_segment(const Vec2<T> &p, const Vec2<T> &a, const Vec2<T> &b) {
    if (sgn_cross(a, b, p) != 0) return false;
    return helly::sign(T(helly::dot(Vec2<T>(p - a), Vec2<T>(p - b)))) <= 0;
}

// p in the closed triangle abc, degenerate triangles included.
template <class T>
bool in_closed_triangle(const Vec2<T> &p, const Vec2<T> &a, const Vec2<T> &b, const Vec2<T> &c) {
    const int s1 = sgn_cross(a, b, p), s2 = sgn_cross(b, c, p), s3 = sgn_cross(c, a, p);
    if (sgn_cross(a, b, c) != 0) return (s1 >= 0 && s2 >= 0 && s3 >= 0) || (s1 <= 0 && s2 <= 0 && s3 <= 0);
    return on_closed_segment(p, a, b) || on_closed_segment(p, b, c) || on_closed_segment(p, a, c);
}

// Extreme points by definition: p is extreme iff it is not in a closed
// triangle of other points (segments included as degenerate triangles).
inline std::vector<QV> brute_extreme_points(std::vector<QV> pts) {
    std::sort(pts.begin(), pts.end(), helly::lex_less<Rational>);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    std::vector<QV> out;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        bool extreme = true;
        for (std::size_t a = 0; a < pts.size() && extreme; ++a)
            for (std::size_t b = a; b < pts.size() && extreme; ++b)
                for (std::size_t c = b; c < pts.size() && extreme; ++c)
                    if (a != i && b != i && c != i && in_closed_triangle(pts[i], pts[a], pts[b], pts[c])) extreme = false;
        if (extreme) out.push_back(pts[i]);
    }
    return out;
}

inline std::optional<std::array<std::size_t, 3>> brute_triple(const std::vector<QV> &pts) {
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            for (std::size_t k = j + 1; k < pts.size(); ++k)
                if (in_closed_triangle(QV{}, pts[i], pts[j], pts[k])) return std::array<std::size_t, 3>{i, j, k};
    return std::nullopt;
}

// 0 in the hull, and whether some line through 0 has all points on one side.
inline helly::OriginPosition brute_origin_position(const std::vector<QV> &pts) {
    bool inside = false;
    for (std::size_t i = 0; i < pts.size() && !inside; ++i)
        for (std::size_t j = i; j < pts.size() && !inside; ++j)
            for (std::size_t k = j; k < pts.size() && !inside; ++k)
                inside = in_closed_triangle(QV{}, pts[i], pts[j], pts[k]);
    if (!inside) return helly::OriginPosition::exterior;
    bool supported = std::all_of(pts.begin(), pts.end(), [](const QV &p) { return helly::is_zero(p); });
    for (const auto &p : pts) {
        if (helly::is_zero(p)) continue;
        for (const QV &u : {helly::perp(p), QV(-helly::perp(p))})
            if (std::all_of(pts.begin(), pts.end(), [&](const QV &x) { return helly::dot(u, x).sign() >= 0; }))
                supported = true;
    }
    return supported ? helly::OriginPosition::boundary : helly::OriginPosition::interior;
}

}  // namespace test
