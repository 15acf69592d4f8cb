#include "helly/geometry.hpp"

#include <algorithm>

#include "helly/error.hpp"

namespace helly {

const char *to_string(OriginPosition pos) {
    switch (pos) {
    case OriginPosition::interior: return "interior";
    case OriginPosition::boundary: return "boundary";
    case OriginPosition::exterior: return "exterior";
    }
    return "unknown";
}

template <Scalar T>
bool on_segment(const Vec2<T> &p, const Vec2<T> &a, const Vec2<T> &b) {
    if (orientation(a, b, p) != 0) return false;
    return sign(T(dot(Vec2<T>(p - a), Vec2<T>(p - b)))) <= 0;
}

template <Scalar T>
std::vector<Vec2<T>> convex_hull(std::span<const Vec2<T>> points) {
    std::vector<Vec2<T>> pts(points.begin(), points.end());
    std::sort(pts.begin(), pts.end(), lex_less<T>);
    pts.erase(std::unique(pts.begin(), pts.end(), same_point<T>), pts.end());
    if (pts.size() <= 2) return pts;

    // Andrew's monotone chain; popping on orientation <= 0 drops collinear points.
    std::vector<Vec2<T>> hull;
    hull.reserve(2 * pts.size());
    for (const auto &p : pts) {
        while (hull.size() >= 2 && orientation(hull[hull.size() - 2], hull.back(), p) <= 0) hull.pop_back();
        hull.push_back(p);
    }
    const std::size_t lower = hull.size() + 1;
    for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {
        while (hull.size() >= lower && orientation(hull[hull.size() - 2], hull.back(), *it) <= 0) hull.pop_back();
        hull.push_back(*it);
    }
    hull.pop_back();
    if (hull.size() < 3) return {pts.front(), pts.back()};
    return hull;
}

template <Scalar T>
OriginPosition point_in_hull(const Vec2<T> &p, std::span<const Vec2<T>> points) {
    const auto hull = convex_hull(points);
    if (hull.empty()) return OriginPosition::exterior;
    if (hull.size() == 1) return same_point(hull[0], p) ? OriginPosition::boundary : OriginPosition::exterior;
    if (hull.size() == 2) return on_segment(p, hull[0], hull[1]) ? OriginPosition::boundary : OriginPosition::exterior;

    bool touches = false;
    for (std::size_t i = 0; i < hull.size(); ++i) {
        int o = orientation(hull[i], hull[(i + 1) % hull.size()], p);
        if (o < 0) return OriginPosition::exterior;
        if (o == 0) touches = true;
    }
    return touches ? OriginPosition::boundary : OriginPosition::interior;
}

template <Scalar T>
OriginPosition origin_in_hull(std::span<const Vec2<T>> points) {
    return point_in_hull(Vec2<T>{}, points);
}

template <Scalar T>
std::optional<Vec2<T>> strict_separating_direction(std::span<const Vec2<T>> points) {
    if (points.empty() || origin_in_hull(points) != OriginPosition::exterior) return std::nullopt;

    // The point of the hull nearest the origin is a valid normal: every hull
    // point p satisfies u.p >= |u|^2 > 0.
    const auto hull = convex_hull(points);
    Vec2<T> best = hull.front();
    T best_d2 = dot(best, best);
    if (hull.size() >= 2) {
        for (std::size_t i = 0; i < hull.size(); ++i) {
            const Vec2<T> &a = hull[i];
            const Vec2<T> &b = hull[(i + 1) % hull.size()];
            const Vec2<T> d = b - a;
            const T dd = dot(d, d);
            T t = -dot(a, d) / dd;
            if (sign(t) < 0) t = T(0);
            if (compare(t, T(1)) > 0) t = T(1);
            const Vec2<T> c = a + d * t;
            const T c2 = dot(c, c);
            if (c2 < best_d2) {
                best = c;
                best_d2 = c2;
            }
        }
    }
    for (const auto &p : points)
        if (sign(dot(best, p)) <= 0) return std::nullopt;
    return best;
}

template <Scalar T>
std::optional<std::array<std::size_t, 3>> caratheodory_triple(std::span<const Vec2<T>> points) {
    if (points.size() < 3) throw Error(ErrorCode::precondition_failed, "need at least three points");
    if (origin_in_hull(points) == OriginPosition::exterior) return std::nullopt;
    const std::size_t n = points.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                const std::array<Vec2<T>, 3> tri{points[i], points[j], points[k]};
                if (origin_in_hull(std::span<const Vec2<T>>(tri)) != OriginPosition::exterior)
                    return std::array<std::size_t, 3>{i, j, k};
            }
    return std::nullopt;
}

#define HELLY_INSTANTIATE(T)                                                                                  \
    template bool on_segment<T>(const Vec2<T> &, const Vec2<T> &, const Vec2<T> &);                         \
    template std::vector<Vec2<T>> convex_hull<T>(std::span<const Vec2<T>>);                                   \
    template OriginPosition point_in_hull<T>(const Vec2<T> &, std::span<const Vec2<T>>);                     \
    template OriginPosition origin_in_hull<T>(std::span<const Vec2<T>>);                                      \
    template std::optional<Vec2<T>> strict_separating_direction<T>(std::span<const Vec2<T>>);                 \
    template std::optional<std::array<std::size_t, 3>> caratheodory_triple<T>(std::span<const Vec2<T>>);

HELLY_INSTANTIATE(Rational)
HELLY_INSTANTIATE(double)

}  // namespace helly
