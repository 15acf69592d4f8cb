#include "helly/generators.hpp"

#include <cmath>
#include <numbers>

#include "helly/error.hpp"

namespace helly {

namespace {

constexpr unsigned boundary_bits = 10;

Vec2<Rational> random_ball_point(Rng &rng) {
    if (rng.coin()) {
        // Near a circle of random radius, on a 1/64 grid.
        const double angle = 2.0 * std::numbers::pi * rng.unit_double();
        const double radius = 0.5 + 0.5 * rng.unit_double();
        return {Rational(static_cast<std::int64_t>(std::lround(64 * radius * std::cos(angle))), std::int64_t{64}),
                Rational(static_cast<std::int64_t>(std::lround(64 * radius * std::sin(angle))), std::int64_t{64})};
    }
    const std::int64_t den = rng.uniform_int(1, 8);
    return {Rational(rng.uniform_int(-12, 12), den * 8), Rational(rng.uniform_int(-12, 12), den * 8)};
}

}  // namespace

UnitBall<Rational> gen_random_ball(std::uint64_t seed, std::size_t max_vertices) {
    if (max_vertices < 4) throw Error(ErrorCode::precondition_failed, "a ball needs at least four vertices");
    Rng rng(seed);
    while (true) {
        const auto count = static_cast<std::size_t>(rng.uniform_int(2, static_cast<std::int64_t>(max_vertices / 2)));
        VectorMultiset<Rational> points;
        for (std::size_t i = 0; i < count; ++i) points.push_back(random_ball_point(rng));
        try {
            return symmetric_hull(points);
        } catch (const Error &e) {
            if (e.code() != ErrorCode::degenerate_hull) throw;
        }
    }
}

Vec2<Rational> random_boundary_point(const UnitBall<Rational> &ball, Rng &rng) {
    if (!ball.is_polygonal()) {
        // ((1 - t^2) / (1 + t^2), 2t / (1 + t^2)) is exactly on the unit circle.
        const Rational t = rng.rational_in(Rational(-1), Rational(1), boundary_bits);
        const Rational d = Rational(1) + t * t;
        Vec2<Rational> p{(Rational(1) - t * t) / d, Rational(2) * t / d};
        return rng.coin() ? p : -p;
    }
    const auto &vs = ball.vertices();
    const std::size_t j = rng.below(vs.size());
    const Vec2<Rational> &a = vs[j], &b = vs[(j + 1) % vs.size()];
    return a + (b - a) * rng.unit_rational(boundary_bits);
}

Vec2<Rational> random_point_in_ball(const UnitBall<Rational> &ball, Rng &rng) {
    const Vec2<Rational> p = random_boundary_point(ball, rng);
    return p * rng.unit_rational(boundary_bits);
}

Vec2<Rational> random_direction(Rng &rng) {
    while (true) {
        Vec2<Rational> d{Rational(rng.uniform_int(-8, 8)), Rational(rng.uniform_int(-8, 8))};
        if (!is_zero(d)) return d;
    }
}

VectorMultiset<Rational> gen_unit_vectors(const UnitBall<Rational> &ball, std::size_t n, std::uint64_t seed,
                                          std::optional<Vec2<Rational>> halfplane) {
    Rng rng(seed);
    VectorMultiset<Rational> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Vec2<Rational> v = random_boundary_point(ball, rng);
        if (halfplane && sign(dot(*halfplane, v)) < 0) v = -v;
        out.push_back(v);
    }
    return out;
}

VectorMultiset<Rational> gen_zero_sum_six(const UnitBall<Rational> &ball, std::uint64_t seed) {
    Rng rng(seed);
    while (true) {
        VectorMultiset<Rational> z;
        Vec2<Rational> total;
        for (int i = 0; i < 5; ++i) {
            // Occasionally keep a point on the boundary: those are the tight cases.
            z.push_back(rng.below(4) == 0 ? random_boundary_point(ball, rng) : random_point_in_ball(ball, rng));
            total += z.back();
        }
        z.push_back(-total);
        if (in_ball(ball, z.back())) return z;
    }
}

}  // namespace helly
