#include "helly/gallery.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "helly/combinatorics.hpp"
#include "helly/error.hpp"
#include "helly/theorems.hpp"

namespace helly {

double dot(const Vec3 &a, const Vec3 &b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
double length(const Vec3 &a) { return std::sqrt(dot(a, a)); }

namespace {

std::string show(const Vec2<Rational> &v) { return "[" + v.x.str() + ", " + v.y.str() + "]"; }
std::string show(bool b) { return b ? "true" : "false"; }

GalleryCheck exact_check(std::string name, const Rational &expected, const Rational &actual) {
    return {std::move(name), expected.str(), actual.str(), expected == actual};
}

GalleryCheck bool_check(std::string name, bool expected, bool actual) {
    return {std::move(name), show(expected), show(actual), expected == actual};
}

GalleryCheck near_check(std::string name, double expected, double actual) {
    return {std::move(name), to_string(expected) + " within " + to_string(tolerance()), to_string(actual),
            std::abs(expected - actual) <= tolerance()};
}

GalleryCase thm3_closed_fails() {
    GalleryCase c;
    c.name = "thm3-closed-fails";
    c.ball_tag = "maxnorm";
    c.ball = max_norm_ball<Rational>();
    const Vec2<Rational> low{Rational(0), Rational(-1, 2)};
    c.vectors = {{Rational(1), Rational(1)}, {Rational(-1), Rational(1)}, low, low, low};
    return c;
}

GalleryCase even_n() {
    GalleryCase c;
    c.name = "even-n";
    c.ball_tag = "euclidean";
    c.k = 5;
    c.epsilon = Rational(1, 100);
    // w1 + w2 = (0, eps); the x coordinate is the double nearest to
    // sqrt(1 - eps^2/4), so |w| = 1 up to rounding.
    const Rational half = c.epsilon / Rational(2);
    const Rational x = Rational::from_double(std::sqrt(1.0 - to_double(half * half)));
    c.vectors.assign(c.k, {-x, half});
    c.vectors.insert(c.vectors.end(), c.k, {x, half});
    return c;
}

GalleryCase remark1_equality() {
    GalleryCase c;
    c.name = "remark1-equality";
    c.ball_tag = "maxnorm";
    c.ball = max_norm_ball<Rational>();
    c.epsilon = Rational(1, 10);
    c.k = 3;
    c.vectors.assign(c.k, {Rational(-1), c.epsilon});
    c.vectors.insert(c.vectors.end(), c.k - 1, {Rational(1), c.epsilon});
    c.u = Vec2<Rational>{Rational(0), Rational(1)};
    return c;
}

GalleryCase remark2_3d() {
    GalleryCase c;
    c.name = "remark2-3d";
    c.ball_tag = "euclidean-3d";
    c.k = 7;
    c.epsilon = Rational(1, 100);
    // u = (1,2,2)/3 with the orthonormal pair e1, e2 spanning its plane.
    const Vec3 u{1.0 / 3, 2.0 / 3, 2.0 / 3}, e1{2.0 / 3, -2.0 / 3, 1.0 / 3}, e2{2.0 / 3, 1.0 / 3, -2.0 / 3};
    const double eps = to_double(c.epsilon), r = std::sqrt(1.0 - eps * eps);
    for (std::size_t i = 0; i < c.k; ++i) {
        const double a = 2.0 * std::numbers::pi * double(i) / double(c.k);
        c.vectors3.push_back(e1 * (r * std::cos(a)) + e2 * (r * std::sin(a)) + u * eps);
    }
    c.u3 = u;
    return c;
}

GalleryCase remark4_tetrahedron() {
    GalleryCase c;
    c.name = "remark4-tetrahedron";
    c.ball_tag = "euclidean-3d";
    const double s = 1.0 / std::sqrt(3.0);
    c.vectors3 = {{s, s, s}, {s, -s, -s}, {-s, s, -s}, {-s, -s, s}};
    return c;
}

std::vector<GalleryCheck> planar_checks(const GalleryCase &c) {
    std::vector<GalleryCheck> out;
    const auto &vs = c.vectors;
    const Vec2<Rational> total = sum(vs);

    if (c.name == "thm3-closed-fails") {
        Rational lowest = gauge(c.ball, Vec2<Rational>(vs[0] + vs[1] + vs[2]));
        for (const auto &s : all_ksums(vs, 3)) lowest = std::min(lowest, gauge(c.ball, s.value));
        out.push_back(exact_check("min_3sum_gauge", Rational(1), lowest));
        out.push_back(bool_check("vectors_in_ball", true,
                                 std::all_of(vs.begin(), vs.end(), [&](const auto &v) { return in_ball(c.ball, v); })));
        out.push_back({"total", "[0, 1/2]", show(total), show(total) == "[0, 1/2]"});
        out.push_back(exact_check("total_gauge", Rational(1, 2), gauge(c.ball, total)));
        out.push_back(bool_check("theorem3_hypothesis", false, verify_helly(c.ball, vs, true).hypothesis_holds));
    } else if (c.name == "even-n") {
        out.push_back(exact_check("n", Rational(10), Rational(static_cast<long>(vs.size()))));
        double worst = 0.0;
        for (const auto &v : vs) worst = std::max(worst, std::abs(to_double(dot(v, v)) - 1.0));
        out.push_back(near_check("unit_deviation", 0.0, worst));
        bool spread = true;
        for (const auto &s : all_ksums(vs, 3)) spread = spread && compare_gauge(c.ball, s.value, Rational(1)) >= 0;
        out.push_back(bool_check("all_3sums_at_least_1", true, spread));
        out.push_back(exact_check("total_norm_k_eps", Rational(static_cast<long>(c.k)) * c.epsilon, gauge(c.ball, total)));
        out.push_back(bool_check("total_below_1", true, compare_gauge(c.ball, total, Rational(1)) < 0));
    } else if (c.name == "remark1-equality") {
        out.push_back(bool_check("dots_positive", true,
                                 std::all_of(vs.begin(), vs.end(), [&](const auto &v) { return dot(*c.u, v).sign() > 0; })));
        out.push_back(bool_check("theorem1_hypothesis", true, verify_theorem1(c.ball, vs, *c.u).hypothesis_holds));
        out.push_back(exact_check("total_gauge", Rational(1), gauge(c.ball, total)));
    }
    return out;
}

std::vector<GalleryCheck> space_checks(const GalleryCase &c) {
    std::vector<GalleryCheck> out;
    const auto &vs = c.vectors3;
    Vec3 total;
    double unit = 0.0;
    for (const auto &v : vs) {
        total = total + v;
        unit = std::max(unit, std::abs(length(v) - 1.0));
    }
    out.push_back(near_check("unit_deviation", 0.0, unit));

    if (c.name == "remark2-3d") {
        double lowest = dot(*c.u3, vs.front());
        for (const auto &v : vs) lowest = std::min(lowest, dot(*c.u3, v));
        out.push_back({"min_dot_u", "> 0", to_string(lowest), lowest > tolerance()});
        const double eps_n = to_double(c.epsilon) * double(c.k);
        out.push_back(near_check("total_norm_eps_n", eps_n, length(total)));
        const Vec3 off = total + *c.u3 * (-eps_n);
        out.push_back(near_check("total_minus_eps_n_u", 0.0, length(off)));
    } else {
        double worst = 0.0;
        for_each_combination(vs.size(), 3, [&](const std::vector<std::size_t> &s) {
            worst = std::max(worst, std::abs(length(vs[s[0]] + vs[s[1]] + vs[s[2]]) - 1.0));
        });
        out.push_back(near_check("3sum_norm_deviation", 0.0, worst));
        out.push_back(near_check("total_norm", 0.0, length(total)));
    }
    return out;
}

}  // namespace

const std::vector<std::string> &gallery_names() {
    static const std::vector<std::string> names{"thm3-closed-fails", "even-n", "remark1-equality", "remark2-3d",
                                                "remark4-tetrahedron"};
    return names;
}

GalleryCase gallery_case(std::string_view name) {
    if (name == "thm3-closed-fails") return thm3_closed_fails();
    if (name == "even-n") return even_n();
    if (name == "remark1-equality") return remark1_equality();
    if (name == "remark2-3d") return remark2_3d();
    if (name == "remark4-tetrahedron") return remark4_tetrahedron();
    throw Error(ErrorCode::unknown_case, "no gallery case named '" + std::string(name) + "'");
}

std::vector<GalleryCheck> evaluate_case(const GalleryCase &c) {
    return c.ball_tag == "euclidean-3d" ? space_checks(c) : planar_checks(c);
}

}  // namespace helly
