#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "helly/error.hpp"
#include "helly/gallery.hpp"
#include "helly/generators.hpp"
#include "helly/io.hpp"
#include "helly/suite.hpp"
#include "helly/svg.hpp"
#include "support.hpp"

using namespace test;
using helly::Rational;

namespace {

std::string temp_file(const std::string &name, const std::string &content) {
    const auto path = std::filesystem::temp_directory_path() / ("helly_test_" + name);
    std::ofstream(path) << content;
    return path.string();
}

// Independent validity oracle for a polygonal ball: vertex list closed under
// negation and strictly convex (every consecutive turn is a left turn).
bool valid_symmetric_polygon(const std::vector<QV> &vs) {
    const std::size_t n = vs.size();
    if (n < 4 || n % 2 != 0) return false;
    for (std::size_t i = 0; i < n; ++i) {
        if (!(vs[(i + n / 2) % n] == QV(-vs[i]))) return false;
        if (sgn_cross(vs[i], vs[(i + 1) % n], vs[(i + 2) % n]) <= 0) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("gen_unit_vectors examples") {
    const auto sq = square();
    const QV up = v(0, 1);
    const auto three = helly::gen_unit_vectors(sq, 3, 11, up);
    REQUIRE(three.size() == 3);
    for (const auto &w : three) {
        CHECK(gauge_by_ray(sq, w) == Rational(1));
        CHECK(helly::dot(up, w).sign() >= 0);
    }
    const auto one = helly::gen_unit_vectors(sq, 1, 5);
    REQUIRE(one.size() == 1);
    CHECK(gauge_by_ray(sq, one[0]) == Rational(1));
    CHECK(helly::gen_unit_vectors(sq, 9, 77) == helly::gen_unit_vectors(sq, 9, 77));
}

TEST_CASE("gen_unit_vectors is exact on random balls and the Euclidean ball") {
    const auto circle = helly::UnitBall<Rational>::euclidean();
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const auto ball = helly::gen_random_ball(seed, 12);
        helly::Rng rng(seed);
        const QV u = helly::random_direction(rng);
        for (const auto &w : helly::gen_unit_vectors(ball, 7, seed, u)) {
            CHECK(gauge_by_ray(ball, w) == Rational(1));
            CHECK(helly::dot(u, w).sign() >= 0);
        }
        for (const auto &w : helly::gen_unit_vectors(circle, 5, seed, u)) {
            CHECK(helly::dot(w, w) == Rational(1));
            CHECK(helly::dot(u, w).sign() >= 0);
        }
    }
}

TEST_CASE("gen_random_ball examples") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const auto ball = helly::gen_random_ball(seed, 12);
        CHECK(ball.vertices().size() <= 12);
        CHECK(valid_symmetric_polygon(ball.vertices()));
    }
    CHECK(helly::gen_random_ball(42, 12).vertices() == helly::gen_random_ball(42, 12).vertices());
    CHECK(helly::gen_random_ball(5, 4).vertices().size() == 4);
    CHECK_THROWS_AS(helly::gen_random_ball(1, 3), helly::Error);
}

TEST_CASE("gen_zero_sum_six examples") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto ball = helly::gen_random_ball(seed, 12);
        const auto z = helly::gen_zero_sum_six(ball, seed);
        REQUIRE(z.size() == 6);
        CHECK(helly::sum(z) == v(0, 0));
        for (const auto &w : z) CHECK(gauge_by_ray(ball, w) <= Rational(1));
    }
    const auto sq = square();
    CHECK(helly::gen_zero_sum_six(sq, 9) == helly::gen_zero_sum_six(sq, 9));

    // scaling the ball by 3 scales the sample's gauges by 1/3
    const auto ball = helly::gen_random_ball(17, 10);
    const auto big = helly::scaled_ball(ball, Rational(3));
    for (const auto &w : helly::gen_zero_sum_six(ball, 3)) {
        CHECK(gauge_by_ray(big, w) * Rational(3) == gauge_by_ray(ball, w));
        CHECK(helly::in_ball(big, QV(w * Rational(3))));
    }
}

TEST_CASE("gallery fixtures") {
    const auto names = helly::gallery_names();
    REQUIRE(names.size() == 5);
    for (const auto &name : names) {
        const auto c = helly::gallery_case(name);
        for (const auto &chk : helly::evaluate_case(c)) {
            INFO(name << " " << chk.name << " expected " << chk.expected << " got " << chk.actual);
            CHECK(chk.pass);
        }
    }

    const auto closed = helly::gallery_case("thm3-closed-fails");
    CHECK(gauge_by_ray(closed.ball, helly::sum(closed.vectors)) == q("1/2"));
    Rational lowest(10);
    for (const auto &t : {std::array{0, 1, 2}, std::array{0, 2, 3}, std::array{1, 2, 3}, std::array{2, 3, 4},
                          std::array{0, 1, 3}})
        lowest = std::min(lowest, gauge_by_ray(closed.ball, QV(closed.vectors[t[0]] + closed.vectors[t[1]] +
                                                                closed.vectors[t[2]])));
    CHECK(lowest == Rational(1));

    const auto equality = helly::gallery_case("remark1-equality");
    CHECK(gauge_by_ray(equality.ball, helly::sum(equality.vectors)) == Rational(1));

    // w1 + w2 = (0, 1/100), five of each
    const auto even = helly::gallery_case("even-n");
    CHECK(helly::sum(even.vectors) == v("0", "1/20"));

    const auto tetra = helly::gallery_case("remark4-tetrahedron");
    for (std::size_t i = 0; i < 4; ++i) {
        helly::Vec3 t;
        for (std::size_t j = 0; j < 4; ++j)
            if (j != i) t = t + tetra.vectors3[j];
        CHECK(helly::length(t) == doctest::Approx(1.0).epsilon(1e-12));
    }

    CHECK_THROWS_AS(helly::gallery_case("unknown"), helly::Error);
    try {
        helly::gallery_case("unknown");
    } catch (const helly::Error &e) {
        CHECK(e.code() == helly::ErrorCode::unknown_case);
    }
}

TEST_CASE("run_suite examples") {
    helly::SuiteConfig gallery{.suite = "gallery"};
    const auto g = helly::run_suite(gallery);
    CHECK(g.records.size() == 5);
    CHECK(g.passed == 5);

    helly::SuiteConfig lemma{.suite = "lemma-main", .trials = 1000, .seed = 42};
    const auto r = helly::run_suite(lemma);
    CHECK(r.passed == 1000);
    CHECK(r.failed == 0);
    for (const auto &rec : r.records) CHECK(rec.detail.find("TheoremFalsified") == std::string::npos);

    try {
        helly::run_suite({.suite = "nope"});
        FAIL("expected UnknownSuite");
    } catch (const helly::Error &e) {
        CHECK(e.code() == helly::ErrorCode::unknown_suite);
    }
    try {
        helly::run_suite({.suite = "thm1", .ball = "/nonexistent/ball.json"});
        FAIL("expected IoError");
    } catch (const helly::Error &e) {
        CHECK(e.code() == helly::ErrorCode::io_error);
    }
}

TEST_CASE("reports are deterministic and independent of jobs") {
    for (const char *suite : {"thm1", "thm3", "signs", "symmetry", "ginzburg"}) {
        helly::SuiteConfig c{.suite = suite, .trials = 40, .seed = 1234};
        const std::string once = helly::to_json(helly::run_suite(c)).dump();
        CHECK(once == helly::to_json(helly::run_suite(c)).dump());
        c.jobs = 4;
        const auto parallel = helly::run_suite(c);
        CHECK(once == helly::to_json(parallel).dump());
        for (std::size_t i = 0; i < parallel.records.size(); ++i) CHECK(parallel.records[i].trial == i);
    }
    // a different seed gives different instances
    const auto a = helly::run_suite({.suite = "thm1", .trials = 5, .seed = 1});
    const auto b = helly::run_suite({.suite = "thm1", .trials = 5, .seed = 2});
    CHECK(a.records[0].digest != b.records[0].digest);
}

TEST_CASE("sub-seeds are seed xor trial") {
    // trial 3 of seed 0 and trial 0 of seed 3 draw the same instance
    const auto a = helly::run_suite({.suite = "lemma-conv", .trials = 4, .seed = 0});
    const auto b = helly::run_suite({.suite = "lemma-conv", .trials = 1, .seed = 3});
    CHECK(a.records[3].digest == b.records[0].digest);
}

TEST_CASE("float mode and fixed balls") {
    for (const char *ball : {"maxnorm", "euclidean"}) {
        const auto r = helly::run_suite({.suite = "thm2", .trials = 50, .seed = 8, .mode = helly::Mode::floating, .ball = ball});
        CHECK(r.failed == 0);
    }
    const auto path = temp_file("hex.json", R"({"type":"polygonal","vertices":[["1","0"],["1/2","1"],["-1/2","1"],["-1","0"],["-1/2","-1"],["1/2","-1"]]})");
    const auto r = helly::run_suite({.suite = "thm3", .trials = 30, .seed = 4, .ball = path});
    CHECK(r.failed == 0);
    CHECK_THROWS_AS(helly::run_suite({.suite = "generic", .ball = "euclidean"}), helly::Error);
}

TEST_CASE("fnv1a") {
    CHECK(helly::fnv1a_hex("") == "cbf29ce484222325");
    CHECK(helly::fnv1a_hex("a") == "af63dc4c8601ec8c");
}

TEST_CASE("json parsing") {
    CHECK(helly::parse_json_scalar(helly::Json("3/7")) == q("3/7"));
    CHECK(helly::parse_json_scalar(helly::Json(5)) == Rational(5));
    CHECK(helly::parse_json_scalar(helly::Json(0.1)) == q("1/10"));
    CHECK_THROWS_AS(helly::parse_json_scalar(helly::Json(true)), helly::Error);
    CHECK_THROWS_AS(helly::parse_json_vec(helly::Json::array({"1"})), helly::Error);

    const auto ball = helly::parse_ball(helly::Json::parse(R"({"type":"polygonal","vertices":[["1","1"],["-1","1"],["-1","-1"],["1","-1"]]})"));
    CHECK(ball.vertices() == square().vertices());
    CHECK(!helly::parse_ball(helly::Json::parse(R"({"type":"euclidean"})")).is_polygonal());
    CHECK_THROWS_AS(helly::parse_ball(helly::Json::parse(R"({"type":"round"})")), helly::Error);
    CHECK_THROWS_AS(helly::parse_ball(helly::Json::parse(R"({"type":"polygonal","vertices":[["1","1"],["2","0"],["-1","-1"]]})")), helly::Error);

    const auto vpath = temp_file("vs.json", R"({"vectors":[["1","1"],["-1/2","1"]]})");
    CHECK(helly::load_vectors(vpath) == std::vector<QV>{v(1, 1), v("-1/2", "1")});
    const auto bad = temp_file("bad.json", "{not json");
    try {
        helly::load_vectors(bad);
        FAIL("expected ParseError");
    } catch (const helly::Error &e) {
        CHECK(e.code() == helly::ErrorCode::parse_error);
    }
    try {
        helly::load_polygon("/nonexistent.json");
        FAIL("expected IoError");
    } catch (const helly::Error &e) {
        CHECK(e.code() == helly::ErrorCode::io_error);
    }
    CHECK_THROWS_AS(helly::parse_mode("fast"), helly::Error);
    CHECK(helly::parse_mode("float") == helly::Mode::floating);
}

TEST_CASE("report json layout") {
    const auto r = helly::run_suite({.suite = "claim1", .trials = 3, .seed = 9});
    const auto j = helly::to_json(r);
    CHECK(j["suite"] == "claim1");
    CHECK(j["summary"]["pass"] == 3);
    CHECK(j["summary"]["substantive"] == 3);
    CHECK(j["records"].size() == 3);
    CHECK(j["records"][2]["trial"] == 2);
    CHECK(j["records"][0]["digest"].get<std::string>().size() == 16);
    CHECK(!j.contains("wall_seconds"));
}

TEST_CASE("svg rendering") {
    helly::SvgScene scene;
    scene.title = "a < b";
    scene.ball = helly::max_norm_ball<double>();
    scene.vectors = {{1.0, 0.5}};
    scene.highlight = helly::Vec2<double>{1.0, 0.5};
    const auto s = helly::render_svg(scene);
    CHECK(s.starts_with("<svg"));
    CHECK(s.find("a &lt; b") != std::string::npos);
    CHECK(s.find("<polygon") != std::string::npos);
    CHECK(s.find("marker-end") != std::string::npos);
}
