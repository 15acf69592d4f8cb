#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "helly/combinatorics.hpp"
#include "helly/error.hpp"
#include "helly/generators.hpp"
#include "helly/theorems.hpp"
#include "support.hpp"

using namespace test;
using helly::ErrorCode;
using helly::VectorMultiset;

namespace {

ErrorCode code_of(auto &&f) {
    try {
        f();
    } catch (const helly::Error &e) {
        return e.code();
    }
    FAIL("no error thrown");
    return ErrorCode::precondition_failed;
}

const auto euc = UnitBall<Rational>::euclidean();

VectorMultiset<Rational> repeat(const QV &x, int k) { return VectorMultiset<Rational>(k, x); }

VectorMultiset<Rational> boundary_example() {
    return {v(1, 1), v(-1, 1), v("0", "-1/2"), v("0", "-1/2"), v("0", "-1/2")};
}

}  // namespace

TEST_CASE("k-sums") {
    const auto s0 = helly::all_ksums<Rational>({v(1, 0), v(0, 1)}, 0);
    REQUIRE(s0.size() == 1);
    CHECK(s0[0].subset.empty());
    CHECK(s0[0].value == QV{});

    const auto s3 = helly::all_ksums<Rational>({v(1, 1), v(-1, 1), v("0", "-1/2")}, 3);
    REQUIRE(s3.size() == 1);
    CHECK(s3[0].value == v("0", "3/2"));

    VectorMultiset<Rational> six;
    helly::Rng rng(3);
    for (int i = 0; i < 6; ++i) six.push_back({rng.rational_in(Rational(-1), Rational(1)), rng.rational_in(Rational(-1), Rational(1))});
    const QV total = helly::sum(six);
    for (std::size_t k = 0; k <= 6; ++k) {
        const auto ks = helly::all_ksums(six, k);
        CHECK(ks.size() == helly::binomial(6, k));
        CHECK(std::is_sorted(ks.begin(), ks.end(), [](const auto &a, const auto &b) { return a.subset < b.subset; }));
        const auto comp = helly::all_ksums(six, 6 - k);
        for (const auto &s : ks) {
            QV direct;
            for (auto i : s.subset) direct += six[i];
            CHECK(direct == s.value);
            // complement sum from the (6-k)-sums
            std::vector<std::size_t> rest;
            for (std::size_t i = 0; i < 6; ++i)
                if (!std::binary_search(s.subset.begin(), s.subset.end(), i)) rest.push_back(i);
            auto it = std::find_if(comp.begin(), comp.end(), [&](const auto &c) { return c.subset == rest; });
            REQUIRE(it != comp.end());
            CHECK(s.value + it->value == total);
        }
    }
    CHECK(helly::all_ksums(six, 3).size() == 20);
}

TEST_CASE("theorem 1 examples") {
    const auto r1 = helly::verify_theorem1(euc, repeat(v(0, 1), 3), v(0, 1));
    CHECK(r1.hypothesis_holds);
    CHECK(r1.conclusion_holds);
    CHECK(r1.total_norm == Rational(3));

    VectorMultiset<Rational> rem1 = repeat(v("-1", "1/10"), 3);
    rem1.push_back(v("1", "1/10"));
    rem1.push_back(v("1", "1/10"));
    const auto r2 = helly::verify_theorem1(square(), rem1, v(0, 1));
    CHECK(r2.hypothesis_holds);
    CHECK(r2.conclusion_holds);
    CHECK(r2.total_norm == Rational(1));
    for (const auto &x : rem1) CHECK(helly::dot(v(0, 1), x).sign() > 0);

    const auto r3 = helly::verify_theorem1(euc, {v(1, 0), v(-1, 0), v(0, 1)}, v(0, 1));
    CHECK(r3.hypothesis_holds);
    CHECK(r3.total_norm == Rational(1));
    CHECK(r3.conclusion_holds);

    CHECK_FALSE(helly::verify_theorem1(euc, {v(1, 0), v(0, 1)}, v(0, 1)).hypothesis_holds);
    CHECK_FALSE(helly::verify_theorem1(euc, {v(0, -1), v(0, 1), v(0, 1)}, v(0, 1)).hypothesis_holds);
    CHECK_FALSE(helly::verify_theorem1(euc, {v(0, 2), v(0, 1), v(0, 1)}, v(0, 1)).hypothesis_holds);
    CHECK(code_of([] { helly::verify_theorem1(euc, {v(0, 1)}, QV{}); }) == ErrorCode::zero_direction);
}

TEST_CASE("halfplane certificate examples") {
    const auto c1 = helly::halfplane_certificate(euc, {v(-1, 0), v(0, 1), v(1, 0)}, v(0, 1));
    CHECK(c1.k == 2);
    CHECK(c1.middle_index == 1);
    CHECK(c1.order == std::vector<std::size_t>{2, 1, 0});
    CHECK(c1.projections == std::vector<Rational>{Rational(0), Rational(1), Rational(0)});
    CHECK(c1.projection_sum == Rational(1));

    const auto c2 = helly::halfplane_certificate(square(), repeat(v(1, 1), 3), v(0, 1));
    CHECK(c2.projections == std::vector<Rational>(3, Rational(1)));
    CHECK(c2.projection_sum == Rational(3));

    const auto c3 = helly::halfplane_certificate(square(), {v(-1, 1), v(0, 1), v(1, 1)}, v(0, 1));
    CHECK(c3.middle_index == 1);
    CHECK(c3.projection_sum >= Rational(1));

    CHECK(code_of([] { helly::halfplane_certificate(euc, {v(0, 1), v(0, -1), v(0, 1)}, v(0, 1)); }) ==
          ErrorCode::hypothesis_failed);
}

TEST_CASE("theorem 1 and certificate on random instances") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const auto ball = seed % 5 == 0 ? euc : helly::gen_random_ball(seed, 12);
        helly::Rng rng(seed);
        const QV u = helly::random_direction(rng);
        const std::size_t n = 3 + 2 * rng.below(4);
        const auto vs = helly::gen_unit_vectors(ball, n, seed, u);
        const auto r = helly::verify_theorem1(ball, vs, u);
        REQUIRE(r.hypothesis_holds);
        REQUIRE(r.conclusion_holds);
        const auto c = helly::halfplane_certificate(ball, vs, u);
        REQUIRE(c.projection_sum >= Rational(1));
        // the tangent never exceeds the gauge, so the projection sum bounds it
        REQUIRE(helly::compare_gauge(ball, helly::sum(vs), c.projection_sum) >= 0);
        // order runs counterclockwise from u turned -90 degrees
        for (std::size_t i = 0; i + 1 < n; ++i) {
            const QV a = vs[c.order[i]], b = vs[c.order[i + 1]];
            REQUIRE(helly::cross(a, b).sign() >= 0);
        }
    }
}

TEST_CASE("theorem 2/3 examples") {
    const auto strict = helly::verify_helly(square(), boundary_example(), true);
    CHECK_FALSE(strict.hypothesis_holds);
    CHECK(strict.total == v("0", "1/2"));
    CHECK(strict.total_norm == q("1/2"));
    CHECK_FALSE(strict.conclusion_holds);
    CHECK(std::any_of(strict.witnesses.begin(), strict.witnesses.end(), [](const auto &w) {
        return w.value == v(1, 0) && w.subset.size() == 3;
    }));
    const auto closed = helly::verify_helly(square(), boundary_example(), false);
    CHECK_FALSE(closed.hypothesis_holds);
    CHECK(std::any_of(closed.witnesses.begin(), closed.witnesses.end(), [](const auto &w) {
        return w.subset == std::vector<std::size_t>{2};
    }));

    const auto ok = helly::verify_helly(euc, repeat(v(0, 1), 3), true);
    CHECK(ok.hypothesis_holds);
    CHECK(ok.conclusion_holds);
    CHECK(ok.total_norm == Rational(3));

    CHECK(code_of([] { helly::verify_helly(euc, repeat(v(0, 1), 4), true); }) == ErrorCode::even_cardinality);
    CHECK(code_of([] { helly::verify_helly(euc, repeat(v(0, 1), 1), true); }) == ErrorCode::too_few);
}

TEST_CASE("theorem 3 on a line") {
    const std::vector<Rational> xs{q("1"), q("9/10"), q("8/10"), q("-1/2"), q("9/10")};
    const auto r = helly::verify_helly_1d(Rational(1), xs, true);
    CHECK(r.hypothesis_holds);
    CHECK(r.conclusion_holds);
    CHECK(r.total.x == q("31/10"));
    // brute force: the smallest 3-sum is 6/5
    Rational smallest(100);
    helly::for_each_combination(5, 3, [&](const std::vector<std::size_t> &s) {
        smallest = std::min(smallest, xs[s[0]] + xs[s[1]] + xs[s[2]]);
    });
    CHECK(smallest == q("6/5"));

    // the same instance embedded in the plane along (3,4)/5 with the Euclidean ball
    VectorMultiset<Rational> vs;
    for (const auto &x : xs) vs.push_back(v("3/5", "4/5") * x);
    const auto planar = helly::verify_helly(euc, vs, true);
    CHECK(planar.hypothesis_holds);
    CHECK(planar.conclusion_holds);
    CHECK(planar.notes.find("collinear") != std::string::npos);

    // an irrational half width: direction (1,1) under the Euclidean ball
    VectorMultiset<Rational> diag{v("0.7", "0.7"), v("0.7", "0.7"), v("-0.1", "-0.1")};
    const auto d = helly::verify_helly(euc, diag, true);
    CHECK(d.hypothesis_holds);  // 3-sum 1.3*(1,1) has length ~1.84
    CHECK(d.conclusion_holds);
    CHECK_FALSE(helly::verify_helly(euc, {v("0.7", "0.7"), v("-0.7", "-0.7"), v("0.7", "0.7")}, true).hypothesis_holds);
}

TEST_CASE("theorems 2 and 3 agree with brute force on random instances") {
    int hyp2 = 0, hyp3 = 0;
    for (std::uint64_t seed = 0; seed < 400; ++seed) {
        const auto ball = helly::gen_random_ball(seed, 10);
        helly::Rng rng(seed);
        const std::size_t n = 3 + 2 * rng.below(3);
        const auto u = helly::random_direction(rng);
        auto vs = helly::gen_unit_vectors(ball, n, seed, u);
        if (seed % 2 == 1)
            for (auto &x : vs) x = x * rng.rational_in(Rational(3, 4), Rational(1), 4);
        for (bool strict : {false, true}) {
            const auto r = helly::verify_helly(ball, vs, strict);
            bool hyp = true;
            for (const auto &x : vs) {
                const Rational g = helly::gauge(ball, x);
                hyp = hyp && (strict ? g <= Rational(1) : g == Rational(1));
            }
            for (const auto &s : helly::all_ksums(vs, 3)) {
                const Rational g = helly::gauge(ball, s.value);
                hyp = hyp && (strict ? g > Rational(1) : g >= Rational(1));
            }
            REQUIRE(r.hypothesis_holds == hyp);
            const Rational total = helly::gauge(ball, helly::sum(vs));
            REQUIRE(r.conclusion_holds == (strict ? total > Rational(1) : total >= Rational(1)));
            REQUIRE_FALSE(r.falsified());
            (strict ? hyp3 : hyp2) += hyp;
        }
    }
    CHECK(hyp2 > 20);
    CHECK(hyp3 > 20);
}

TEST_CASE("corollary examples") {
    const auto r1 = helly::corollary_check(euc, repeat(v(0, 1), 7), 5);
    CHECK(r1.hypothesis_holds);
    CHECK(r1.conclusion_holds);

    const VectorMultiset<Rational> five{v("3/5", "4/5"), v("-3/5", "4/5"), v(0, 1), v(0, 1), v("4/5", "3/5")};
    const auto r2 = helly::corollary_check(euc, five, 5);
    CHECK(r2.hypothesis_holds);
    CHECK(r2.conclusion_holds);
    for (const auto &s : helly::all_ksums(five, 3)) CHECK(helly::compare_gauge(euc, s.value, Rational(1)) > 0);

    const auto r3 = helly::corollary_check(square(), boundary_example(), 5);
    CHECK_FALSE(r3.hypothesis_holds);

    CHECK(code_of([&] { helly::corollary_check(euc, five, 4); }) == ErrorCode::bad_k);
    CHECK(code_of([&] { helly::corollary_check(euc, five, 3); }) == ErrorCode::bad_k);
    CHECK(code_of([&] { helly::corollary_check(euc, five, 7); }) == ErrorCode::bad_k);
    CHECK(code_of([] { helly::corollary_check(euc, repeat(v(0, 1), 3), 5); }) == ErrorCode::too_few);
}

TEST_CASE("lemma 1 examples") {
    const auto a = helly::lemma_conv_check(euc, v(1, 0), v(0, 1), v(-1, 0));
    CHECK(a.origin_in_triangle);
    CHECK(a.sum_in_triangle);

    const double h = std::sqrt(2.0) / 2.0;
    const auto b = helly::lemma_conv_check(UnitBall<double>::euclidean(), Vec2<double>{1, 0}, Vec2<double>{0, 1},
                                           Vec2<double>{h, h});
    CHECK_FALSE(b.origin_in_triangle);
    CHECK_FALSE(b.sum_in_triangle);

    const auto c = helly::lemma_conv_check(square(), v(1, 1), v(-1, 1), v(0, -1));
    CHECK(c.origin_in_triangle);
    CHECK(c.sum_in_triangle);

    CHECK(code_of([] { helly::lemma_conv_check(euc, v(1, 0), v(0, 1), v("1/2", "0")); }) == ErrorCode::not_on_boundary);
}

TEST_CASE("lemma 1 equivalence on random triples") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto ball = seed % 10 == 0 ? euc : helly::gen_random_ball(seed, 12);
        helly::Rng rng(seed);
        for (int i = 0; i < 100; ++i) {
            const QV a = helly::random_boundary_point(ball, rng), b = helly::random_boundary_point(ball, rng),
                     c = helly::random_boundary_point(ball, rng);
            const auto r = helly::lemma_conv_check(ball, a, b, c);
            REQUIRE(r.origin_in_triangle == r.sum_in_triangle);
            REQUIRE(r.origin_in_triangle == in_closed_triangle(QV{}, a, b, c));
        }
    }
}

TEST_CASE("lemma 2 examples") {
    using T3 = helly::Triple;
    CHECK(helly::lemma_main_witness(square(), repeat(QV{}, 6)) == T3{0, 1, 2});
    VectorMultiset<Rational> z = repeat(v(1, 0), 3);
    for (int i = 0; i < 3; ++i) z.push_back(v(-1, 0));
    CHECK(helly::lemma_main_witness(euc, z) == T3{0, 1, 3});

    const VectorMultiset<Rational> m{v(1, 1), v(-1, 1), v("0", "-1/2"), v("0", "-1/2"), v("0", "-1/2"), v("0", "-1/2")};
    const auto t = helly::lemma_main_witness(square(), m);
    CHECK(helly::gauge(square(), m[t[0]] + m[t[1]] + m[t[2]]) <= Rational(1));
    CHECK(t == T3{0, 2, 3});
    CHECK(helly::gauge(square(), m[0] + m[2] + m[5]) == Rational(1));

    CHECK(code_of([] { helly::lemma_main_witness(euc, repeat(v(1, 0), 6)); }) == ErrorCode::precondition_failed);
    CHECK(code_of([] {
              helly::lemma_main_witness(euc, {v(2, 0), v(-2, 0), QV{}, QV{}, QV{}, QV{}});
          }) == ErrorCode::precondition_failed);
}

TEST_CASE("lemma 2 on random zero-sum tuples") {
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        const auto ball = seed % 10 == 0 ? euc : helly::gen_random_ball(seed, 12);
        const auto z = helly::gen_zero_sum_six(ball, seed);
        const auto t = helly::lemma_main_witness(ball, z);
        REQUIRE(helly::in_ball(ball, QV(z[t[0]] + z[t[1]] + z[t[2]])));
        // lexicographically first
        bool earlier = false;
        helly::for_each_combination(6, 3, [&](const std::vector<std::size_t> &s) {
            if (helly::Triple{s[0], s[1], s[2]} >= t) return false;
            earlier = earlier || helly::in_ball(ball, QV(z[s[0]] + z[s[1]] + z[s[2]]));
            return true;
        });
        REQUIRE_FALSE(earlier);
    }
}

TEST_CASE("claim 1") {
    CHECK(helly::claim1_triplets<Rational>(std::vector<Rational>(6, Rational(0))).size() == 20);
    CHECK(helly::claim1_triplets<Rational>({Rational(1), Rational(-1), Rational(0), Rational(0), Rational(0), Rational(0)})
              .size() == 20);

    const std::vector<Rational> x{q("1"), q("1"), q("-2/5"), q("-2/5"), q("-3/5"), q("-3/5")};
    const auto got = helly::claim1_triplets(x);
    std::vector<helly::Triple> brute;
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = i + 1; j < 6; ++j)
            for (std::size_t k = j + 1; k < 6; ++k) {
                const Rational s = x[i] + x[j] + x[k];
                if (s <= Rational(1) && s >= Rational(-1)) brute.push_back({i, j, k});
            }
    CHECK(got == brute);
    CHECK(got.size() >= 12);

    CHECK(code_of([] { helly::claim1_triplets<Rational>({Rational(2), Rational(-2), 0, 0, 0, 0}); }) ==
          ErrorCode::precondition_failed);
    CHECK(code_of([] { helly::claim1_triplets<Rational>({Rational(1), 0, 0, 0, 0, 0}); }) ==
          ErrorCode::precondition_failed);

    helly::Rng rng(77);
    for (int trial = 0; trial < 2000; ++trial) {
        std::vector<Rational> xs;
        Rational total(0);
        while (true) {
            xs.clear();
            total = Rational(0);
            for (int i = 0; i < 5; ++i) {
                xs.push_back(rng.rational_in(Rational(-1), Rational(1), 6));
                total += xs.back();
            }
            if (helly::abs(total) <= Rational(1)) break;
        }
        xs.push_back(-total);
        const auto ts = helly::claim1_triplets(xs);
        REQUIRE(ts.size() >= 12);
        for (const auto &t : ts) {
            helly::Triple comp{};
            std::size_t m = 0;
            for (std::size_t i = 0; i < 6; ++i)
                if (i != t[0] && i != t[1] && i != t[2]) comp[m++] = i;
            REQUIRE(std::find(ts.begin(), ts.end(), comp) != ts.end());
        }
    }
}
