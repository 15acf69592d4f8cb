#include "helly/suite.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <optional>
#include <thread>

#include "helly/algorithms.hpp"
#include "helly/error.hpp"
#include "helly/gallery.hpp"
#include "helly/generators.hpp"
#include "helly/io.hpp"
#include "helly/symmetry.hpp"
#include "helly/theorems.hpp"

namespace helly {

const char *to_string(Mode mode) { return mode == Mode::exact ? "exact" : "float"; }

Mode parse_mode(std::string_view text) {
    if (text == "exact") return Mode::exact;
    if (text == "float") return Mode::floating;
    throw Error(ErrorCode::parse_error, "mode must be exact or float, got '" + std::string(text) + "'");
}

const char *to_string(TrialStatus status) {
    switch (status) {
    case TrialStatus::pass: return "pass";
    case TrialStatus::fail: return "fail";
    case TrialStatus::vacuous: return "vacuous";
    }
    return "?";
}

std::string fnv1a_hex(std::string_view text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

namespace {

constexpr std::size_t random_ball_vertices = 12;
constexpr int generator_attempts = 64;

struct Context {
    SuiteConfig config;
    std::optional<UnitBall<Rational>> fixed_ball;  // nullopt: a random ball per trial
};

// Independent streams inside one trial, all derived from the trial sub-seed.
std::uint64_t stream(std::uint64_t subseed, std::uint64_t tag) { return splitmix64(subseed ^ (tag * 0x9e3779b97f4a7c15ULL)); }

UnitBall<Rational> trial_ball(const Context &ctx, std::uint64_t subseed) {
    if (ctx.fixed_ball) return *ctx.fixed_ball;
    return gen_random_ball(stream(subseed, 1), random_ball_vertices);
}

std::string canonical(const UnitBall<Rational> &ball) {
    if (!ball.is_polygonal()) return "euclidean";
    std::string s = "polygon";
    for (const auto &v : ball.vertices()) s += " " + v.x.str() + "," + v.y.str();
    return s;
}

std::string canonical(const VectorMultiset<Rational> &vs) {
    std::string s;
    for (const auto &v : vs) s += " " + v.x.str() + "," + v.y.str();
    return s;
}

std::string show(const Vec2<Rational> &v) { return "[" + v.x.str() + "," + v.y.str() + "]"; }
template <Scalar T>
std::string show(const Vec2<T> &v) { return "[" + to_string(v.x) + "," + to_string(v.y) + "]"; }

std::string show_subset(const std::vector<std::size_t> &s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
    return out + "}";
}

template <Scalar T>
std::vector<std::string> show_witnesses(const VerifyReport<T> &r) {
    std::vector<std::string> out;
    for (const auto &w : r.witnesses) out.push_back("S=" + show_subset(w.subset) + " sum=" + show(w.value));
    return out;
}

// A unit vector along d (d != 0); for the Euclidean ball only when |d| is rational.
std::optional<Vec2<Rational>> unit_along(const UnitBall<Rational> &ball, const Vec2<Rational> &d) {
    if (ball.is_polygonal()) return boundary_point(ball, d);
    const auto len = exact_sqrt(dot(d, d));
    if (!len) return std::nullopt;
    return d / *len;
}

// Halfplane normal: a rational unit vector for the Euclidean ball so the
// boundary line direction perp(u) also has a rational unit vector.
Vec2<Rational> halfplane_normal(const UnitBall<Rational> &ball, Rng &rng) {
    return ball.is_polygonal() ? random_direction(rng) : random_boundary_point(ball, rng);
}

std::size_t odd_count(Rng &rng, std::size_t lo, std::size_t hi) {
    return lo + 2 * rng.below((hi - lo) / 2 + 1);
}

template <Scalar T>
VectorMultiset<T> cast_all(const VectorMultiset<Rational> &vs) { return vec_cast<T>(vs); }

// ---------------------------------------------------------------- thm1

template <Scalar T>
TrialRecord thm1_trial(const Context &ctx, std::uint64_t subseed) {
    Rng rng(subseed);
    const auto ball = trial_ball(ctx, subseed);
    const Vec2<Rational> u = halfplane_normal(ball, rng);
    const std::size_t n = odd_count(rng, 3, 9);
    auto vs = gen_unit_vectors(ball, n, stream(subseed, 2), u);

    TrialRecord rec;
    rec.family = "halfplane";
    if (rng.below(4) == 0) {
        // a vector on the boundary line of the halfplane
        if (auto b = unit_along(ball, rng.coin() ? perp(u) : Vec2<Rational>(-perp(u)))) {
            vs[rng.below(n)] = *b;
            rec.family += "+boundary";
        }
    }
    if (rng.below(4) == 0) {
        vs[rng.below(n)] = vs[rng.below(n)];
        rec.family += "+repeat";
    }
    rec.digest = fnv1a_hex(canonical(ball) + "|" + show(u) + "|" + canonical(vs));

    const auto tb = ball_cast<T>(ball);
    const auto tv = cast_all<T>(vs);
    const Vec2<T> tu = vec_cast<T>(u);
    const auto r = verify_theorem1(tb, tv, tu);
    rec.detail = "n=" + std::to_string(n) + " total_norm=" + to_string(r.total_norm);
    if (!r.hypothesis_holds) {
        rec.status = TrialStatus::vacuous;
        rec.detail += "; " + r.notes;
        return rec;
    }
    if (!r.conclusion_holds) {
        rec.status = TrialStatus::fail;
        rec.detail += "; sum has norm below 1";
        return rec;
    }
    const auto cert = halfplane_certificate(tb, tv, tu);
    rec.witnesses.push_back("certificate k=" + std::to_string(cert.k) + " middle=" + std::to_string(cert.middle_index) +
                            " projection_sum=" + to_string(cert.projection_sum));
    rec.status = compare(cert.projection_sum, T(1)) >= 0 ? TrialStatus::pass : TrialStatus::fail;
    return rec;
}

// ---------------------------------------------------------------- thm2 / thm3

// Most clockwise member, measured from u turned -90 degrees.
Vec2<Rational> clockwise_extreme(const VectorMultiset<Rational> &s) {
    Vec2<Rational> v = s.front();
    for (const auto &w : s)
        if (cross(w, v).sign() > 0) v = w;
    return v;
}

void shuffle(VectorMultiset<Rational> &vs, Rng &rng) {
    for (std::size_t i = vs.size(); i > 1; --i) std::swap(vs[i - 1], vs[rng.below(i)]);
}

VectorMultiset<Rational> collinear_units(const UnitBall<Rational> &ball, Rng &rng, std::size_t n) {
    std::optional<Vec2<Rational>> b;
    while (!b) b = unit_along(ball, ball.is_polygonal() ? random_direction(rng) : random_boundary_point(ball, rng));
    VectorMultiset<Rational> vs;
    for (std::size_t i = 0; i < n; ++i) vs.push_back(rng.coin() ? *b : Vec2<Rational>(-*b));
    return vs;
}

struct Instance {
    VectorMultiset<Rational> vectors;
    std::string family;
};

Instance thm2_instance(const UnitBall<Rational> &ball, std::size_t trial, std::uint64_t subseed) {
    Rng rng(subseed);
    if (trial % 10 == 9) return {collinear_units(ball, rng, odd_count(rng, 3, 9)), "collinear"};
    const Vec2<Rational> u = halfplane_normal(ball, rng);
    if (rng.coin()) return {gen_unit_vectors(ball, odd_count(rng, 3, 9), stream(subseed, 2), u), "halfplane"};
    // Antipodal pairs (v, -v) around the clockwise-extreme v keep every
    // triple inside a closed halfplane or summing to a unit vector.
    auto vs = gen_unit_vectors(ball, odd_count(rng, 1, 5), stream(subseed, 2), u);
    const Vec2<Rational> v = clockwise_extreme(vs);
    const std::size_t pairs = 1 + rng.below(2);
    for (std::size_t p = 0; p < pairs; ++p) {
        vs.push_back(v);
        vs.push_back(-v);
    }
    shuffle(vs, rng);
    return {vs, "antipodal"};
}

// Vectors of B, all 3-sums outside B: unit halfplane vectors shrunk by
// factors close enough to 1 that the smallest 3-sum stays above 1.
std::optional<VectorMultiset<Rational>> shrunk_halfplane(const UnitBall<Rational> &ball, Rng &rng, std::size_t n) {
    const Vec2<Rational> u = halfplane_normal(ball, rng);
    auto vs = gen_unit_vectors(ball, n, rng.next(), u);
    Rational lowest(4);
    for (const auto &s : all_ksums(vs, 3)) lowest = std::min(lowest, gauge(ball, s.value));
    if (lowest <= Rational(1)) return std::nullopt;
    const Rational floor = std::max(Rational(3, 4), Rational(1) - (lowest - Rational(1)) / Rational(4));
    for (auto &v : vs)
        if (rng.coin()) v = v * rng.rational_in(floor, Rational(1), 8);
    return vs;
}

bool strict_hypothesis(const UnitBall<Rational> &ball, const VectorMultiset<Rational> &vs) {
    return verify_helly(ball, vs, true).hypothesis_holds;
}

Instance thm3_instance(const UnitBall<Rational> &ball, std::size_t trial, std::uint64_t subseed, bool allow_collinear,
                       std::size_t n_lo = 3, std::size_t n_hi = 9) {
    Rng rng(subseed);
    const std::size_t n = odd_count(rng, n_lo, n_hi);
    if (allow_collinear && trial % 10 == 9) {
        std::optional<Vec2<Rational>> b;
        while (!b) b = unit_along(ball, ball.is_polygonal() ? random_direction(rng) : random_boundary_point(ball, rng));
        for (int attempt = 0; attempt < generator_attempts; ++attempt) {
            VectorMultiset<Rational> vs;
            for (std::size_t i = 0; i < n; ++i) {
                const Rational x = rng.below(4) == 0 ? rng.rational_in(Rational(-1, 3), Rational(0), 8)
                                                     : rng.rational_in(Rational(2, 3), Rational(1), 8);
                vs.push_back(*b * x);
            }
            if (rng.coin())
                for (auto &v : vs) v = -v;
            if (strict_hypothesis(ball, vs)) return {vs, "collinear"};
        }
    }
    if (rng.below(3) == 0) {
        for (int attempt = 0; attempt < generator_attempts; ++attempt) {
            auto vs = shrunk_halfplane(ball, rng, n);
            if (!vs) continue;
            const std::size_t i = rng.below(n);
            (*vs)[i] = -(*vs)[i];
            if (strict_hypothesis(ball, *vs)) return {*vs, "negated"};
        }
    }
    for (int attempt = 0;; ++attempt) {
        auto vs = shrunk_halfplane(ball, rng, n);
        if (vs && (strict_hypothesis(ball, *vs) || attempt + 1 >= generator_attempts)) return {*vs, "shrunk"};
    }
}

template <Scalar T>
TrialRecord helly_trial(const Context &ctx, std::size_t trial, std::uint64_t subseed, bool strict) {
    const auto ball = trial_ball(ctx, subseed);
    const Instance inst = strict ? thm3_instance(ball, trial, stream(subseed, 3), true)
                                 : thm2_instance(ball, trial, stream(subseed, 3));
    TrialRecord rec;
    rec.family = inst.family;
    rec.digest = fnv1a_hex(canonical(ball) + "|" + canonical(inst.vectors));
    const auto r = verify_helly(ball_cast<T>(ball), cast_all<T>(inst.vectors), strict);
    rec.detail = "n=" + std::to_string(inst.vectors.size()) + " total_norm=" + to_string(r.total_norm);
    if (!r.notes.empty()) rec.detail += "; " + r.notes;
    rec.status = !r.hypothesis_holds ? TrialStatus::vacuous : r.conclusion_holds ? TrialStatus::pass : TrialStatus::fail;
    if (rec.status != TrialStatus::pass) rec.witnesses = show_witnesses(r);
    return rec;
}

template <Scalar T>
TrialRecord corollary_trial(const Context &ctx, std::size_t trial, std::uint64_t subseed) {
    const auto ball = trial_ball(ctx, subseed);
    const Instance inst = thm3_instance(ball, trial, stream(subseed, 3), false, 7, 9);
    TrialRecord rec;
    rec.family = inst.family + "-n" + std::to_string(inst.vectors.size());
    rec.digest = fnv1a_hex(canonical(ball) + "|" + canonical(inst.vectors));
    const auto tb = ball_cast<T>(ball);
    const auto tv = cast_all<T>(inst.vectors);
    rec.status = TrialStatus::pass;
    for (std::size_t k : {5, 7}) {
        const auto r = corollary_check(tb, tv, k);
        rec.detail += (rec.detail.empty() ? "" : "; ") + r.notes;
        if (!r.hypothesis_holds) {
            rec.status = TrialStatus::vacuous;
            return rec;
        }
        if (!r.conclusion_holds) {
            rec.status = TrialStatus::fail;
            auto w = show_witnesses(r);
            rec.witnesses.insert(rec.witnesses.end(), w.begin(), w.end());
        }
    }
    return rec;
}

// ---------------------------------------------------------------- lemmas

template <Scalar T>
TrialRecord lemma_conv_trial(const Context &ctx, std::uint64_t subseed) {
    Rng rng(subseed);
    const auto ball = trial_ball(ctx, subseed);
    const VectorMultiset<Rational> abc{random_boundary_point(ball, rng), random_boundary_point(ball, rng),
                                       random_boundary_point(ball, rng)};
    TrialRecord rec;
    rec.digest = fnv1a_hex(canonical(ball) + "|" + canonical(abc));
    const auto tb = ball_cast<T>(ball);
    const auto t = cast_all<T>(abc);
    const auto r = lemma_conv_check(tb, t[0], t[1], t[2]);
    rec.family = r.origin_in_triangle ? "origin-inside" : "origin-outside";
    rec.detail = std::string("origin_in_triangle=") + (r.origin_in_triangle ? "true" : "false") +
                 " sum_in_triangle=" + (r.sum_in_triangle ? "true" : "false");
    rec.status = r.origin_in_triangle == r.sum_in_triangle ? TrialStatus::pass : TrialStatus::fail;
    return rec;
}

template <Scalar T>
TrialRecord lemma_main_trial(const Context &ctx, std::uint64_t subseed) {
    const auto ball = trial_ball(ctx, subseed);
    const auto z = gen_zero_sum_six(ball, stream(subseed, 2));
    TrialRecord rec;
    rec.family = "zero-sum-six";
    rec.digest = fnv1a_hex(canonical(ball) + "|" + canonical(z));
    const auto tb = ball_cast<T>(ball);
    const auto tz = cast_all<T>(z);
    try {
        const Triple t = lemma_main_witness(tb, tz);
        const bool verified = in_ball(tb, Vec2<T>(tz[t[0]] + tz[t[1]] + tz[t[2]]));
        rec.witnesses.push_back("triple " + show_subset({t[0], t[1], t[2]}));
        rec.status = verified ? TrialStatus::pass : TrialStatus::fail;
    } catch (const Error &e) {
        if (e.code() != ErrorCode::theorem_falsified) throw;
        rec.status = TrialStatus::fail;
        rec.detail = e.what();
    }
    return rec;
}

template <Scalar T>
TrialRecord claim1_trial(const Context &, std::uint64_t subseed) {
    Rng rng(subseed);
    std::vector<Rational> xs;
    while (true) {
        xs.clear();
        Rational total(0);
        for (int i = 0; i < 5; ++i) {
            xs.push_back(rng.rational_in(Rational(-1), Rational(1), 10));
            total += xs.back();
        }
        if (abs(total) <= Rational(1)) {
            xs.push_back(-total);
            break;
        }
    }
    TrialRecord rec;
    rec.family = "zero-sum-reals";
    std::string text;
    for (const auto &x : xs) text += " " + x.str();
    rec.digest = fnv1a_hex(text);
    std::vector<T> tx;
    for (const auto &x : xs) tx.push_back(scalar_cast<T>(x));
    const auto ts = claim1_triplets(tx);
    bool closed = true;
    for (const auto &t : ts) {
        Triple comp{};
        std::size_t m = 0;
        for (std::size_t i = 0; i < 6; ++i)
            if (i != t[0] && i != t[1] && i != t[2]) comp[m++] = i;
        closed = closed && std::find(ts.begin(), ts.end(), comp) != ts.end();
    }
    rec.detail = "triplets=" + std::to_string(ts.size()) + (closed ? "" : " complement closure broken");
    rec.status = ts.size() >= 12 && closed ? TrialStatus::pass : TrialStatus::fail;
    return rec;
}

// ---------------------------------------------------------------- algorithms

template <Scalar T>
TrialRecord signs_trial(const Context &ctx, std::uint64_t subseed) {
    Rng rng(subseed);
    const auto ball = trial_ball(ctx, subseed);
    const std::size_t n = 1 + rng.below(11);
    const auto vs = gen_unit_vectors(ball, n, stream(subseed, 2));
    TrialRecord rec;
    rec.family = "n" + std::to_string(n);
    rec.digest = fnv1a_hex(canonical(ball) + "|" + canonical(vs));
    const auto tb = ball_cast<T>(ball);
    const auto tv = cast_all<T>(vs);
    try {
        const auto signs = choose_signs(tb, tv);
        const auto check = check_signs(tb, tv, signs);
        std::string s;
        for (int e : signs) s += e > 0 ? '+' : '-';
        rec.witnesses.push_back("signs " + s);
        rec.detail = "odd subsets checked=" + std::to_string(check.subsets_checked) +
                     " failures=" + std::to_string(check.failures);
        rec.status = check.exhaustive && check.failures == 0 ? TrialStatus::pass : TrialStatus::fail;
    } catch (const Error &e) {
        if (e.code() != ErrorCode::theorem_falsified) throw;
        rec.status = TrialStatus::fail;
        rec.detail = e.what();
    }
    return rec;
}

TrialRecord ginzburg_trial(const Context &ctx, std::uint64_t subseed) {
    Rng rng(subseed);
    const double pi = std::numbers::pi;
    const double phi = 2 * pi * rng.unit_double();
    const Vec2<double> u{std::cos(phi), std::sin(phi)};
    const std::size_t n = odd_count(rng, 1, 9);
    VectorMultiset<double> vs;
    bool on_line = false;
    for (std::size_t i = 0; i < n; ++i) {
        double a = pi * rng.unit_double();
        if (rng.below(6) == 0) {
            a = rng.coin() ? 0.0 : pi;
            on_line = true;
        }
        const double w = phi - pi / 2 + a;
        vs.push_back({std::cos(w), std::sin(w)});
    }
    if (rng.below(5) == 0 && n > 1) vs[1] = vs[0];
    TrialRecord rec;
    rec.family = on_line ? "halfplane+boundary" : "halfplane";
    std::string text = show(u);
    for (const auto &v : vs) text += " " + show(v);
    rec.digest = fnv1a_hex(text);

    const double tol = ctx.config.tol;
    const auto trace = ginzburg_reduce(vs, u);
    bool monotone = true;
    for (std::size_t i = 0; i + 1 < trace.steps.size(); ++i)
        monotone = monotone && trace.steps[i + 1].norm <= trace.steps[i].norm + tol;
    monotone = monotone && trace.final_norm <= trace.steps.back().norm + tol;
    const double nearest = std::round(trace.final_norm);
    const bool odd = std::abs(trace.final_norm - nearest) <= tol && static_cast<long>(nearest) % 2 == 1;
    const bool at_least_one = trace.final_norm >= 1.0 - tol;
    std::string norms;
    for (const auto &s : trace.steps) norms += (norms.empty() ? "" : " ") + to_string(s.norm);
    rec.witnesses.push_back("norms " + norms + " -> " + to_string(trace.final_norm));
    rec.detail = std::string("monotone=") + (monotone ? "true" : "false") + " odd=" + (odd ? "true" : "false");
    rec.status = monotone && odd && at_least_one && trace.steps.size() == n ? TrialStatus::pass : TrialStatus::fail;
    return rec;
}

TrialRecord generic_trial(const Context &ctx, std::uint64_t subseed) {
    Rng rng(subseed);
    const auto ball = trial_ball(ctx, subseed);
    const std::size_t n = 1 + rng.below(7);
    const auto vs = gen_unit_vectors(ball, n, stream(subseed, 2));
    const Rational lambda(9, 10), epsilon(1, 100);
    TrialRecord rec;
    rec.family = "n" + std::to_string(n);
    rec.digest = fnv1a_hex(canonical(ball) + "|" + canonical(vs));
    try {
        const auto us = make_generic(ball, vs, lambda, epsilon, stream(subseed, 3));
        const auto g = check_genericity(ball, vs, us, lambda, epsilon);
        rec.detail = "values_checked=" + std::to_string(g.values_checked) + " max_deviation=" + g.max_deviation.str();
        rec.status = g.ok() ? TrialStatus::pass : TrialStatus::fail;
        if (!g.ok())
            rec.witnesses.push_back(std::string("conditions=") + (g.conditions_hold ? "ok" : "broken") +
                                    " gauges=" + (g.gauges_distinct ? "distinct" : "repeated") +
                                    " proximity=" + (g.proximity_holds ? "ok" : "broken"));
    } catch (const Error &e) {
        if (e.code() != ErrorCode::sampling_exhausted && e.code() != ErrorCode::theorem_falsified) throw;
        rec.status = TrialStatus::fail;
        rec.detail = e.what();
    }
    return rec;
}

// ---------------------------------------------------------------- symmetry

template <Scalar T>
std::string show_witness(const ViolationWitness<T> &w) {
    return std::string(to_string(w.kind)) + " a=" + show(w.a) + " b=" + show(w.b) + " c=" + show(w.c) + " h=" + show(w.h);
}

template <Scalar T>
TrialRecord symmetry_trial(const Context &, std::uint64_t subseed) {
    Rng rng(subseed);
    const auto sym = gen_random_ball(stream(subseed, 1), random_ball_vertices).vertices();
    // Break central symmetry by pushing one vertex outwards.
    std::vector<Vec2<Rational>> asym;
    ConvexBody<Rational> probe = make_convex_body(sym);
    for (int attempt = 0; attempt < generator_attempts; ++attempt) {
        asym = sym;
        asym[rng.below(asym.size())] *= Rational(1) + rng.rational_in(Rational(1, 20), Rational(1, 4), 6);
        probe = make_convex_body(asym);
        if (!is_centrally_symmetric(probe)) break;
    }
    TrialRecord rec;
    rec.family = "symmetric+asymmetric";
    rec.digest = fnv1a_hex(canonical(sym) + "|" + canonical(asym));

    const auto ks = make_convex_body(vec_cast<T>(sym));
    const auto ka = make_convex_body(vec_cast<T>(asym));
    std::vector<std::string> problems;
    if (!is_centrally_symmetric(ks)) problems.push_back("symmetric polygon reported asymmetric");
    if (find_violation_halfplane(ks)) problems.push_back("witness (i) on a symmetric polygon");
    if (find_violation_surrounding(ks)) problems.push_back("witness (ii) on a symmetric polygon");
    if (is_centrally_symmetric(ka)) problems.push_back("perturbed polygon reported symmetric");
    try {
        const auto wi = find_violation_halfplane(ka);
        if (!wi || !verify_witness(ka, *wi)) problems.push_back("no verified witness (i)");
        else rec.witnesses.push_back(show_witness(*wi));
        const auto wii = find_violation_surrounding(ka);
        if (!wii || !verify_witness(ka, *wii)) problems.push_back("no verified witness (ii)");
        else rec.witnesses.push_back(show_witness(*wii));
    } catch (const Error &e) {
        if (e.code() != ErrorCode::search_budget_exceeded) throw;
        problems.push_back(e.what());
    }
    rec.detail = "vertices " + std::to_string(ks.vertices().size()) + "/" + std::to_string(ka.vertices().size());
    for (const auto &p : problems) rec.detail += "; " + p;
    rec.status = problems.empty() ? TrialStatus::pass : TrialStatus::fail;
    return rec;
}

// ---------------------------------------------------------------- gallery

TrialRecord gallery_trial(std::size_t index) {
    const auto c = gallery_case(gallery_names()[index]);
    TrialRecord rec;
    rec.family = c.name;
    std::string text = c.name + "|" + c.ball_tag + "|" + canonical(c.vectors);
    for (const auto &v : c.vectors3) text += " " + to_string(v.x) + "," + to_string(v.y) + "," + to_string(v.z);
    rec.digest = fnv1a_hex(text);
    bool all = true;
    for (const auto &chk : evaluate_case(c)) {
        all = all && chk.pass;
        rec.witnesses.push_back(chk.name + ": expected " + chk.expected + ", got " + chk.actual +
                                (chk.pass ? "" : " (FAILED)"));
    }
    rec.status = all ? TrialStatus::pass : TrialStatus::fail;
    return rec;
}

using TrialFn = std::function<TrialRecord(const Context &, std::size_t, std::uint64_t)>;

template <template <class> class F>
TrialFn by_mode() {
    return [](const Context &ctx, std::size_t trial, std::uint64_t subseed) {
        return ctx.config.mode == Mode::exact ? F<Rational>{}(ctx, trial, subseed) : F<double>{}(ctx, trial, subseed);
    };
}

template <Scalar T> struct Thm1 { TrialRecord operator()(const Context &c, std::size_t, std::uint64_t s) { return thm1_trial<T>(c, s); } };
template <Scalar T> struct Thm2 { TrialRecord operator()(const Context &c, std::size_t i, std::uint64_t s) { return helly_trial<T>(c, i, s, false); } };
template <Scalar T> struct Thm3 { TrialRecord operator()(const Context &c, std::size_t i, std::uint64_t s) { return helly_trial<T>(c, i, s, true); } };
template <Scalar T> struct Cor { TrialRecord operator()(const Context &c, std::size_t i, std::uint64_t s) { return corollary_trial<T>(c, i, s); } };
template <Scalar T> struct LemConv { TrialRecord operator()(const Context &c, std::size_t, std::uint64_t s) { return lemma_conv_trial<T>(c, s); } };
template <Scalar T> struct LemMain { TrialRecord operator()(const Context &c, std::size_t, std::uint64_t s) { return lemma_main_trial<T>(c, s); } };
template <Scalar T> struct Claim1 { TrialRecord operator()(const Context &c, std::size_t, std::uint64_t s) { return claim1_trial<T>(c, s); } };
template <Scalar T> struct Signs { TrialRecord operator()(const Context &c, std::size_t, std::uint64_t s) { return signs_trial<T>(c, s); } };
template <Scalar T> struct Sym { TrialRecord operator()(const Context &c, std::size_t, std::uint64_t s) { return symmetry_trial<T>(c, s); } };

TrialFn suite_function(const std::string &name) {
    if (name == "thm1") return by_mode<Thm1>();
    if (name == "thm2") return by_mode<Thm2>();
    if (name == "thm3") return by_mode<Thm3>();
    if (name == "corollary") return by_mode<Cor>();
    if (name == "lemma-conv") return by_mode<LemConv>();
    if (name == "lemma-main") return by_mode<LemMain>();
    if (name == "claim1") return by_mode<Claim1>();
    if (name == "signs") return by_mode<Signs>();
    if (name == "symmetry") return by_mode<Sym>();
    if (name == "ginzburg") return [](const Context &c, std::size_t, std::uint64_t s) { return ginzburg_trial(c, s); };
    if (name == "generic") return [](const Context &c, std::size_t, std::uint64_t s) { return generic_trial(c, s); };
    if (name == "gallery") return [](const Context &, std::size_t i, std::uint64_t) { return gallery_trial(i); };
    throw Error(ErrorCode::unknown_suite, "no suite named '" + name + "'");
}

}  // namespace

const std::vector<std::string> &suite_names() {
    static const std::vector<std::string> names{"thm1",   "thm2",  "thm3",    "lemma-conv", "lemma-main", "claim1",
                                                "corollary", "signs", "ginzburg", "generic", "symmetry", "gallery"};
    return names;
}

SuiteReport run_suite(const SuiteConfig &config) {
    const auto start = std::chrono::steady_clock::now();
    const TrialFn fn = suite_function(config.suite);
    if (config.tol <= 0.0) throw Error(ErrorCode::precondition_failed, "tolerance must be positive");

    Context ctx{config, std::nullopt};
    SuiteReport report;
    report.config = config;
    if (config.ball == "maxnorm") ctx.fixed_ball = max_norm_ball<Rational>();
    else if (config.ball == "euclidean") ctx.fixed_ball = UnitBall<Rational>::euclidean();
    else if (config.ball != "random") ctx.fixed_ball = load_ball(config.ball);

    const std::string &s = config.suite;
    if (s == "generic" && ctx.fixed_ball && !ctx.fixed_ball->is_polygonal())
        throw Error(ErrorCode::precondition_failed, "the generic suite needs a polygonal ball");
    if (s == "ginzburg") report.notes = "Euclidean float-only; ball and mode are ignored";
    else if (s == "generic") report.notes = "exact-only; mode is ignored";
    else if (s == "claim1") report.notes = "reals in [-1,1]; ball is ignored";
    else if (s == "symmetry") report.notes = "random polygons; ball is ignored";
    else if (s == "gallery") report.notes = "fixed fixtures; trials, seed, ball and mode are ignored";

    const double saved_tol = tolerance();
    set_tolerance(config.tol);
    const std::size_t count = s == "gallery" ? gallery_names().size() : config.trials;
    report.records.resize(count);

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            const std::uint64_t subseed = config.seed ^ static_cast<std::uint64_t>(i);
            TrialRecord rec;
            try {
                rec = fn(ctx, i, subseed);
            } catch (const Error &e) {
                rec.status = TrialStatus::fail;
                rec.family = "error";
                rec.detail = e.what();
            }
            rec.trial = i;
            report.records[i] = std::move(rec);
        }
    };
    const unsigned jobs = std::max(1u, std::min<unsigned>(config.jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    }
    set_tolerance(saved_tol);

    for (const auto &r : report.records) {
        ++report.families[r.family];
        if (r.status == TrialStatus::pass) ++report.passed;
        else if (r.status == TrialStatus::fail) ++report.failed;
        else ++report.vacuous;
    }
    report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace helly
