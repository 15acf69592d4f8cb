#include "helly/theorems.hpp"

#include <algorithm>
#include <numeric>

#include "helly/combinatorics.hpp"
#include "helly/error.hpp"
#include "helly/geometry.hpp"

namespace helly {

namespace {

template <Scalar T>
KSum<T> make_ksum(const VectorMultiset<T> &vectors, const std::vector<std::size_t> &subset) {
    KSum<T> s{subset, {}};
    for (std::size_t i : subset) s.value += vectors[i];
    return s;
}

template <Scalar T>
bool halfplane_hypothesis(const UnitBall<T> &ball, const VectorMultiset<T> &vectors, const Vec2<T> &u,
                          std::string *why) {
    if (vectors.size() % 2 == 0) {
        if (why) *why = "even cardinality";
        return false;
    }
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        if (!on_unit_sphere(ball, vectors[i])) {
            if (why) *why = "v" + std::to_string(i) + " is not a unit vector";
            return false;
        }
        if (sign(dot(u, vectors[i])) < 0) {
            if (why) *why = "v" + std::to_string(i) + " is outside the halfplane";
            return false;
        }
    }
    return true;
}

// Result of the collinear check in signed-length coordinates. Comparisons
// with the half width m are made on squares so an irrational m (Euclidean
// ball along a direction of irrational length) stays exact.
template <Scalar T>
struct LineOutcome {
    bool hypothesis = false;
    bool conclusion = false;
    std::vector<std::vector<std::size_t>> witnesses;
    std::string notes;
};

template <Scalar T>
int compare_abs(const T &x, const T &m2) { return compare(T(x * x), m2); }

template <Scalar T>
LineOutcome<T> helly_on_line(const std::vector<T> &xs, const T &m2, bool strict) {
    LineOutcome<T> out;
    const std::size_t n = xs.size();
    bool hyp = true;
    for (std::size_t i = 0; i < n; ++i) {
        int c = compare_abs(xs[i], m2);
        if (strict ? c > 0 : c != 0) {
            hyp = false;
            out.witnesses.push_back({i});
        }
    }
    for_each_combination(n, 3, [&](const std::vector<std::size_t> &s) {
        const T t = xs[s[0]] + xs[s[1]] + xs[s[2]];
        int c = compare_abs(t, m2);
        if (strict ? c <= 0 : c < 0) {
            hyp = false;
            out.witnesses.push_back(s);
        }
    });
    const T total = std::accumulate(xs.begin(), xs.end(), T(0));
    int c = compare_abs(total, m2);
    out.hypothesis = hyp;
    out.conclusion = strict ? c > 0 : c >= 0;
    out.notes = "collinear input: checked on the line";

    if (hyp && strict && n >= 3) {
        // Ordering bound: orient so the largest magnitude is positive, sort
        // descending; then x1 + x_{n-1} + x_n <= total and exceeds m.
        std::vector<std::size_t> idx(n);
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        auto mx = *std::max_element(xs.begin(), xs.end());
        auto mn = *std::min_element(xs.begin(), xs.end());
        const int orient = compare(T(mx + mn), T(0)) >= 0 ? 1 : -1;
        std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
            return orient > 0 ? xs[a] > xs[b] : xs[a] < xs[b];
        });
        std::vector<std::size_t> bound{idx[0], idx[n - 2], idx[n - 1]};
        const T partial = xs[bound[0]] + xs[bound[1]] + xs[bound[2]];
        const bool chain = orient > 0 ? compare(partial, total) <= 0 : compare(partial, total) >= 0;
        std::sort(bound.begin(), bound.end());
        out.witnesses.push_back(bound);
        out.notes += chain ? "; ordering bound x1+x(n-1)+x(n) <= total holds" : "; ordering bound failed";
    }
    return out;
}

}  // namespace

template <Scalar T>
std::vector<KSum<T>> all_ksums(const VectorMultiset<T> &vectors, std::size_t k) {
    if (k > vectors.size()) throw Error(ErrorCode::precondition_failed, "k exceeds |V|");
    std::vector<KSum<T>> out;
    out.reserve(binomial(vectors.size(), k));
    for_each_combination(vectors.size(), k,
                         [&](const std::vector<std::size_t> &s) { out.push_back(make_ksum(vectors, s)); });
    return out;
}

template <Scalar T>
VerifyReport<T> verify_theorem1(const UnitBall<T> &ball, const VectorMultiset<T> &vectors, const Vec2<T> &u) {
    if (is_zero(u)) throw Error(ErrorCode::zero_direction, "halfplane normal is zero");
    VerifyReport<T> r;
    r.theorem = "T1";
    std::string why;
    r.hypothesis_holds = halfplane_hypothesis(ball, vectors, u, &why);
    r.total = sum(vectors);
    r.total_norm = gauge(ball, r.total);
    r.conclusion_holds = compare_gauge(ball, r.total, T(1)) >= 0;
    r.notes = r.hypothesis_holds ? "hypothesis holds" : "hypothesis fails: " + why;
    return r;
}

template <Scalar T>
Certificate<T> halfplane_certificate(const UnitBall<T> &ball, const VectorMultiset<T> &vectors, const Vec2<T> &u) {
    if (is_zero(u)) throw Error(ErrorCode::zero_direction, "halfplane normal is zero");
    std::string why;
    if (!halfplane_hypothesis(ball, vectors, u, &why)) throw Error(ErrorCode::hypothesis_failed, why);

    // r is u turned by -90 degrees; cross(r, v) = u.v >= 0 on the halfplane.
    const Vec2<T> r{u.y, -u.x};
    auto bucket = [&](const Vec2<T> &v) {
        if (sign(dot(u, v)) > 0) return 1;
        return sign(dot(r, v)) > 0 ? 0 : 2;
    };
    Certificate<T> cert;
    cert.u = u;
    cert.order.resize(vectors.size());
    std::iota(cert.order.begin(), cert.order.end(), std::size_t{0});
    std::stable_sort(cert.order.begin(), cert.order.end(), [&](std::size_t a, std::size_t b) {
        const int ba = bucket(vectors[a]), bb = bucket(vectors[b]);
        if (ba != bb) return ba < bb;
        return ba == 1 && sign(cross(vectors[a], vectors[b])) > 0;
    });

    cert.k = (vectors.size() + 1) / 2;
    cert.middle_index = cert.order[cert.k - 1];
    cert.tangent = supporting_functional(ball, vectors[cert.middle_index]);
    cert.projection_sum = T(0);
    for (const auto &v : vectors) {
        cert.projections.push_back(cert.tangent(v));
        cert.projection_sum += cert.projections.back();
    }

    if (compare(cert.projection_sum, T(1)) < 0)
        throw Error(ErrorCode::theorem_falsified, "projection sum below 1: " + to_string(cert.projection_sum));
    if (compare_gauge(ball, sum(vectors), T(1)) < 0)
        throw Error(ErrorCode::theorem_falsified, "projection sum >= 1 but the sum lies inside the ball");
    return cert;
}

template <Scalar T>
VerifyReport<T> verify_helly_1d(const T &half_width, const std::vector<T> &xs, bool strict) {
    if (xs.size() < 3) throw Error(ErrorCode::too_few, "need at least three values");
    if (xs.size() % 2 == 0) throw Error(ErrorCode::even_cardinality, "need an odd number of values");
    const auto line = helly_on_line(xs, T(half_width * half_width), strict);
    VerifyReport<T> r;
    r.theorem = strict ? "T3" : "T2";
    r.hypothesis_holds = line.hypothesis;
    r.conclusion_holds = line.conclusion;
    const T total = std::accumulate(xs.begin(), xs.end(), T(0));
    r.total = {total, T(0)};
    r.total_norm = (sign(total) < 0 ? T(-total) : total) / half_width;
    for (const auto &s : line.witnesses) {
        KSum<T> w{s, {}};
        for (std::size_t i : s) w.value.x += xs[i];
        r.witnesses.push_back(std::move(w));
    }
    r.notes = line.notes;
    return r;
}

template <Scalar T>
VerifyReport<T> verify_helly(const UnitBall<T> &ball, const VectorMultiset<T> &vectors, bool strict) {
    const std::size_t n = vectors.size();
    if (n < 3) throw Error(ErrorCode::too_few, "need at least three vectors");
    if (n % 2 == 0) throw Error(ErrorCode::even_cardinality, "need an odd number of vectors");

    VerifyReport<T> r;
    r.theorem = strict ? "T3" : "T2";
    r.total = sum(vectors);
    r.total_norm = gauge(ball, r.total);

    auto nonzero = std::find_if(vectors.begin(), vectors.end(), [](const Vec2<T> &v) { return !is_zero(v); });
    const Vec2<T> dir = nonzero == vectors.end() ? Vec2<T>{T(1), T(0)} : *nonzero;
    const bool collinear = std::all_of(vectors.begin(), vectors.end(),
                                       [&](const Vec2<T> &v) { return sign(cross(dir, v)) == 0; });
    if (collinear) {
        const bool use_x = sign(dir.x) != 0;
        std::vector<T> xs;
        for (const auto &v : vectors) xs.push_back(use_x ? v.x / dir.x : v.y / dir.y);
        // |t * dir| <= 1 iff t^2 <= 1 / gauge(dir)^2; for the Euclidean ball
        // that is 1 / |dir|^2, exact in rationals.
        T m2;
        if (ball.is_polygonal()) {
            const T m = T(1) / gauge(ball, dir);
            m2 = m * m;
        } else {
            m2 = T(1) / dot(dir, dir);
        }
        const auto line = helly_on_line(xs, m2, strict);
        r.hypothesis_holds = line.hypothesis;
        r.conclusion_holds = line.conclusion;
        for (const auto &s : line.witnesses) r.witnesses.push_back(make_ksum(vectors, s));
        r.notes = line.notes;
        return r;
    }

    bool hyp = true;
    for (std::size_t i = 0; i < n; ++i) {
        int c = compare_gauge(ball, vectors[i], T(1));
        if (strict ? c > 0 : c != 0) {
            hyp = false;
            r.witnesses.push_back(make_ksum(vectors, {i}));
        }
    }
    for_each_combination(n, 3, [&](const std::vector<std::size_t> &s) {
        KSum<T> t = make_ksum(vectors, s);
        int c = compare_gauge(ball, t.value, T(1));
        if (strict ? c <= 0 : c < 0) {
            hyp = false;
            r.witnesses.push_back(std::move(t));
        }
    });
    const int c = compare_gauge(ball, r.total, T(1));
    r.hypothesis_holds = hyp;
    r.conclusion_holds = strict ? c > 0 : c >= 0;
    r.notes = hyp ? "hypothesis holds" : "hypothesis fails; witnesses violate it";
    return r;
}

template <Scalar T>
VerifyReport<T> corollary_check(const UnitBall<T> &ball, const VectorMultiset<T> &vectors, std::size_t k) {
    const std::size_t n = vectors.size();
    if (n < 5) throw Error(ErrorCode::too_few, "need at least five vectors");
    if (k % 2 == 0 || k <= 3 || k > n) throw Error(ErrorCode::bad_k, "k must be odd with 3 < k <= |V|");

    VerifyReport<T> r;
    r.theorem = "COR";
    r.total = sum(vectors);
    r.total_norm = gauge(ball, r.total);

    bool hyp = std::all_of(vectors.begin(), vectors.end(), [&](const Vec2<T> &v) { return in_ball(ball, v); });
    std::size_t bad_triples = 0;
    for_each_combination(n, 3, [&](const std::vector<std::size_t> &s) {
        if (compare_gauge(ball, make_ksum(vectors, s).value, T(1)) <= 0) ++bad_triples;
    });
    hyp = hyp && bad_triples == 0;

    bool concl = true;
    for_each_combination(n, k, [&](const std::vector<std::size_t> &s) {
        KSum<T> t = make_ksum(vectors, s);
        if (compare_gauge(ball, t.value, T(1)) <= 0) {
            concl = false;
            r.witnesses.push_back(std::move(t));
        }
    });
    r.hypothesis_holds = hyp;
    r.conclusion_holds = concl;
    r.notes = "k=" + std::to_string(k) + "; 3-sums inside B: " + std::to_string(bad_triples);
    return r;
}

template <Scalar T>
ConvCheck lemma_conv_check(const UnitBall<T> &ball, const Vec2<T> &a, const Vec2<T> &b, const Vec2<T> &c) {
    if (!on_unit_sphere(ball, a) || !on_unit_sphere(ball, b) || !on_unit_sphere(ball, c))
        throw Error(ErrorCode::not_on_boundary, "triangle vertices must be unit vectors");
    const std::vector<Vec2<T>> tri{a, b, c};
    return {point_in_hull(Vec2<T>{}, tri) != OriginPosition::exterior,
            point_in_hull(Vec2<T>(a + b + c), tri) != OriginPosition::exterior};
}

template <Scalar T>
Triple lemma_main_witness(const UnitBall<T> &ball, const VectorMultiset<T> &z) {
    if (z.size() != 6) throw Error(ErrorCode::precondition_failed, "need exactly six vectors");
    if (!is_zero(sum(z))) throw Error(ErrorCode::precondition_failed, "vectors do not sum to zero");
    for (const auto &v : z)
        if (!in_ball(ball, v)) throw Error(ErrorCode::precondition_failed, "a vector lies outside the ball");

    Triple found{};
    const bool exhausted = for_each_combination(6, 3, [&](const std::vector<std::size_t> &s) {
        if (in_ball(ball, Vec2<T>(z[s[0]] + z[s[1]] + z[s[2]]))) {
            found = {s[0], s[1], s[2]};
            return false;
        }
        return true;
    });
    if (exhausted) throw Error(ErrorCode::theorem_falsified, "no 3-sum of the zero-sum 6-tuple lies in B");
    return found;
}

template <Scalar T>
std::vector<Triple> claim1_triplets(const std::vector<T> &x) {
    if (x.size() != 6) throw Error(ErrorCode::precondition_failed, "need exactly six numbers");
    const T one(1);
    for (const auto &v : x)
        if (compare(v, one) > 0 || compare(v, T(-one)) < 0)
            throw Error(ErrorCode::precondition_failed, "a number lies outside [-1,1]");
    if (sign(std::accumulate(x.begin(), x.end(), T(0))) != 0)
        throw Error(ErrorCode::precondition_failed, "numbers do not sum to zero");

    std::vector<Triple> out;
    for_each_combination(6, 3, [&](const std::vector<std::size_t> &s) {
        const T t = x[s[0]] + x[s[1]] + x[s[2]];
        if (compare(t, one) <= 0 && compare(t, T(-one)) >= 0) out.push_back({s[0], s[1], s[2]});
    });
    return out;
}

#define HELLY_INSTANTIATE(T)                                                                                   \
    template std::vector<KSum<T>> all_ksums<T>(const VectorMultiset<T> &, std::size_t);                       \
    template VerifyReport<T> verify_theorem1<T>(const UnitBall<T> &, const VectorMultiset<T> &, const Vec2<T> &); \
    template Certificate<T> halfplane_certificate<T>(const UnitBall<T> &, const VectorMultiset<T> &,           \
                                                     const Vec2<T> &);                                         \
    template VerifyReport<T> verify_helly<T>(const UnitBall<T> &, const VectorMultiset<T> &, bool);           \
    template VerifyReport<T> verify_helly_1d<T>(const T &, const std::vector<T> &, bool);                     \
    template VerifyReport<T> corollary_check<T>(const UnitBall<T> &, const VectorMultiset<T> &, std::size_t); \
    template ConvCheck lemma_conv_check<T>(const UnitBall<T> &, const Vec2<T> &, const Vec2<T> &,             \
                                           const Vec2<T> &);                                                   \
    template Triple lemma_main_witness<T>(const UnitBall<T> &, const VectorMultiset<T> &);                    \
    template std::vector<Triple> claim1_triplets<T>(const std::vector<T> &);

HELLY_INSTANTIATE(Rational)
HELLY_INSTANTIATE(double)

}  // namespace helly
