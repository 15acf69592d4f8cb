#include "helly/algorithms.hpp"

#include <algorithm>
#include <bit>

#include "helly/combinatorics.hpp"
#include "helly/error.hpp"
#include "helly/random.hpp"

namespace helly {

template <Scalar T>
SignVector choose_signs(const UnitBall<T> &ball, const VectorMultiset<T> &vectors) {
    for (const auto &v : vectors)
        if (!on_unit_sphere(ball, v)) throw Error(ErrorCode::not_unit_vectors, "sign choice needs unit vectors");

    // u = (0,1): vectors with u.v = 0 keep +1, which the closed halfplane allows.
    SignVector signs;
    signs.reserve(vectors.size());
    for (const auto &v : vectors) signs.push_back(sign(v.y) >= 0 ? 1 : -1);

    if (vectors.size() <= 15) {
        const auto check = check_signs(ball, vectors, signs);
        if (check.failures != 0) throw Error(ErrorCode::theorem_falsified, "an odd signed subset sum lies inside B");
    }
    return signs;
}

template <Scalar T>
SignCheck<T> check_signs(const UnitBall<T> &ball, const VectorMultiset<T> &vectors, const SignVector &signs,
                         std::uint64_t seed, std::size_t exhaustive_limit, std::size_t samples) {
    if (signs.size() != vectors.size()) throw Error(ErrorCode::precondition_failed, "one sign per vector");
    const std::size_t n = vectors.size();
    VectorMultiset<T> signed_vectors;
    for (std::size_t i = 0; i < n; ++i) signed_vectors.push_back(signs[i] > 0 ? vectors[i] : Vec2<T>(-vectors[i]));

    SignCheck<T> out;
    auto record = [&](const Vec2<T> &s, auto &&members) {
        ++out.subsets_checked;
        if (compare_gauge(ball, s, T(1)) < 0) {
            ++out.failures;
            if (!out.counterexample) out.counterexample = members();
        }
    };

    if (n <= exhaustive_limit && n < 64) {
        out.exhaustive = true;
        // Gray-code walk: consecutive subsets differ in one element.
        Vec2<T> s;
        std::uint64_t mask = 0;
        const std::uint64_t count = std::uint64_t{1} << n;
        for (std::uint64_t i = 1; i < count; ++i) {
            const unsigned bit = static_cast<unsigned>(std::countr_zero(i));
            mask ^= std::uint64_t{1} << bit;
            if (mask & (std::uint64_t{1} << bit)) s += signed_vectors[bit];
            else s -= signed_vectors[bit];
            if (std::popcount(mask) % 2 == 1) {
                record(s, [&] {
                    std::vector<std::size_t> w;
                    for (std::size_t j = 0; j < n; ++j)
                        if (mask >> j & 1) w.push_back(j);
                    return w;
                });
            }
        }
        return out;
    }

    Rng rng(seed);
    for (std::size_t trial = 0; trial < samples; ++trial) {
        std::vector<std::size_t> w;
        for (std::size_t j = 0; j < n; ++j)
            if (rng.coin()) w.push_back(j);
        if (w.size() % 2 == 0) {
            const std::size_t j = rng.below(n);
            auto it = std::find(w.begin(), w.end(), j);
            if (it != w.end()) w.erase(it);
            else w.insert(std::upper_bound(w.begin(), w.end(), j), j);
        }
        Vec2<T> s;
        for (std::size_t j : w) s += signed_vectors[j];
        record(s, [&] { return w; });
    }
    return out;
}

namespace {

// One value l_e(sigma(S, U)) tagged with the subset S it came from.
struct Entry {
    Rational value;
    std::uint32_t subset;
};

bool by_value(const Entry &a, const Entry &b) { return a.value < b.value; }

// Equal values coming from different subsets violate the genericity conditions.
bool has_clash(std::vector<Entry> entries) {
    std::sort(entries.begin(), entries.end(), by_value);
    for (std::size_t i = 1; i < entries.size(); ++i)
        if (entries[i].value == entries[i - 1].value && entries[i].subset != entries[i - 1].subset) return true;
    return false;
}

constexpr std::size_t max_subset = 5;

}  // namespace

VectorMultiset<Rational> make_generic(const UnitBall<Rational> &ball, const VectorMultiset<Rational> &vectors,
                                      const Rational &lambda, const Rational &epsilon, std::uint64_t seed,
                                      std::size_t retry_budget) {
    if (!ball.is_polygonal()) throw Error(ErrorCode::not_polygonal, "perturbation needs a polygonal ball");
    if (lambda.sign() <= 0 || lambda >= Rational(1))
        throw Error(ErrorCode::precondition_failed, "lambda must lie in (0,1)");
    if (epsilon.sign() <= 0) throw Error(ErrorCode::precondition_failed, "epsilon must be positive");
    if (vectors.size() > 31) throw Error(ErrorCode::precondition_failed, "at most 31 vectors");
    for (const auto &v : vectors)
        if (lambda * gauge(ball, v) + epsilon > Rational(1))
            throw Error(ErrorCode::epsilon_too_large, "epsilon-neighbourhood leaves the ball");

    const auto &edges = ball.edges();
    const auto &verts = ball.vertices();
    Rng rng(seed);

    // Subsets of the accepted prefix with at most max_subset elements, with
    // their functional values, plus every (value, subset) entry so far.
    struct Partial {
        std::uint32_t subset;
        std::size_t size;
        std::vector<Rational> values;  // l_e(sigma) for each edge
    };
    std::vector<Partial> partials{{0, 0, std::vector<Rational>(edges.size(), Rational(0))}};
    std::vector<Entry> accepted;
    for (std::size_t e = 0; e < edges.size(); ++e) accepted.push_back({Rational(0), 0});

    VectorMultiset<Rational> out;
    for (std::size_t k = 0; k < vectors.size(); ++k) {
        const Vec2<Rational> centre = vectors[k] * lambda;
        std::sort(accepted.begin(), accepted.end(), by_value);
        bool placed = false;
        for (std::size_t attempt = 0; attempt < retry_budget && !placed; ++attempt) {
            const std::size_t j = rng.below(verts.size());
            const Vec2<Rational> &a = verts[j], &b = verts[(j + 1) % verts.size()];
            const Vec2<Rational> on_edge = a + (b - a) * rng.unit_rational(16);
            const Rational radius = Rational(static_cast<std::int64_t>(rng.below(1u << 16)), std::int64_t{1} << 16);
            const Vec2<Rational> candidate = centre + on_edge * (epsilon * radius);

            std::vector<Rational> cand_values;
            for (const auto &e : edges) cand_values.push_back(e(candidate));
            std::vector<Entry> fresh;
            for (const auto &p : partials) {
                if (p.size >= max_subset) continue;
                const std::uint32_t subset = p.subset | (std::uint32_t{1} << k);
                for (std::size_t e = 0; e < edges.size(); ++e) fresh.push_back({p.values[e] + cand_values[e], subset});
            }
            if (has_clash(fresh)) continue;
            const bool clash_old = std::any_of(fresh.begin(), fresh.end(), [&](const Entry &x) {
                return std::binary_search(accepted.begin(), accepted.end(), x, by_value);
            });
            if (clash_old) continue;

            const std::size_t old_count = partials.size();
            for (std::size_t i = 0; i < old_count; ++i) {
                if (partials[i].size >= max_subset) continue;
                Partial next{partials[i].subset | (std::uint32_t{1} << k), partials[i].size + 1, {}};
                for (std::size_t e = 0; e < edges.size(); ++e)
                    next.values.push_back(partials[i].values[e] + cand_values[e]);
                partials.push_back(std::move(next));
            }
            accepted.insert(accepted.end(), fresh.begin(), fresh.end());
            out.push_back(candidate);
            placed = true;
        }
        if (!placed) throw Error(ErrorCode::sampling_exhausted, "retry budget exhausted at vector " + std::to_string(k));
    }

    if (!check_genericity(ball, vectors, out, lambda, epsilon).ok())
        throw Error(ErrorCode::theorem_falsified, "perturbed multiset failed its own genericity check");
    return out;
}

GenericityReport check_genericity(const UnitBall<Rational> &ball, const VectorMultiset<Rational> &vectors,
                                  const VectorMultiset<Rational> &perturbed, const Rational &lambda,
                                  const Rational &epsilon) {
    GenericityReport r;
    const std::size_t n = perturbed.size();
    const auto &edges = edge_functionals(ball);

    std::vector<Entry> entries;
    std::vector<Rational> gauges;
    for (std::size_t s = 0; s <= std::min(n, max_subset); ++s) {
        for_each_combination(n, s, [&](const std::vector<std::size_t> &idx) {
            Vec2<Rational> sigma;
            std::uint32_t subset = 0;
            for (std::size_t i : idx) {
                sigma += perturbed[i];
                subset |= std::uint32_t{1} << i;
            }
            for (const auto &e : edges) entries.push_back({e(sigma), subset});
            if (s == 3 || s == 5) gauges.push_back(gauge(ball, sigma));
        });
    }
    r.values_checked = entries.size();
    r.conditions_hold = !has_clash(entries);
    std::sort(gauges.begin(), gauges.end());
    r.gauges_distinct = std::adjacent_find(gauges.begin(), gauges.end()) == gauges.end();

    r.max_deviation = Rational(0);
    for (std::size_t i = 0; i < n && i < vectors.size(); ++i)
        r.max_deviation = std::max(r.max_deviation, gauge(ball, Vec2<Rational>(perturbed[i] - vectors[i] * lambda)));
    r.proximity_holds = vectors.size() == n && r.max_deviation <= epsilon;
    return r;
}

#define HELLY_INSTANTIATE(T)                                                                                 \
    template SignVector choose_signs<T>(const UnitBall<T> &, const VectorMultiset<T> &);                    \
    template SignCheck<T> check_signs<T>(const UnitBall<T> &, const VectorMultiset<T> &, const SignVector &, \
                                         std::uint64_t, std::size_t, std::size_t);

HELLY_INSTANTIATE(Rational)
HELLY_INSTANTIATE(double)

}  // namespace helly
