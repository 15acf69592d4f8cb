#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "helly/norms.hpp"

namespace helly {

/// sigma(S, V): the sum of the vectors indexed by a sorted subset S.
template <Scalar T>
struct KSum {
    std::vector<std::size_t> subset;
    Vec2<T> value;
};

/// Outcome of checking one theorem instance. A verifier never throws on a
/// failed hypothesis; it reports it. hypothesis && !conclusion would be a
/// counterexample.
template <Scalar T>
struct VerifyReport {
    std::string theorem;
    bool hypothesis_holds = false;
    bool conclusion_holds = false;
    Vec2<T> total;
    T total_norm{};
    std::vector<KSum<T>> witnesses;
    std::string notes;

    bool falsified() const { return hypothesis_holds && !conclusion_holds; }
};

/// Projection certificate for the halfplane theorem. Vectors are ordered by
/// angle from u turned -90 degrees to u turned +90 degrees; the middle one
/// (1-based position k) carries the supporting functional `tangent`, and
/// projections[i] = tangent(V[i]) is the coefficient of V[i] along the
/// middle vector in the basis {middle vector, tangent direction}.
template <Scalar T>
struct Certificate {
    std::size_t k = 0;
    std::size_t middle_index = 0;
    std::vector<std::size_t> order;
    Vec2<T> u;
    EdgeFunctional<T> tangent;
    std::vector<T> projections;
    T projection_sum{};
};

template <Scalar T>
std::vector<KSum<T>> all_ksums(const VectorMultiset<T> &vectors, std::size_t k);

/// Unit vectors of odd count in the closed halfplane u.v >= 0 sum to norm >= 1.
template <Scalar T>
VerifyReport<T> verify_theorem1(const UnitBall<T> &ball, const VectorMultiset<T> &vectors, const Vec2<T> &u);

/// Throws HypothesisFailed unless the halfplane hypothesis holds.
template <Scalar T>
Certificate<T> halfplane_certificate(const UnitBall<T> &ball, const VectorMultiset<T> &vectors, const Vec2<T> &u);

/// strict = false: unit vectors whose 3-sums have norm >= 1.
/// strict = true:  vectors in B whose 3-sums have norm > 1.
/// Collinear inputs are routed to verify_helly_1d. Throws TooFew / EvenCardinality.
template <Scalar T>
VerifyReport<T> verify_helly(const UnitBall<T> &ball, const VectorMultiset<T> &vectors, bool strict);

/// The collinear case: the ball restricted to the common line is the segment
/// [-half_width, half_width] and the vectors are signed lengths along it.
template <Scalar T>
VerifyReport<T> verify_helly_1d(const T &half_width, const std::vector<T> &xs, bool strict);

/// Throws TooFew (|V| < 5) or BadK (k even, k <= 3, or k > |V|).
template <Scalar T>
VerifyReport<T> corollary_check(const UnitBall<T> &ball, const VectorMultiset<T> &vectors, std::size_t k);

struct ConvCheck {
    bool origin_in_triangle = false;
    bool sum_in_triangle = false;
};

/// Both closed-set memberships for a boundary triple. Throws NotOnBoundary.
template <Scalar T>
ConvCheck lemma_conv_check(const UnitBall<T> &ball, const Vec2<T> &a, const Vec2<T> &b, const Vec2<T> &c);

using Triple = std::array<std::size_t, 3>;

/// Lexicographically first triple of a zero-sum 6-tuple in B whose sum lies
/// in B. Throws PreconditionFailed, or TheoremFalsified if none exists.
template <Scalar T>
Triple lemma_main_witness(const UnitBall<T> &ball, const VectorMultiset<T> &z);

/// All triples of six zero-sum reals in [-1,1] whose sum stays in [-1,1].
template <Scalar T>
std::vector<Triple> claim1_triplets(const std::vector<T> &x);

}  // namespace helly
