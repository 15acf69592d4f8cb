#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "helly/norms.hpp"

namespace helly {

/// One round of the rotation reduction: the state V_i at the start of the
/// round, the signed angle the moving set was turned by (counterclockwise
/// positive), and the index that became fixed at the end of the round.
struct RotationStep {
    std::vector<std::size_t> moving;
    std::vector<Vec2<double>> moving_vectors;
    std::vector<std::size_t> fixed;
    std::vector<Vec2<double>> fixed_vectors;
    Vec2<double> sum;
    double norm = 0.0;
    double rotation = 0.0;
    std::size_t fixed_index = 0;
};

/// Vectors are reported in the frame where the halfplane normal is (0,1);
/// frame_rotation is the angle applied to the input to get there.
struct RotationTrace {
    std::vector<RotationStep> steps;
    Vec2<double> final_sum;
    double final_norm = 0.0;
    double frame_rotation = 0.0;
};

/// Euclidean rotation reduction for odd multisets of unit vectors in the
/// closed halfplane u.v >= 0. Each round turns every moving vector together
/// in a direction that does not increase |f + m| until one of them reaches
/// (1,0) or (-1,0), which then stays fixed. Throws NotUnitVectors,
/// HalfplaneViolated, EvenCardinality, ZeroDirection.
RotationTrace ginzburg_reduce(const VectorMultiset<double> &vectors, const Vec2<double> &u);

using SignVector = std::vector<int>;

/// Signs putting every signed vector in the closed halfplane y >= 0, so every
/// odd-size signed subset sum has norm >= 1. Verified exhaustively for
/// n <= 15 (TheoremFalsified on failure). Throws NotUnitVectors.
template <Scalar T>
SignVector choose_signs(const UnitBall<T> &ball, const VectorMultiset<T> &vectors);

template <Scalar T>
struct SignCheck {
    std::size_t subsets_checked = 0;
    std::size_t failures = 0;
    bool exhaustive = false;
    std::optional<std::vector<std::size_t>> counterexample;
};

/// Checks gauge(sum of eps_i v_i over W) >= 1 for odd-size W: every such W
/// when n <= exhaustive_limit, otherwise `samples` random ones.
template <Scalar T>
SignCheck<T> check_signs(const UnitBall<T> &ball, const VectorMultiset<T> &vectors, const SignVector &signs,
                         std::uint64_t seed = 0, std::size_t exhaustive_limit = 15, std::size_t samples = 1000);

inline constexpr std::size_t default_retry_budget = 10000;

/// Perturbs lambda*v_i inside gauge-distance epsilon so that no two distinct
/// subsets of size <= 5 share a value under any pair of edge functionals.
/// Candidates are drawn from a seeded generator and rejected until the
/// conditions hold. Throws NotPolygonal, PreconditionFailed,
/// EpsilonTooLarge, SamplingExhausted.
VectorMultiset<Rational> make_generic(const UnitBall<Rational> &ball, const VectorMultiset<Rational> &vectors,
                                      const Rational &lambda, const Rational &epsilon, std::uint64_t seed,
                                      std::size_t retry_budget = default_retry_budget);

struct GenericityReport {
    bool conditions_hold = false;
    bool gauges_distinct = false;
    bool proximity_holds = false;
    std::size_t values_checked = 0;
    Rational max_deviation;

    bool ok() const { return conditions_hold && gauges_distinct && proximity_holds; }
};

/// Recomputes every condition from scratch on the final multiset.
GenericityReport check_genericity(const UnitBall<Rational> &ball, const VectorMultiset<Rational> &vectors,
                                  const VectorMultiset<Rational> &perturbed, const Rational &lambda,
                                  const Rational &epsilon);

}  // namespace helly
