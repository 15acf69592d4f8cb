#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "helly/norms.hpp"
#include "helly/random.hpp"

namespace helly {

/// A random 0-symmetric polygon with at most max_vertices vertices, built as
/// the symmetric hull of random rational points. Degenerate draws are
/// resampled internally. Throws PreconditionFailed when max_vertices < 4.
UnitBall<Rational> gen_random_ball(std::uint64_t seed, std::size_t max_vertices);

/// n vectors with gauge exactly 1. Polygonal balls use rational points on
/// the edges; the Euclidean ball uses the rational parametrization of the
/// circle. With a halfplane normal u, vectors with u.v < 0 are negated.
VectorMultiset<Rational> gen_unit_vectors(const UnitBall<Rational> &ball, std::size_t n, std::uint64_t seed,
                                          std::optional<Vec2<Rational>> halfplane = std::nullopt);

/// Six vectors of B with exact zero sum (five drawn, the sixth closing the
/// sum; redrawn until the sixth lies in B).
VectorMultiset<Rational> gen_zero_sum_six(const UnitBall<Rational> &ball, std::uint64_t seed);

Vec2<Rational> random_boundary_point(const UnitBall<Rational> &ball, Rng &rng);

/// boundary point scaled by a random factor in [0,1]
Vec2<Rational> random_point_in_ball(const UnitBall<Rational> &ball, Rng &rng);

/// Nonzero direction with small integer coordinates.
Vec2<Rational> random_direction(Rng &rng);

}  // namespace helly
