#pragma once

#include <optional>
#include <vector>

#include "helly/norms.hpp"

namespace helly {

/// A convex polygon with the origin strictly inside; not necessarily symmetric.
template <Scalar T>
class ConvexBody {
public:
    const std::vector<Vec2<T>> &vertices() const { return vertices_; }
    /// edges()[i] equals 1 on the edge vertices()[i] -> vertices()[i+1].
    const std::vector<EdgeFunctional<T>> &edges() const { return edges_; }

    template <Scalar U>
    friend ConvexBody<U> make_convex_body(const std::vector<Vec2<U>> &vertices);

private:
    std::vector<Vec2<T>> vertices_;
    std::vector<EdgeFunctional<T>> edges_;
};

/// Hull of the points; throws NotConvexBody when it is degenerate or the
/// origin is not strictly inside.
template <Scalar T>
ConvexBody<T> make_convex_body(const std::vector<Vec2<T>> &vertices);

/// Minkowski functional of the body (not symmetric in general).
template <Scalar T>
T body_gauge(const ConvexBody<T> &body, const Vec2<T> &z);

enum class WitnessKind { halfplane_interior_sum, surrounding_exterior_sum };

const char *to_string(WitnessKind kind);

/// a, b, c on the boundary with h = a + b + c.
/// halfplane_interior_sum: a, b, c in a closed halfplane through 0, h in int K.
/// surrounding_exterior_sum: 0 in int conv{a,b,c}, h not in int K.
template <Scalar T>
struct ViolationWitness {
    Vec2<T> a, b, c, h;
    WitnessKind kind = WitnessKind::halfplane_interior_sum;
};

template <Scalar T>
bool is_centrally_symmetric(const ConvexBody<T> &body);

/// Re-checks a witness with hull predicates only, independent of the search.
template <Scalar T>
bool verify_witness(const ConvexBody<T> &body, const ViolationWitness<T> &w);

/// Three boundary points in a closed halfplane through 0 whose sum is
/// interior. Empty for symmetric bodies. Throws SearchBudgetExceeded.
template <Scalar T>
std::optional<ViolationWitness<T>> find_violation_halfplane(const ConvexBody<T> &body);

/// Three boundary points surrounding 0 whose sum is not interior. Empty for
/// symmetric bodies. Throws SearchBudgetExceeded.
template <Scalar T>
std::optional<ViolationWitness<T>> find_violation_surrounding(const ConvexBody<T> &body);

inline constexpr int search_iteration_cap = 128;

}  // namespace helly
