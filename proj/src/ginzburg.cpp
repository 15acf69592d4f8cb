#include <algorithm>
#include <cmath>
#include <numbers>

#include "helly/algorithms.hpp"
#include "helly/error.hpp"

namespace helly {

namespace {

constexpr double pi = std::numbers::pi;
constexpr int max_subrotations = 8;

Vec2<double> at_angle(double theta) {
    if (theta == 0.0) return {1.0, 0.0};
    if (theta == pi) return {-1.0, 0.0};
    return {std::cos(theta), std::sin(theta)};
}

double length(const Vec2<double> &v) { return std::hypot(v.x, v.y); }

}  // namespace

RotationTrace ginzburg_reduce(const VectorMultiset<double> &vectors, const Vec2<double> &u) {
    const double tol = tolerance();
    if (is_zero(u)) throw Error(ErrorCode::zero_direction, "halfplane normal is zero");
    if (vectors.size() % 2 == 0) throw Error(ErrorCode::even_cardinality, "need an odd number of vectors");

    RotationTrace trace;
    trace.frame_rotation = pi / 2 - std::atan2(u.y, u.x);
    const double c = std::cos(trace.frame_rotation), s = std::sin(trace.frame_rotation);

    const std::size_t n = vectors.size();
    std::vector<double> theta(n);
    std::vector<int> fixed_side(n, 0);  // +1 at (1,0), -1 at (-1,0), 0 while moving
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2<double> &v = vectors[i];
        if (std::abs(length(v) - 1.0) > tol) throw Error(ErrorCode::not_unit_vectors, "Euclidean unit vectors required");
        const Vec2<double> w{c * v.x - s * v.y, s * v.x + c * v.y};
        if (w.y < -tol) throw Error(ErrorCode::halfplane_violated, "vector outside the closed halfplane");
        theta[i] = std::clamp(std::atan2(std::max(w.y, 0.0), w.x), 0.0, pi);
        if (theta[i] <= tol) theta[i] = 0.0;
        if (theta[i] >= pi - tol) theta[i] = pi;
    }

    auto vector_of = [&](std::size_t i) {
        return fixed_side[i] != 0 ? Vec2<double>{double(fixed_side[i]), 0.0} : at_angle(theta[i]);
    };

    for (std::size_t round = 0; round < n; ++round) {
        RotationStep step;
        Vec2<double> f, m;
        for (std::size_t i = 0; i < n; ++i) {
            const Vec2<double> v = vector_of(i);
            if (fixed_side[i] != 0) {
                step.fixed.push_back(i);
                step.fixed_vectors.push_back(v);
                f += v;
            } else {
                step.moving.push_back(i);
                step.moving_vectors.push_back(v);
                m += v;
            }
        }
        step.sum = f + m;
        step.norm = length(step.sum);

        for (int sub = 0; sub < max_subrotations; ++sub) {
            double to_zero = pi, to_pi = pi;
            for (std::size_t i : step.moving) {
                to_zero = std::min(to_zero, theta[i]);
                to_pi = std::min(to_pi, pi - theta[i]);
            }

            // d/dphi of |f + R(phi) m|^2 / 2 is cross(m, f).
            const double slope = cross(m, f);
            int dir;  // +1 counterclockwise (towards (-1,0)), -1 clockwise
            if (slope > tol) dir = -1;
            else if (slope < -tol) dir = 1;
            else if (dot(f, m) > tol) dir = to_zero <= tol ? 1 : -1;  // local maximum: either way decreases
            else dir = to_zero <= to_pi ? -1 : 1;                     // flat: nearest axis
            double amount = dir < 0 ? to_zero : to_pi;

            // The slope changes sign where R(phi) m becomes parallel to f.
            bool split = false;
            if (length(f) > tol && length(m) > tol) {
                double rev = std::fmod(dir * (std::atan2(f.y, f.x) - std::atan2(m.y, m.x)), pi);
                if (rev < 0) rev += pi;
                if (rev <= tol) rev += pi;
                if (rev < amount - tol) {
                    amount = rev;
                    split = true;
                }
            }

            for (std::size_t i : step.moving) theta[i] = std::clamp(theta[i] + dir * amount, 0.0, pi);
            step.rotation += dir * amount;
            m = {};
            for (std::size_t i : step.moving) m += at_angle(theta[i]);
            if (!split) break;
        }

        std::optional<std::size_t> arrived;
        for (std::size_t i : step.moving) {
            if (theta[i] <= tol) theta[i] = 0.0;
            else if (theta[i] >= pi - tol) theta[i] = pi;
            else continue;
            if (!arrived) arrived = i;
        }
        if (!arrived) {
            // Sub-rotation cap reached before anything arrived: finish the turn.
            std::size_t best = step.moving.front();
            for (std::size_t i : step.moving)
                if (std::min(theta[i], pi - theta[i]) < std::min(theta[best], pi - theta[best])) best = i;
            const double delta = theta[best] < pi - theta[best] ? -theta[best] : pi - theta[best];
            for (std::size_t i : step.moving) theta[i] = std::clamp(theta[i] + delta, 0.0, pi);
            step.rotation += delta;
            theta[best] = delta < 0 ? 0.0 : pi;
            arrived = best;
        }
        fixed_side[*arrived] = theta[*arrived] == 0.0 ? 1 : -1;
        step.fixed_index = *arrived;
        trace.steps.push_back(std::move(step));
    }

    for (std::size_t i = 0; i < n; ++i) trace.final_sum += vector_of(i);
    trace.final_norm = length(trace.final_sum);
    return trace;
}

}  // namespace helly
