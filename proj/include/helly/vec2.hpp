#pragma once

#include <vector>

#include "helly/scalar.hpp"

namespace helly {

template <Scalar T>
struct Vec2 {
    T x{};
    T y{};

    Vec2 &operator+=(const Vec2 &o) { x += o.x; y += o.y; return *this; }
    Vec2 &operator-=(const Vec2 &o) { x -= o.x; y -= o.y; return *this; }
    Vec2 &operator*=(const T &s) { x *= s; y *= s; return *this; }
    Vec2 &operator/=(const T &s) { x /= s; y /= s; return *this; }

    friend Vec2 operator+(Vec2 a, const Vec2 &b) { return a += b; }
    friend Vec2 operator-(Vec2 a, const Vec2 &b) { return a -= b; }
    friend Vec2 operator*(Vec2 a, const T &s) { return a *= s; }
    friend Vec2 operator*(const T &s, Vec2 a) { return a *= s; }
    friend Vec2 operator/(Vec2 a, const T &s) { return a /= s; }
    friend Vec2 operator-(const Vec2 &a) { return {-a.x, -a.y}; }

    /// Bitwise equality. Use same_point() for tolerance-aware comparisons.
    friend bool operator==(const Vec2 &, const Vec2 &) = default;
};

/// An ordered multiset of plane vectors; duplicates are meaningful.
template <Scalar T>
using VectorMultiset = std::vector<Vec2<T>>;

template <Scalar T>
T dot(const Vec2<T> &a, const Vec2<T> &b) { return a.x * b.x + a.y * b.y; }

template <Scalar T>
T cross(const Vec2<T> &a, const Vec2<T> &b) { return a.x * b.y - a.y * b.x; }

template <Scalar T>
bool is_zero(const Vec2<T> &a) { return sign(a.x) == 0 && sign(a.y) == 0; }

template <Scalar T>
bool same_point(const Vec2<T> &a, const Vec2<T> &b) { return is_zero(Vec2<T>(a - b)); }

/// Counterclockwise quarter turn.
template <Scalar T>
Vec2<T> perp(const Vec2<T> &a) { return {-a.y, a.x}; }

/// Lexicographic (x, then y) order, used to canonicalize point sets.
template <Scalar T>
bool lex_less(const Vec2<T> &a, const Vec2<T> &b) {
    int cx = compare(a.x, b.x);
    if (cx != 0) return cx < 0;
    return compare(a.y, b.y) < 0;
}

template <Scalar T>
Vec2<T> sum(const std::vector<Vec2<T>> &vs) {
    Vec2<T> s;
    for (const auto &v : vs) s += v;
    return s;
}

template <Scalar To, Scalar From>
Vec2<To> vec_cast(const Vec2<From> &v) { return {scalar_cast<To>(v.x), scalar_cast<To>(v.y)}; }

template <Scalar To, Scalar From>
std::vector<Vec2<To>> vec_cast(const std::vector<Vec2<From>> &vs) {
    std::vector<Vec2<To>> out;
    out.reserve(vs.size());
    for (const auto &v : vs) out.push_back(vec_cast<To>(v));
    return out;
}

}  // namespace helly
