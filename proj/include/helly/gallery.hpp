#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "helly/norms.hpp"

namespace helly {

/// Just enough 3D for the two space examples: dot products and lengths.
struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    friend Vec3 operator+(const Vec3 &a, const Vec3 &b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
    friend Vec3 operator*(const Vec3 &a, double s) { return {a.x * s, a.y * s, a.z * s}; }
};

double dot(const Vec3 &a, const Vec3 &b);
double length(const Vec3 &a);

/// One named check of a fixture: the value derived from the fixture data and
/// what it should be.
struct GalleryCheck {
    std::string name;
    std::string expected;
    std::string actual;
    bool pass = false;
};

struct GalleryCase {
    std::string name;
    std::string ball_tag;  // "maxnorm", "euclidean" or "euclidean-3d"
    UnitBall<Rational> ball = UnitBall<Rational>::euclidean();
    VectorMultiset<Rational> vectors;
    std::vector<Vec3> vectors3;
    std::optional<Vec2<Rational>> u;
    std::optional<Vec3> u3;
    Rational epsilon;
    std::size_t k = 0;
};

const std::vector<std::string> &gallery_names();

/// The fixture registry. Throws UnknownCase.
GalleryCase gallery_case(std::string_view name);

/// Recomputes every expected value of the fixture from its data.
std::vector<GalleryCheck> evaluate_case(const GalleryCase &c);

}  // namespace helly
