#pragma once

#include <string>

#include <json.hpp>

#include "helly/norms.hpp"
#include "helly/suite.hpp"
#include "helly/theorems.hpp"

namespace helly {

using Json = nlohmann::ordered_json;

/// Throws IoError when the file cannot be read, ParseError on bad JSON.
Json read_json_file(const std::string &path);

/// A coordinate: a string holding an integer, decimal or "p/q", or a JSON
/// number (read through its shortest decimal form). Throws ParseError.
Rational parse_json_scalar(const Json &j);
Vec2<Rational> parse_json_vec(const Json &j);
VectorMultiset<Rational> parse_vector_list(const Json &j);

/// {"type":"polygonal","vertices":[...]} or {"type":"euclidean"}.
UnitBall<Rational> parse_ball(const Json &j);

UnitBall<Rational> load_ball(const std::string &path);
/// {"vectors":[...]}
VectorMultiset<Rational> load_vectors(const std::string &path);
/// {"vertices":[...]}
std::vector<Vec2<Rational>> load_polygon(const std::string &path);

template <Scalar T>
Json to_json(const Vec2<T> &v) {
    return Json::array({to_string(v.x), to_string(v.y)});
}

template <Scalar T>
Json to_json(const VerifyReport<T> &r) {
    Json w = Json::array();
    for (const auto &k : r.witnesses) w.push_back({{"subset", k.subset}, {"value", to_json(k.value)}});
    return {{"theorem", r.theorem},     {"hypothesis", r.hypothesis_holds},
            {"conclusion", r.conclusion_holds}, {"total", to_json(r.total)},
            {"total_norm", to_string(r.total_norm)}, {"witnesses", w},
            {"notes", r.notes}};
}

Json to_json(const UnitBall<Rational> &ball);

/// Everything but wall time, so equal configs give byte-identical output.
Json to_json(const SuiteReport &report);

}  // namespace helly
