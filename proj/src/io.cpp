#include "helly/io.hpp"

#include <fstream>
#include <sstream>

#include "helly/error.hpp"

namespace helly {

Json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::io_error, "cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return Json::parse(buf.str());
    } catch (const nlohmann::json::exception &e) {
        throw Error(ErrorCode::parse_error, path + ": " + e.what());
    }
}

Rational parse_json_scalar(const Json &j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_number()) return Rational::parse(j.dump());
    throw Error(ErrorCode::parse_error, "expected a number or a string, got " + j.dump());
}

Vec2<Rational> parse_json_vec(const Json &j) {
    if (!j.is_array() || j.size() != 2) throw Error(ErrorCode::parse_error, "expected [x, y], got " + j.dump());
    return {parse_json_scalar(j[0]), parse_json_scalar(j[1])};
}

VectorMultiset<Rational> parse_vector_list(const Json &j) {
    if (!j.is_array()) throw Error(ErrorCode::parse_error, "expected a list of vectors");
    VectorMultiset<Rational> out;
    for (const auto &item : j) out.push_back(parse_json_vec(item));
    return out;
}

namespace {

const Json &member(const Json &j, const char *key) {
    if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::parse_error, std::string("missing \"") + key + "\"");
    return j.at(key);
}

}  // namespace

UnitBall<Rational> parse_ball(const Json &j) {
    const Json &type = member(j, "type");
    if (type == "euclidean") return UnitBall<Rational>::euclidean();
    if (type == "polygonal") return make_polygonal_ball(parse_vector_list(member(j, "vertices")));
    throw Error(ErrorCode::parse_error, "unknown ball type " + type.dump());
}

UnitBall<Rational> load_ball(const std::string &path) { return parse_ball(read_json_file(path)); }

VectorMultiset<Rational> load_vectors(const std::string &path) {
    return parse_vector_list(member(read_json_file(path), "vectors"));
}

std::vector<Vec2<Rational>> load_polygon(const std::string &path) {
    return parse_vector_list(member(read_json_file(path), "vertices"));
}

Json to_json(const UnitBall<Rational> &ball) {
    if (!ball.is_polygonal()) return {{"type", "euclidean"}};
    Json vs = Json::array();
    for (const auto &v : ball.vertices()) vs.push_back(to_json(v));
    return {{"type", "polygonal"}, {"vertices", vs}};
}

Json to_json(const SuiteReport &report) {
    const SuiteConfig &c = report.config;
    Json records = Json::array();
    for (const auto &r : report.records) {
        Json rec{{"trial", r.trial}, {"digest", r.digest}, {"status", to_string(r.status)}, {"family", r.family}};
        if (!r.detail.empty()) rec["detail"] = r.detail;
        if (!r.witnesses.empty()) rec["witnesses"] = r.witnesses;
        records.push_back(std::move(rec));
    }
    Json families = Json::object();
    for (const auto &[name, count] : report.families) families[name] = count;
    return {{"suite", c.suite},
            {"trials", c.trials},
            {"seed", c.seed},
            {"mode", to_string(c.mode)},
            {"tol", c.tol},
            {"ball", c.ball},
            {"summary",
             {{"pass", report.passed},
              {"fail", report.failed},
              {"vacuous", report.vacuous},
              {"substantive", report.passed + report.failed},
              {"families", families}}},
            {"notes", report.notes},
            {"records", records}};
}

}  // namespace helly
