#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "helly/algorithms.hpp"
#include "helly/error.hpp"
#include "helly/gallery.hpp"
#include "helly/io.hpp"
#include "helly/suite.hpp"
#include "helly/svg.hpp"
#include "helly/symmetry.hpp"

using namespace helly;

namespace {

UnitBall<Rational> ball_from_arg(const std::string &arg) {
    if (arg == "maxnorm") return max_norm_ball<Rational>();
    if (arg == "euclidean") return UnitBall<Rational>::euclidean();
    return load_ball(arg);
}

Vec2<Rational> parse_pair(const std::string &text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw Error(ErrorCode::parse_error, "expected x,y but got '" + text + "'");
    return {Rational::parse(text.substr(0, comma)), Rational::parse(text.substr(comma + 1))};
}

std::vector<Vec2<double>> partial_sums(const VectorMultiset<double> &vs) {
    std::vector<Vec2<double>> out;
    Vec2<double> s{0.0, 0.0};
    for (const auto &v : vs) out.push_back(s += v);
    return out;
}

int cmd_verify(const SuiteConfig &config, const std::string &out) {
    const SuiteReport report = run_suite(config);
    const std::string text = to_json(report).dump(2) + "\n";
    if (out.empty() || out == "-") {
        std::cout << text;
    } else {
        std::ofstream f(out);
        if (!f) throw Error(ErrorCode::io_error, "cannot write " + out);
        f << text;
    }
    std::fprintf(stderr, "%s: %zu pass, %zu fail, %zu vacuous (%.2f s)\n", config.suite.c_str(), report.passed,
                 report.failed, report.vacuous, report.wall_seconds);
    return report.ok() ? 0 : 1;
}

int cmd_gallery(const std::string &only, const std::string &svg) {
    const std::vector<std::string> names = only.empty() ? gallery_names() : std::vector<std::string>{only};
    bool all = true;
    for (const auto &name : names) {
        const GalleryCase c = gallery_case(name);
        Json checks = Json::array();
        bool ok = true;
        for (const auto &chk : evaluate_case(c)) {
            ok = ok && chk.pass;
            checks.push_back({{"name", chk.name}, {"expected", chk.expected}, {"actual", chk.actual}, {"pass", chk.pass}});
        }
        all = all && ok;
        std::cout << Json{{"case", c.name}, {"ball", c.ball_tag}, {"pass", ok}, {"checks", checks}}.dump() << "\n";
        if (!svg.empty() && !c.vectors.empty()) {
            // one file per planar case: <svg>-<case>.svg, or exactly <svg> for a single case
            const std::string path = only.empty() ? svg + "-" + c.name + ".svg" : svg;
            const auto vs = vec_cast<double>(c.vectors);
            write_svg({c.name, ball_cast<double>(c.ball), {}, vs, partial_sums(vs), sum(vs)}, path);
        }
    }
    return all ? 0 : 1;
}

int cmd_signs(const std::string &vectors_path, const std::string &ball_arg, const std::string &svg) {
    const auto ball = ball_from_arg(ball_arg);
    const auto vs = load_vectors(vectors_path);
    const SignVector signs = choose_signs(ball, vs);
    const auto check = check_signs(ball, vs, signs);
    VectorMultiset<Rational> signed_vs;
    for (std::size_t i = 0; i < vs.size(); ++i) signed_vs.push_back(signs[i] > 0 ? vs[i] : Vec2<Rational>(-vs[i]));
    Json out{{"signs", signs},
             {"signed_sum", to_json(sum(signed_vs))},
             {"check",
              {{"exhaustive", check.exhaustive},
               {"odd_subsets_checked", check.subsets_checked},
               {"failures", check.failures}}}};
    std::cout << out.dump() << "\n";
    if (!svg.empty()) {
        const auto dv = vec_cast<double>(signed_vs);
        write_svg({"signs", ball_cast<double>(ball), {}, dv, partial_sums(dv), sum(dv)}, svg);
    }
    return check.failures == 0 ? 0 : 1;
}

int cmd_ginzburg(const std::string &vectors_path, const std::string &u_text, const std::string &svg) {
    const auto vs = vec_cast<double>(load_vectors(vectors_path));
    const auto u = vec_cast<double>(parse_pair(u_text));
    const RotationTrace trace = ginzburg_reduce(vs, u);
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const auto &s = trace.steps[i];
        std::cout << Json{{"step", i},
                          {"fixed_index", s.fixed_index},
                          {"rotation", s.rotation},
                          {"moving", s.moving},
                          {"sum", {s.sum.x, s.sum.y}},
                          {"norm", s.norm}}
                         .dump()
                  << "\n";
    }
    std::cout << Json{{"final_sum", {trace.final_sum.x, trace.final_sum.y}}, {"final_norm", trace.final_norm}}.dump()
              << "\n";
    if (!svg.empty()) {
        std::vector<Vec2<double>> sums;
        for (const auto &s : trace.steps) sums.push_back(s.sum);
        write_svg({"ginzburg", UnitBall<double>::euclidean(), {}, vs, sums, trace.final_sum}, svg);
    }
    return 0;
}

Json witness_json(const std::optional<ViolationWitness<Rational>> &w, const ConvexBody<Rational> &body) {
    if (!w) return nullptr;
    return {{"kind", to_string(w->kind)}, {"a", to_json(w->a)}, {"b", to_json(w->b)},
            {"c", to_json(w->c)},         {"h", to_json(w->h)}, {"verified", verify_witness(body, *w)}};
}

int cmd_symmetry(const std::string &polygon_path, const std::string &svg) {
    const auto body = make_convex_body(load_polygon(polygon_path));
    const bool symmetric = is_centrally_symmetric(body);
    const auto wi = find_violation_halfplane(body);
    const auto wii = find_violation_surrounding(body);
    std::cout << Json{{"symmetric", symmetric}, {"witness_i", witness_json(wi, body)},
                      {"witness_ii", witness_json(wii, body)}}
                     .dump()
              << "\n";
    if (!svg.empty()) {
        SvgScene scene{"symmetry", std::nullopt, vec_cast<double>(body.vertices()), {}, {}, std::nullopt};
        for (const auto *w : {&wi, &wii})
            if (*w) {
                scene.points.push_back(vec_cast<double>((*w)->a));
                scene.points.push_back(vec_cast<double>((*w)->b));
                scene.points.push_back(vec_cast<double>((*w)->c));
                scene.highlight = vec_cast<double>((*w)->h);
            }
        write_svg(scene, svg);
    }
    // an asymmetric body must come with verified witnesses
    const bool consistent = symmetric ? (!wi && !wii)
                                      : (wi && wii && verify_witness(body, *wi) && verify_witness(body, *wii));
    return consistent ? 0 : 1;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Sums of unit vectors in normed planes: theorem checks, constructions and property suites"};
    app.require_subcommand(1);

    SuiteConfig config;
    std::string mode = "exact", out;
    auto *verify = app.add_subcommand("verify", "run a randomized property suite and emit a JSON report");
    verify->add_option("suite", config.suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
    verify->add_option("--trials", config.trials, "number of trials")->check(CLI::PositiveNumber);
    verify->add_option("--seed", config.seed, "64-bit seed");
    verify->add_option("--mode", mode, "exact or float")->check(CLI::IsMember({"exact", "float"}));
    verify->add_option("--tol", config.tol, "float tolerance")->check(CLI::PositiveNumber);
    verify->add_option("--ball", config.ball, "maxnorm, euclidean, random or a ball JSON file");
    verify->add_option("--out", out, "report path (default stdout)");
    verify->add_option("--jobs", config.jobs, "worker threads")->check(CLI::Range(1u, 256u));

    std::string gallery_only, svg;
    auto *gallery = app.add_subcommand("gallery", "fixed counterexample fixtures");
    auto *gallery_run = gallery->add_subcommand("run", "evaluate the fixtures");
    gallery->require_subcommand(1);
    gallery_run->add_option("--case", gallery_only, "a single fixture")->check(CLI::IsMember(gallery_names()));
    gallery_run->add_option("--svg", svg, "SVG output (a prefix when running every case)");

    std::string vectors_path, ball_arg, u_text = "0,1";
    auto *signs = app.add_subcommand("signs", "choose signs so every odd signed subset sum is a unit or longer");
    signs->add_option("vectors", vectors_path, "vector set JSON")->required()->check(CLI::ExistingFile);
    signs->add_option("--ball", ball_arg, "ball JSON file, maxnorm or euclidean")->required();
    signs->add_option("--svg", svg, "SVG output");

    auto *ginzburg = app.add_subcommand("ginzburg", "rotation reduction trace for Euclidean unit vectors");
    ginzburg->add_option("vectors", vectors_path, "vector set JSON")->required()->check(CLI::ExistingFile);
    ginzburg->add_option("--u", u_text, "halfplane normal x,y");
    ginzburg->add_option("--svg", svg, "SVG output");

    std::string polygon_path;
    auto *symmetry = app.add_subcommand("symmetry", "central symmetry of a convex polygon");
    auto *symmetry_check = symmetry->add_subcommand("check", "test symmetry and search for violation witnesses");
    symmetry->require_subcommand(1);
    symmetry_check->add_option("polygon", polygon_path, "polygon JSON")->required()->check(CLI::ExistingFile);
    symmetry_check->add_option("--svg", svg, "SVG output");

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) {
            config.mode = parse_mode(mode);
            return cmd_verify(config, out);
        }
        if (gallery_run->parsed()) return cmd_gallery(gallery_only, svg);
        if (signs->parsed()) return cmd_signs(vectors_path, ball_arg, svg);
        if (ginzburg->parsed()) return cmd_ginzburg(vectors_path, u_text, svg);
        if (symmetry_check->parsed()) return cmd_symmetry(polygon_path, svg);
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
