#include "helly/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>

#include "helly/error.hpp"

namespace helly {

namespace {

constexpr double canvas = 480.0;

struct Frame {
    double scale;
    double sx(double x) const { return canvas / 2 + x * scale; }
    double sy(double y) const { return canvas / 2 - y * scale; }
};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string escape(const std::string &s) {
    std::string out;
    for (char c : s) {
        if (c == '<') out += "&lt;";
        else if (c == '>') out += "&gt;";
        else if (c == '&') out += "&amp;";
        else out += c;
    }
    return out;
}

std::string outline(const Frame &f, const std::vector<Vec2<double>> &pts, const char *style) {
    std::string s = "<polygon points=\"";
    for (const auto &p : pts) s += num(f.sx(p.x)) + "," + num(f.sy(p.y)) + " ";
    return s + "\" " + style + "/>\n";
}

}  // namespace

std::string render_svg(const SvgScene &scene) {
    double extent = 1.0;
    auto grow = [&](const Vec2<double> &p) { extent = std::max({extent, std::abs(p.x), std::abs(p.y)}); };
    if (scene.ball && scene.ball->is_polygonal())
        for (const auto &v : scene.ball->vertices()) grow(v);
    for (const auto &v : scene.polygon) grow(v);
    for (const auto &v : scene.vectors) grow(v);
    for (const auto &v : scene.points) grow(v);
    if (scene.highlight) grow(*scene.highlight);
    const Frame f{0.45 * canvas / extent};

    std::string s = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(canvas) + "\" height=\"" + num(canvas) +
                    "\" viewBox=\"0 0 " + num(canvas) + " " + num(canvas) + "\">\n";
    s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    s += "<defs><marker id=\"tip\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" markerWidth=\"6\" markerHeight=\"6\" "
         "orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\" fill=\"#1f5fa8\"/></marker></defs>\n";
    s += "<line x1=\"0\" y1=\"" + num(f.sy(0)) + "\" x2=\"" + num(canvas) + "\" y2=\"" + num(f.sy(0)) +
         "\" stroke=\"#ddd\"/>\n";
    s += "<line x1=\"" + num(f.sx(0)) + "\" y1=\"0\" x2=\"" + num(f.sx(0)) + "\" y2=\"" + num(canvas) +
         "\" stroke=\"#ddd\"/>\n";
    if (scene.ball) {
        if (scene.ball->is_polygonal()) {
            s += outline(f, scene.ball->vertices(), "fill=\"#f3f3f3\" stroke=\"#555\"");
        } else {
            s += "<circle cx=\"" + num(f.sx(0)) + "\" cy=\"" + num(f.sy(0)) + "\" r=\"" + num(f.scale) +
                 "\" fill=\"#f3f3f3\" stroke=\"#555\"/>\n";
        }
    }
    if (!scene.polygon.empty()) s += outline(f, scene.polygon, "fill=\"none\" stroke=\"#8a3ab9\" stroke-width=\"1.5\"");
    for (const auto &v : scene.vectors)
        s += "<line x1=\"" + num(f.sx(0)) + "\" y1=\"" + num(f.sy(0)) + "\" x2=\"" + num(f.sx(v.x)) + "\" y2=\"" +
             num(f.sy(v.y)) + "\" stroke=\"#1f5fa8\" stroke-width=\"1.5\" marker-end=\"url(#tip)\"/>\n";
    for (const auto &p : scene.points)
        s += "<circle cx=\"" + num(f.sx(p.x)) + "\" cy=\"" + num(f.sy(p.y)) + "\" r=\"3\" fill=\"#777\"/>\n";
    if (scene.highlight)
        s += "<circle cx=\"" + num(f.sx(scene.highlight->x)) + "\" cy=\"" + num(f.sy(scene.highlight->y)) +
             "\" r=\"5\" fill=\"#c0392b\"/>\n";
    if (!scene.title.empty())
        s += "<text x=\"10\" y=\"20\" font-family=\"sans-serif\" font-size=\"14\">" + escape(scene.title) + "</text>\n";
    return s + "</svg>\n";
}

void write_svg(const SvgScene &scene, const std::string &path) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::io_error, "cannot write " + path);
    out << render_svg(scene);
}

}  // namespace helly
