#include "lombardi/svg.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace lombardi {

namespace {

std::string fmt(double v) {
    if (v == 0.0) v = 0.0;  // normalize -0
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

constexpr double kCanvas = 640.0;
constexpr double kMargin = 24.0;

}  // namespace

void SvgScene::add_arc(const Arc& arc, const SvgStyle& style) {
    Item it;
    it.kind = Item::ArcPath;
    it.arc = arc;
    it.style = style;
    items_.push_back(it);
    bbox_.merge(arc.bbox());
}

void SvgScene::add_marker(Point p, double r, const std::string& color) {
    Item it;
    it.kind = Item::Marker;
    it.at = p;
    it.radius = r;
    it.style.fill = color;
    items_.push_back(it);
    bbox_.expand(p);
}

void SvgScene::add_label(Point p, const std::string& text) {
    Item it;
    it.kind = Item::Label;
    it.at = p;
    it.text = text;
    items_.push_back(it);
    bbox_.expand(p);
}

std::string SvgScene::to_string() const {
    Box bb = bbox_;
    if (bb.empty) bb.expand({0, 0});
    double span = std::max({bb.maxx - bb.minx, bb.maxy - bb.miny, 1e-9});
    double s = (kCanvas - 2 * kMargin) / span;
    double width = (bb.maxx - bb.minx) * s + 2 * kMargin;
    double height = (bb.maxy - bb.miny) * s + 2 * kMargin;
    auto X = [&](double x) { return (x - bb.minx) * s + kMargin; };
    auto Y = [&](double y) { return height - ((y - bb.miny) * s + kMargin); };

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(width)
        << "\" height=\"" << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << " " << fmt(height)
        << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    for (const Item& it : items_) {
        if (it.kind == Item::ArcPath) {
            const Arc& a = it.arc;
            out << "<path d=\"M " << fmt(X(a.start().x)) << " " << fmt(Y(a.start().y));
            if (a.is_segment()) {
                out << " L " << fmt(X(a.end().x)) << " " << fmt(Y(a.end().y));
            } else {
                double r = a.radius() * s;
                int large = std::fabs(a.sweep()) > std::numbers::pi ? 1 : 0;
                // The y flip reverses orientation: counterclockwise sweeps
                // render with SVG sweep flag 0.
                int sweep = a.sweep() > 0 ? 0 : 1;
                out << " A " << fmt(r) << " " << fmt(r) << " 0 " << large << " " << sweep << " "
                    << fmt(X(a.end().x)) << " " << fmt(Y(a.end().y));
            }
            out << "\" stroke=\"" << it.style.stroke << "\" stroke-width=\""
                << fmt(it.style.stroke_width) << "\" fill=\"" << it.style.fill
                << "\" stroke-linecap=\"round\"/>\n";
        } else if (it.kind == Item::Marker) {
            out << "<circle cx=\"" << fmt(X(it.at.x)) << "\" cy=\"" << fmt(Y(it.at.y))
                << "\" r=\"" << fmt(it.radius) << "\" fill=\"" << it.style.fill << "\"/>\n";
        } else {
            out << "<text x=\"" << fmt(X(it.at.x) + 6) << "\" y=\"" << fmt(Y(it.at.y) - 6)
                << "\" font-size=\"13\" font-family=\"sans-serif\">" << it.text << "</text>\n";
        }
    }
    out << "</svg>\n";
    return out.str();
}

std::string svg_of_polygon(const ArcPolygon& poly) {
    SvgScene scene;
    SvgStyle edge;
    for (const Arc& a : poly.edges()) scene.add_arc(a, edge);
    for (const Point& v : poly.vertices()) scene.add_marker(v, 4.0, "#222222");
    return scene.to_string();
}

std::string svg_of_arcs(const std::vector<Arc>& arcs, const std::vector<Point>& vertices,
                        const std::vector<Point>& highlights) {
    SvgScene scene;
    SvgStyle edge;
    for (const Arc& a : arcs) scene.add_arc(a, edge);
    for (const Point& v : vertices) scene.add_marker(v, 4.0, "#222222");
    for (const Point& h : highlights) scene.add_marker(h, 6.0, "#cc2222");
    return scene.to_string();
}

std::string svg_of_drawing(const Drawing& d) {
    SvgScene scene;
    SvgStyle edge;
    for (const auto& [eid, arc] : d.edge_arcs) scene.add_arc(arc, edge);
    for (const auto& [v, p] : d.vertex_points) scene.add_marker(p, 3.5, "#222222");
    return scene.to_string();
}

}  // namespace lombardi
