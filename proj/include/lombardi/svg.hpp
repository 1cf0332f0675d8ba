#pragma once

#include <string>
#include <vector>

#include "lombardi/arc_polygon.hpp"
#include "lombardi/drawing.hpp"
#include "lombardi/geometry.hpp"

namespace lombardi {

struct SvgStyle {
    std::string stroke = "#1f4e9c";
    double stroke_width = 2.0;
    std::string fill = "none";
};

/// Deterministic SVG 1.1 scene: fixed 6-decimal coordinates, y axis flipped
/// to screen convention, elements emitted in insertion order. Every circular
/// arc becomes a single elliptical-arc path command with equal radii.
class SvgScene {
  public:
    void add_arc(const Arc& arc, const SvgStyle& style);
    void add_marker(Point p, double r, const std::string& color);
    void add_label(Point p, const std::string& text);

    std::string to_string() const;

  private:
    struct Item {
        enum Kind { ArcPath, Marker, Label } kind;
        Arc arc{Point{0, 0}, Point{0.5, 0}, Point{1, 0}};
        Point at;
        double radius = 0;
        std::string text;
        SvgStyle style;
    };
    std::vector<Item> items_;
    Box bbox_;
};

std::string svg_of_polygon(const ArcPolygon& poly);

/// Free-standing arc configuration with optional highlight markers (used for
/// the crossing figures that infeasible triples produce).
std::string svg_of_arcs(const std::vector<Arc>& arcs, const std::vector<Point>& vertices,
                        const std::vector<Point>& highlights);

std::string svg_of_drawing(const Drawing& d);

}  // namespace lombardi
