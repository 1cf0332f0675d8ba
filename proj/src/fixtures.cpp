#include "lombardi/fixtures.hpp"

#include <numbers>
#include <sstream>

#include "lombardi/drawing.hpp"
#include "lombardi/graph_io.hpp"
#include "lombardi/svg.hpp"

namespace lombardi {

namespace {
constexpr double kPi = std::numbers::pi;
}

std::string svg_of_triangle_configuration(const AngleTriple& t) {
    std::array<Point, 3> vs = default_triangle_vertices();
    std::array<Arc, 3> sides = triangle_arcs(t, vs);
    std::vector<Arc> arcs(sides.begin(), sides.end());
    std::vector<Point> verts(vs.begin(), vs.end());

    // Highlight every contact that a simple arc-triangle would not have.
    std::vector<Point> bad;
    double tol = 1e2 * epsilon();
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            ArcIntersections hits = arc_intersections(arcs[i], arcs[j]);
            for (const ArcIntersection& hit : hits.points) {
                bool at_vertex = false;
                for (const Point& v : verts) at_vertex = at_vertex || near(hit.p, v, tol);
                if (!at_vertex) bad.push_back(hit.p);
            }
        }
    }
    return svg_of_arcs(arcs, verts, bad);
}

std::string pendant_triangle_graph(int pendants_inside_at_v0) {
    GraphFile f;
    std::vector<std::pair<int, int>> edges = {{0, 1}, {1, 2}, {2, 0}};
    int next = 3;
    for (int v = 0; v < 3; ++v)
        for (int k = 0; k < 4; ++k) edges.push_back({v, next++});
    f = to_graph_file(edges);
    if (pendants_inside_at_v0 > 0) {
        // Grow vertex 0's pendant count so `inside` of them can sit in the face.
        for (int k = 4; k < pendants_inside_at_v0; ++k) f.edges.push_back({0, next++});
        f = to_graph_file(f.edges);
        f.has_interior = true;
        f.interior_marks[0] = pendants_inside_at_v0;
    }
    return serialize_graph_file(f);
}

std::vector<Fixture> all_fixtures() {
    std::vector<Fixture> out;

    out.push_back({"boscovich_triangle.svg",
                   svg_of_polygon(construct_triangle(AngleTriple{{2 * kPi, kPi, kPi}}))});

    out.push_back({"crossed_vertex_on_arc.svg",
                   svg_of_triangle_configuration(AngleTriple{{0, 4 * kPi / 3, 5 * kPi / 3}})});
    out.push_back({"crossed_double_crossing.svg",
                   svg_of_triangle_configuration(AngleTriple{{0, 3 * kPi / 2, 11 * kPi / 6}})});

    out.push_back(
        {"quad_adjacent_zeros.svg", svg_of_polygon(base_quadrilateral(QuadVariant::AdjacentZeros))});
    out.push_back({"quad_alternating_zeros.svg",
                   svg_of_polygon(base_quadrilateral(QuadVariant::AlternatingZeros))});

    out.push_back({"pendant_triangle.graph", pendant_triangle_graph(0)});
    out.push_back({"pendant_triangle_inside.graph", pendant_triangle_graph(4)});

    {
        GraphFile f = parse_graph_file(pendant_triangle_graph(0));
        CactusGraph g = validate_cactus(f.edges);
        out.push_back({"pendant_triangle_natural.svg", svg_of_drawing(draw_cactus(g))});
    }
    {
        // Diagnostic for the pendants-inside embedding: the infeasible
        // triangle face configuration.
        GraphFile f = parse_graph_file(pendant_triangle_graph(4));
        CactusGraph g = validate_cactus(f.edges);
        EmbeddedCactus e = embed_from_file(g, f);
        std::vector<FaceCheck> checks = check_embedded_faces(e);
        std::ostringstream svg;
        for (const FaceCheck& fc : checks) {
            if (fc.status == FaceStatus::Boundary || fc.status == FaceStatus::Infeasible) {
                AngleTriple t{{fc.angles[0], fc.angles[1], fc.angles[2]}};
                svg << svg_of_triangle_configuration(t);
                break;
            }
        }
        out.push_back({"pendant_triangle_inside_diagnostic.svg", svg.str()});
    }
    return out;
}

}  // namespace lombardi
