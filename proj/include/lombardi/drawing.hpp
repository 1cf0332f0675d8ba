#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lombardi/arc_polygon.hpp"
#include "lombardi/arc_triangle.hpp"
#include "lombardi/cactus.hpp"
#include "lombardi/geometry.hpp"

namespace lombardi {

/// Vertex points and edge arcs; arcs are oriented from edge.u to edge.v.
struct Drawing {
    std::map<int, Point> vertex_points;
    std::map<int, Arc> edge_arcs;

    bool covers_vertex(int v) const { return vertex_points.count(v) > 0; }
    Box bbox() const;
    Drawing normalized() const;
};

/// Partial Lombardi drawing of a subgraph: angles at every drawn vertex
/// already match the full graph's requirements.
using PartialDrawing = Drawing;

/// Draws one block: a cycle becomes the arc-polygon realizing its face angle
/// sequence, a bridge a unit segment.
PartialDrawing draw_block(const CactusGraph& g, const Block& block,
                          const std::vector<double>& required_angles);

/// Merges drawings sharing exactly the articulation vertex v, giving each a
/// disjoint open wedge of the plane around its prescribed ray directions.
/// rotation_at_v lists all of v's edges in embedding order; every drawing's
/// edges at v must be consecutive in it.
PartialDrawing glue_at_articulation(int v, const std::vector<PartialDrawing>& pieces,
                                    const std::vector<int>& rotation_at_v,
                                    const CactusGraph& g);

/// Planar Lombardi drawing of the whole cactus in its natural embedding.
Drawing draw_cactus(const CactusGraph& g);

struct VerifyIssue {
    std::string what;
    std::optional<int> vertex;
    std::optional<std::pair<int, int>> edge_pair;
    std::optional<Point> where;
};

struct VerifyReport {
    bool pass = true;
    std::vector<VerifyIssue> issues;
};

/// Checks perfect angular resolution (gaps of 2*pi/deg at every vertex of
/// degree >= 2, within tol) and that arcs intersect only at shared endpoints.
VerifyReport verify_lombardi(const Drawing& d, const CactusGraph& g, double tol = 1e-6);

enum class FaceStatus { Realizable, Boundary, Infeasible, Undecided };

struct FaceCheck {
    int block_index = 0;
    std::vector<double> angles;
    FaceStatus status = FaceStatus::Undecided;
    std::optional<TriangleVerdict> triangle;  // present for 3-cycle faces
    std::string note;
};

/// Per-face necessary conditions: 3-cycle faces are classified through the
/// arc-triangle characterization (Boundary/Infeasible faces are certified
/// obstructions); longer faces with all angles <= pi are realizable; anything
/// else is reported Undecided.
std::vector<FaceCheck> check_embedded_faces(const EmbeddedCactus& e);

}  // namespace lombardi
