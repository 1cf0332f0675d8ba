#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lombardi/geometry.hpp"

namespace lombardi {

/// Closed cyclic chain of circular arcs; edge i joins vertex i to vertex i+1 (mod n).
/// Traversal places the interior on the right (clockwise convention).
class ArcPolygon {
  public:
    ArcPolygon(std::vector<Point> vertices, std::vector<Arc> edges);

    std::size_t size() const { return vertices_.size(); }
    const std::vector<Point>& vertices() const { return vertices_; }
    const std::vector<Arc>& edges() const { return edges_; }
    const Point& vertex(std::size_t i) const { return vertices_[i]; }
    const Arc& edge(std::size_t i) const { return edges_[i]; }

    Box bbox() const;
    /// Same polygon with old vertex `shift` relabeled as vertex 0.
    ArcPolygon rotated_indices(std::size_t shift) const;
    /// Translated/scaled uniformly to fit the unit square.
    ArcPolygon normalized_to_unit_square() const;
    ArcPolygon transformed(const MoebiusMap& map) const;

  private:
    std::vector<Point> vertices_;
    std::vector<Arc> edges_;
};

enum class CrossingKind { TransversalCrossing, ImproperOverlap, VertexOnEdge };

struct SimplicityWitness {
    std::size_t edge_a = 0;
    std::size_t edge_b = 0;
    Point where;
    CrossingKind kind = CrossingKind::TransversalCrossing;
};

struct SimplicityReport {
    bool simple = true;
    std::optional<SimplicityWitness> witness;
};

/// Interior angle at vertex i, in [0, 2*pi]; cusps measure 0 and full
/// tangential wraps 2*pi (disambiguated by the incident arcs' curvatures).
double measure_interior_angle(const ArcPolygon& poly, std::size_t i);

std::vector<double> measure_all_angles(const ArcPolygon& poly);

/// Checks every edge pair; shared vertices of consecutive edges are the only
/// permitted contacts (tangential contact there included).
SimplicityReport is_simple(const ArcPolygon& poly);

enum class QuadVariant { AdjacentZeros, AlternatingZeros };

/// The two semicircle quadrilaterals on four collinear vertices realizing
/// interior angles (0,0,pi,pi) and (0,pi,0,pi).
ArcPolygon base_quadrilateral(QuadVariant variant);

/// Splits edge e at arc-length fraction s, inserting a vertex of interior angle pi.
ArcPolygon insert_flat_vertex(const ArcPolygon& poly, std::size_t e, double s);

/// Bigon with the given equal interior angle at both vertices, angle in (0, 2*pi).
ArcPolygon bigon(Point u, Point v, double interior_angle);

/// Joins two simple polygons at zero-angle vertices: opens both cusps to
/// infinity, lines the resulting parallel rays up on a unit-width strip, and
/// bridges them with straight segments. Vertex 0 of the result is P's vertex
/// cuspP+1; P's remaining angles are followed by Q's.
ArcPolygon glue_at_cusps(const ArcPolygon& P, std::size_t cuspP, const ArcPolygon& Q,
                         std::size_t cuspQ);

/// Realizes any cyclic angle sequence (n >= 3, all angles in [0, pi]) except
/// permutations of (0, 0, pi) as a simple arc-polygon, normalized to the unit
/// square. Measured angles match the input within 1e-6.
ArcPolygon realize(const std::vector<double>& angles);

struct ZigzagNote {
    int sides = 0;
    bool infeasible = true;
    std::string reason;
};

/// Documented infeasibility of even-length sequences alternating 0 and 2*pi:
/// the sides would have to lie on a chain of nested circles.
ZigzagNote zigzag_is_infeasible(int n);

}  // namespace lombardi
