#pragma once

#include <array>
#include <optional>

#include "lombardi/arc_polygon.hpp"
#include "lombardi/geometry.hpp"

namespace lombardi {

struct AngleTriple {
    std::array<double, 3> theta{};
};

/// Signed bigon angles phi_i = psi + theta_i, psi = (pi - sum theta)/2.
/// phi_i belongs to the side opposite vertex i; negative means the side lies
/// outside the circumcircle of the three vertices.
struct BigonTriple {
    std::array<double, 3> phi{};
    double psi = 0;
};

enum class TriangleStatus { Realizable, Boundary, Infeasible };

enum class ViolationKind { PhiAtPlusPi, PhiAtMinusPi, PhiAbovePi, PhiBelowMinusPi };

struct TriangleVerdict {
    TriangleStatus status = TriangleStatus::Realizable;
    BigonTriple bigons;
    std::optional<std::size_t> violating_index;
    std::optional<ViolationKind> violation_kind;
    /// When phi_i is out of range, theta_i is the unique angle on the far
    /// side of pi (checked, per the one-bad-angle lemma).
    bool unique_extreme_theta = false;
};

BigonTriple bigon_angles(const AngleTriple& t);

/// Complete characterization: realizable iff every phi_i lies strictly in
/// (-pi, pi). |phi_i| within epsilon of pi reports Boundary.
TriangleVerdict classify(const AngleTriple& t);

/// Default witness placement: clockwise on the unit circle.
std::array<Point, 3> default_triangle_vertices();

/// The three side arcs built from the phi formula regardless of feasibility;
/// side i is opposite vertex i and joins vertex i+1 to vertex i+2 (mod 3).
/// Infeasible triples yield the crossing configurations the characterization
/// proof describes.
std::array<Arc, 3> triangle_arcs(const AngleTriple& t, const std::array<Point, 3>& vertices);

/// Simple arc-triangle with the given interior angles on the given clockwise
/// vertex triple. Refuses Boundary and Infeasible triples.
ArcPolygon construct_triangle(const AngleTriple& t, const std::array<Point, 3>& vertices);
ArcPolygon construct_triangle(const AngleTriple& t);

/// Wraps the three arcs of triangle_arcs as a (possibly non-simple) polygon.
ArcPolygon triangle_configuration(const AngleTriple& t, const std::array<Point, 3>& vertices);

struct RegionFacet {
    std::array<double, 3> coef{};  // coef . theta  (<|<=)  rhs
    double rhs = 0;
    bool strict = false;
    std::string label;
};

/// The six cube facets 0 <= theta_i <= 2*pi plus the six corner-truncation
/// facets -pi < phi_i < pi, written in theta coordinates.
std::vector<RegionFacet> feasible_region_facets();

bool facet_satisfied(const RegionFacet& f, const AngleTriple& t);

}  // namespace lombardi
