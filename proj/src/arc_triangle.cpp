#include "lombardi/arc_triangle.hpp"

#include <cmath>
#include <numbers>

namespace lombardi {

namespace {
constexpr double kPi = std::numbers::pi;

void check_range(const AngleTriple& t) {
    for (double th : t.theta)
        if (th < -epsilon() || th > 2 * kPi + epsilon())
            throw angle_out_of_range("triangle angle outside [0, 2*pi]");
}
}  // namespace

BigonTriple bigon_angles(const AngleTriple& t) {
    check_range(t);
    BigonTriple b;
    b.psi = (kPi - t.theta[0] - t.theta[1] - t.theta[2]) / 2;
    for (int i = 0; i < 3; ++i) b.phi[i] = b.psi + t.theta[i];
    return b;
}

TriangleVerdict classify(const AngleTriple& t) {
    TriangleVerdict v;
    v.bigons = bigon_angles(t);
    double eps = epsilon();

    for (std::size_t i = 0; i < 3; ++i) {
        double phi = v.bigons.phi[i];
        if (phi > kPi + eps || phi < -kPi - eps) {
            v.status = TriangleStatus::Infeasible;
            v.violating_index = i;
            v.violation_kind = phi > 0 ? ViolationKind::PhiAbovePi : ViolationKind::PhiBelowMinusPi;
            // One-bad-angle lemma: theta_i is the unique angle beyond pi on
            // the matching side.
            bool unique = true;
            for (std::size_t j = 0; j < 3; ++j) {
                bool extreme = phi > 0 ? t.theta[j] > kPi : t.theta[j] < kPi;
                if (j == i ? !extreme : extreme) unique = false;
            }
            v.unique_extreme_theta = unique;
            return v;
        }
    }
    for (std::size_t i = 0; i < 3; ++i) {
        double phi = v.bigons.phi[i];
        if (std::fabs(std::fabs(phi) - kPi) <= eps) {
            v.status = TriangleStatus::Boundary;
            v.violating_index = i;
            v.violation_kind = phi > 0 ? ViolationKind::PhiAtPlusPi : ViolationKind::PhiAtMinusPi;
            return v;
        }
    }
    v.status = TriangleStatus::Realizable;
    return v;
}

std::array<Point, 3> default_triangle_vertices() {
    return {Point{1, 0}, Point{std::cos(-2 * kPi / 3), std::sin(-2 * kPi / 3)},
            Point{std::cos(-4 * kPi / 3), std::sin(-4 * kPi / 3)}};
}

namespace {

void check_vertices(const std::array<Point, 3>& v) {
    double scale = std::max({1.0, distance(v[0], v[1]), distance(v[1], v[2])});
    double tol = epsilon() * scale;
    if (near(v[0], v[1], tol) || near(v[1], v[2], tol) || near(v[0], v[2], tol))
        throw degenerate_vertices("triangle vertices not pairwise distinct");
    double area2 = cross(v[1] - v[0], v[2] - v[0]);
    if (std::fabs(area2) <= tol * scale)
        throw degenerate_vertices("triangle vertices are collinear");
    if (area2 > 0) throw degenerate_vertices("triangle vertices must be in clockwise order");
}

}  // namespace

std::array<Arc, 3> triangle_arcs(const AngleTriple& t, const std::array<Point, 3>& vertices) {
    check_vertices(vertices);
    BigonTriple b = bigon_angles(t);
    GCircle circ = circumcircle(vertices[0], vertices[1], vertices[2]);
    // Side i runs from vertex i+1 to vertex i+2 and is opposite vertex i.
    std::array<Arc, 3> sides = {
        arc_to_circle_unchecked(vertices[1], vertices[2], circ, b.phi[0]),
        arc_to_circle_unchecked(vertices[2], vertices[0], circ, b.phi[1]),
        arc_to_circle_unchecked(vertices[0], vertices[1], circ, b.phi[2]),
    };
    return sides;
}

ArcPolygon triangle_configuration(const AngleTriple& t, const std::array<Point, 3>& vertices) {
    std::array<Arc, 3> sides = triangle_arcs(t, vertices);
    // Edge i of the polygon joins vertex i to vertex i+1, i.e. side i+2.
    return ArcPolygon({vertices[0], vertices[1], vertices[2]},
                      {sides[2], sides[0], sides[1]});
}

ArcPolygon construct_triangle(const AngleTriple& t, const std::array<Point, 3>& vertices) {
    TriangleVerdict v = classify(t);
    if (v.status != TriangleStatus::Realizable)
        throw not_realizable("angle triple is not realizable by a simple arc-triangle");
    return triangle_configuration(t, vertices);
}

ArcPolygon construct_triangle(const AngleTriple& t) {
    return construct_triangle(t, default_triangle_vertices());
}

std::vector<RegionFacet> feasible_region_facets() {
    std::vector<RegionFacet> facets;
    for (int i = 0; i < 3; ++i) {
        RegionFacet lo;
        lo.coef[i] = -1;
        lo.rhs = 0;
        lo.label = "theta" + std::to_string(i) + " >= 0";
        facets.push_back(lo);

        RegionFacet hi;
        hi.coef[i] = 1;
        hi.rhs = 2 * kPi;
        hi.label = "theta" + std::to_string(i) + " <= 2*pi";
        facets.push_back(hi);
    }
    // phi_i = (pi + theta_i - theta_j - theta_k) / 2.
    for (int i = 0; i < 3; ++i) {
        RegionFacet up;
        up.strict = true;
        up.rhs = kPi;
        up.label = "phi" + std::to_string(i) + " < pi";
        RegionFacet dn;
        dn.strict = true;
        dn.rhs = 3 * kPi;
        dn.label = "phi" + std::to_string(i) + " > -pi";
        for (int j = 0; j < 3; ++j) {
            up.coef[j] = j == i ? 1 : -1;
            dn.coef[j] = j == i ? -1 : 1;
        }
        facets.push_back(up);
        facets.push_back(dn);
    }
    return facets;
}

bool facet_satisfied(const RegionFacet& f, const AngleTriple& t) {
    double lhs = 0;
    for (int i = 0; i < 3; ++i) lhs += f.coef[i] * t.theta[i];
    return f.strict ? lhs < f.rhs - epsilon() : lhs <= f.rhs + epsilon();
}

}  // namespace lombardi
