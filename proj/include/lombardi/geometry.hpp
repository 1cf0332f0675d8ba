#pragma once

#include <complex>
#include <vector>

#include "lombardi/errors.hpp"

namespace lombardi {

/// Global geometric tolerance on O(1)-normalized coordinates.
/// Overridable through the ARC_EPSILON environment variable (testing only).
double epsilon();

double mod_two_pi(double x);

struct Vec {
    double x = 0.0;
    double y = 0.0;

    double norm() const;
    Vec normalized() const;
    Vec rotated(double angle) const;
    Vec perp_ccw() const { return {-y, x}; }
    Vec perp_cw() const { return {y, -x}; }
    double angle() const;
};

Vec operator+(Vec a, Vec b);
Vec operator-(Vec a, Vec b);
Vec operator*(double s, Vec v);
double dot(Vec a, Vec b);
double cross(Vec a, Vec b);

struct Point {
    double x = 0.0;
    double y = 0.0;
    bool infinite = false;

    static Point at_infinity();
};

Point operator+(Point p, Vec v);
Vec operator-(Point p, Point q);
double distance(Point p, Point q);
bool near(Point p, Point q, double tol);
std::complex<double> to_complex(Point p);
Point from_complex(std::complex<double> z);

struct Box {
    double minx = 0, miny = 0, maxx = 0, maxy = 0;
    bool empty = true;

    void expand(Point p);
    void merge(const Box& other);
    double diameter() const;
    Point center() const;
};

/// Generalized circle a(x^2+y^2) + bx + cy + d = 0, normalized so max|coef| = 1.
/// a == 0 encodes a line (circle of infinite radius).
struct GCircle {
    double a = 0, b = 0, c = 0, d = 0;

    static GCircle circle(Point center, double radius);
    static GCircle line_through(Point p, Vec dir);

    bool is_line() const;
    Point center() const;
    double radius() const;
    double eval(Point p) const;
    /// Metric distance from p to the locus.
    double dist(Point p) const;
    /// -1 inside / 0 on / +1 outside for circles; signed side for lines.
    int side(Point p, double tol) const;
    GCircle normalized() const;
};

bool same_carrier(const GCircle& g, const GCircle& h, double tol);

/// Circle (or line, for collinear inputs) through three pairwise distinct points.
GCircle circumcircle(Point p0, Point p1, Point p2);

enum class ArcEnd { Start, End };

/// Directed circular arc given by start, interior witness, and end point.
/// Collinear triples degenerate to a straight segment.
class Arc {
  public:
    Arc(Point start, Point witness, Point end);
    static Arc segment(Point a, Point b);
    /// Unique arc from p to q departing p along unit direction tangent_at_p.
    static Arc from_tangent(Point p, Point q, Vec tangent_at_p);

    Point start() const { return start_; }
    Point witness() const { return witness_; }
    Point end() const { return end_; }
    const GCircle& carrier() const { return carrier_; }
    bool is_segment() const { return segment_; }
    Point center() const;
    double radius() const { return radius_; }
    /// Signed swept angle, positive counterclockwise. Zero for segments.
    double sweep() const { return sweep_; }
    double length() const;

    Point point_at(double t) const;  // arc-length fraction in [0,1]
    Vec tangent_at(ArcEnd e) const;  // unit tangent pointing into the arc
    /// Signed curvature of the arc leaving endpoint e along tangent_at(e);
    /// positive when bending left (counterclockwise), zero for segments.
    double curvature_at(ArcEnd e) const;

    bool contains(Point p, double tol) const;
    double distance_to(Point p) const;
    /// Arc-length fraction of the closest carrier point (unclamped for circles).
    double param_of(Point p) const;
    Arc reversed() const;
    Box bbox() const;

  private:
    Arc() = default;
    Point start_, witness_, end_;
    bool segment_ = false;
    GCircle carrier_;
    Vec center_;
    double radius_ = 0;
    double angle0_ = 0;
    double sweep_ = 0;
};

Vec tangent_direction(const Arc& arc, ArcEnd at);

/// Inversion of the extended plane in a circle (reflection for line mirrors).
Point invert(const GCircle& mirror, Point p);

/// Linear-fractional map z -> (az+b)/(cz+d), optionally conjugating first
/// (conjugate_first = true encodes anti-Moebius maps such as one inversion).
struct MoebiusMap {
    std::complex<double> a{1, 0}, b{0, 0}, c{0, 0}, d{1, 0};
    bool conjugate_first = false;

    static MoebiusMap identity();
    static MoebiusMap similarity(std::complex<double> mul, std::complex<double> add);
    static MoebiusMap rotation(double ang);
    static MoebiusMap translation(Vec t);
    static MoebiusMap scaling(double s);
    static MoebiusMap inversion_in(const GCircle& mirror);
    /// Orientation-preserving map sending center -> infinity: z -> conj(c) + rho^2/(z-c).
    static MoebiusMap cusp_opener(Point center, double rho);
    /// Orientation-preserving map exchanging 0 and infinity: z -> R^2 / z.
    static MoebiusMap origin_swap(double R);

    Point apply(Point p) const;
    /// Composition: (next . this), i.e. this runs first.
    MoebiusMap then(const MoebiusMap& next) const;
};

Arc apply_map(const MoebiusMap& map, const Arc& arc);
Point apply_map(const MoebiusMap& map, Point p);

struct ArcIntersection {
    Point p;
    bool tangential = false;
    bool endpoint_of_a = false;
    bool endpoint_of_b = false;
};

struct ArcIntersections {
    std::vector<ArcIntersection> points;
    /// Arcs share a carrier and overlap in more than isolated points.
    bool overlapping_carriers = false;
};

ArcIntersections arc_intersections(const Arc& a, const Arc& b);

/// Arc from p to q making signed angle phi with ref at both endpoints.
/// With the clockwise reference convention (interior of ref on the right),
/// phi > 0 bulges into the disk of ref, phi < 0 outside, phi = 0 lies on ref.
Arc arc_at_angle_to_circle(Point p, Point q, const GCircle& ref, double phi,
                           bool clockwise_reference = true);

/// Same construction without the |phi| <= pi domain check; used to build the
/// crossing configurations that infeasible angle triples produce.
Arc arc_to_circle_unchecked(Point p, Point q, const GCircle& ref, double phi,
                            bool clockwise_reference = true);

}  // namespace lombardi
