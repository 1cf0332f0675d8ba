#include "lombardi/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>

namespace lombardi {

namespace {
constexpr double kPi = std::numbers::pi;

double det3(double a00, double a01, double a02, double a10, double a11, double a12, double a20,
            double a21, double a22) {
    return a00 * (a11 * a22 - a12 * a21) - a01 * (a10 * a22 - a12 * a20) +
           a02 * (a10 * a21 - a11 * a20);
}
}  // namespace

double epsilon() {
    static const double eps = [] {
        if (const char* env = std::getenv("ARC_EPSILON")) {
            double v = std::atof(env);
            if (v > 0) return v;
        }
        return 1e-9;
    }();
    return eps;
}

double mod_two_pi(double x) {
    double r = std::fmod(x, 2 * kPi);
    if (r < 0) r += 2 * kPi;
    return r;
}

double Vec::norm() const {
    return std::hypot(x, y);
}

Vec Vec::normalized() const {
    double n = norm();
    if (n == 0) return {0, 0};
    return {x / n, y / n};
}

Vec Vec::rotated(double angle) const {
    double ca = std::cos(angle), sa = std::sin(angle);
    return {x * ca - y * sa, x * sa + y * ca};
}

double Vec::angle() const {
    return std::atan2(y, x);
}

Vec operator+(Vec a, Vec b) {
    return {a.x + b.x, a.y + b.y};
}
Vec operator-(Vec a, Vec b) {
    return {a.x - b.x, a.y - b.y};
}
Vec operator*(double s, Vec v) {
    return {s * v.x, s * v.y};
}
double dot(Vec a, Vec b) {
    return a.x * b.x + a.y * b.y;
}
double cross(Vec a, Vec b) {
    return a.x * b.y - a.y * b.x;
}

Point Point::at_infinity() {
    Point p;
    p.infinite = true;
    return p;
}

Point operator+(Point p, Vec v) {
    return {p.x + v.x, p.y + v.y, p.infinite};
}

Vec operator-(Point p, Point q) {
    return {p.x - q.x, p.y - q.y};
}

double distance(Point p, Point q) {
    if (p.infinite || q.infinite) return p.infinite == q.infinite ? 0.0 : INFINITY;
    return std::hypot(p.x - q.x, p.y - q.y);
}

bool near(Point p, Point q, double tol) {
    if (p.infinite || q.infinite) return p.infinite && q.infinite;
    return distance(p, q) <= tol;
}

std::complex<double> to_complex(Point p) {
    return {p.x, p.y};
}

Point from_complex(std::complex<double> z) {
    return {z.real(), z.imag()};
}

void Box::expand(Point p) {
    if (p.infinite) return;
    if (empty) {
        minx = maxx = p.x;
        miny = maxy = p.y;
        empty = false;
        return;
    }
    minx = std::min(minx, p.x);
    maxx = std::max(maxx, p.x);
    miny = std::min(miny, p.y);
    maxy = std::max(maxy, p.y);
}

void Box::merge(const Box& other) {
    if (other.empty) return;
    expand({other.minx, other.miny});
    expand({other.maxx, other.maxy});
}

double Box::diameter() const {
    if (empty) return 0;
    return std::hypot(maxx - minx, maxy - miny);
}

Point Box::center() const {
    return {(minx + maxx) / 2, (miny + maxy) / 2};
}

GCircle GCircle::normalized() const {
    double m = std::max({std::fabs(a), std::fabs(b), std::fabs(c), std::fabs(d)});
    if (m == 0) return *this;
    return {a / m, b / m, c / m, d / m};
}

GCircle GCircle::circle(Point center, double radius) {
    // (x-cx)^2 + (y-cy)^2 = r^2
    GCircle g{1.0, -2 * center.x, -2 * center.y, center.x * center.x + center.y * center.y -
                                                     radius * radius};
    return g.normalized();
}

GCircle GCircle::line_through(Point p, Vec dir) {
    Vec n = dir.perp_ccw().normalized();
    GCircle g{0.0, n.x, n.y, -(n.x * p.x + n.y * p.y)};
    return g.normalized();
}

bool GCircle::is_line() const {
    double m = std::max({std::fabs(b), std::fabs(c), std::fabs(d), 1e-300});
    return std::fabs(a) < 1e-12 * m;
}

Point GCircle::center() const {
    return {-b / (2 * a), -c / (2 * a)};
}

double GCircle::radius() const {
    double disc = b * b + c * c - 4 * a * d;
    return std::sqrt(std::max(0.0, disc)) / (2 * std::fabs(a));
}

double GCircle::eval(Point p) const {
    return a * (p.x * p.x + p.y * p.y) + b * p.x + c * p.y + d;
}

double GCircle::dist(Point p) const {
    if (is_line()) {
        double n = std::hypot(b, c);
        return std::fabs(b * p.x + c * p.y + d) / n;
    }
    return std::fabs(distance(p, center()) - radius());
}

int GCircle::side(Point p, double tol) const {
    if (is_line()) {
        double n = std::hypot(b, c);
        double s = (b * p.x + c * p.y + d) / n;
        if (std::fabs(s) <= tol) return 0;
        return s > 0 ? 1 : -1;
    }
    double s = distance(p, center()) - radius();
    if (std::fabs(s) <= tol) return 0;
    return s > 0 ? 1 : -1;
}

bool same_carrier(const GCircle& g, const GCircle& h, double tol) {
    GCircle gn = g.normalized(), hn = h.normalized();
    double dplus = std::fabs(gn.a + hn.a) + std::fabs(gn.b + hn.b) + std::fabs(gn.c + hn.c) +
                   std::fabs(gn.d + hn.d);
    double dminus = std::fabs(gn.a - hn.a) + std::fabs(gn.b - hn.b) + std::fabs(gn.c - hn.c) +
                    std::fabs(gn.d - hn.d);
    return std::min(dplus, dminus) <= tol;
}

GCircle circumcircle(Point p0, Point p1, Point p2) {
    double scale = std::max({1.0, distance(p0, p1), distance(p1, p2), distance(p0, p2)});
    double tol = epsilon() * scale;
    if (near(p0, p1, tol) || near(p1, p2, tol) || near(p0, p2, tol))
        throw coincident_points("circumcircle: coincident input points");

    double s0 = p0.x * p0.x + p0.y * p0.y;
    double s1 = p1.x * p1.x + p1.y * p1.y;
    double s2 = p2.x * p2.x + p2.y * p2.y;

    GCircle g;
    g.a = det3(p0.x, p0.y, 1, p1.x, p1.y, 1, p2.x, p2.y, 1);
    g.b = -det3(s0, p0.y, 1, s1, p1.y, 1, s2, p2.y, 1);
    g.c = det3(s0, p0.x, 1, s1, p1.x, 1, s2, p2.x, 1);
    g.d = -det3(s0, p0.x, p0.y, s1, p1.x, p1.y, s2, p2.x, p2.y);

    // Collinear points: a vanishes and (b,c,d) is the line through them.
    // Snap small a to an exact line to keep downstream branches stable.
    double m = std::max({std::fabs(g.b), std::fabs(g.c), std::fabs(g.d)});
    if (m > 0 && std::fabs(g.a) * scale < epsilon() * m) g.a = 0.0;
    return g.normalized();
}

Arc::Arc(Point start, Point witness, Point end) : start_(start), witness_(witness), end_(end) {
    if (start.infinite || witness.infinite || end.infinite)
        throw coincident_points("arc endpoints must be finite");
    carrier_ = circumcircle(start, witness, end);
    if (carrier_.is_line()) {
        segment_ = true;
        // Witness must sit strictly between start and end on the line.
        Vec d = end - start;
        double t = dot(witness - start, d) / dot(d, d);
        double tol = epsilon() / std::max(1e-12, d.norm());
        if (t < -tol || t > 1 + tol)
            throw coincident_points("segment witness outside the span");
        return;
    }
    Point c = carrier_.center();
    center_ = {c.x, c.y};
    radius_ = carrier_.radius();
    double a0 = (start - c).angle();
    double a1 = (end - c).angle();
    double aw = (witness - c).angle();
    double de = mod_two_pi(a1 - a0);
    double dw = mod_two_pi(aw - a0);
    angle0_ = a0;
    sweep_ = (dw <= de) ? de : de - 2 * kPi;
}

Arc Arc::segment(Point a, Point b) {
    Point mid{(a.x + b.x) / 2, (a.y + b.y) / 2};
    return Arc(a, mid, b);
}

Arc Arc::from_tangent(Point p, Point q, Vec tangent_at_p) {
    Vec u = tangent_at_p.normalized();
    Vec pq = q - p;
    double L = pq.norm();
    if (L == 0) throw coincident_points("arc endpoints coincide");
    Vec n = u.perp_ccw();
    double denom = dot(n, pq);
    if (std::fabs(denom) < 1e-13 * L * L) {
        if (dot(u, pq) < 0)
            throw points_not_on_circle("tangent points away from the target endpoint");
        return segment(p, q);
    }
    double t = dot(pq, pq) / (2 * denom);
    Point c = p + t * n;
    double a0 = (p - c).angle();
    double a1 = (q - c).angle();
    bool ccw = t > 0;  // cross(p - c, u) = t
    double sw = ccw ? mod_two_pi(a1 - a0) : mod_two_pi(a0 - a1);
    double mid = ccw ? a0 + sw / 2 : a0 - sw / 2;
    double r = std::fabs(t);
    Point w{c.x + r * std::cos(mid), c.y + r * std::sin(mid)};
    return Arc(p, w, q);
}

Point Arc::center() const {
    return {center_.x, center_.y};
}

double Arc::length() const {
    if (segment_) return distance(start_, end_);
    return radius_ * std::fabs(sweep_);
}

Point Arc::point_at(double t) const {
    if (segment_) {
        return {start_.x + t * (end_.x - start_.x), start_.y + t * (end_.y - start_.y)};
    }
    double a = angle0_ + t * sweep_;
    return {center_.x + radius_ * std::cos(a), center_.y + radius_ * std::sin(a)};
}

Vec Arc::tangent_at(ArcEnd e) const {
    if (segment_) {
        Vec d = (end_ - start_).normalized();
        return e == ArcEnd::Start ? d : Vec{-d.x, -d.y};
    }
    Point p = e == ArcEnd::Start ? start_ : end_;
    Vec r = (p - center()).normalized();
    bool ccw = sweep_ > 0;
    if (e == ArcEnd::Start) return ccw ? r.perp_ccw() : r.perp_cw();
    return ccw ? r.perp_cw() : r.perp_ccw();
}

double Arc::curvature_at(ArcEnd e) const {
    if (segment_) return 0.0;
    Point p = e == ArcEnd::Start ? start_ : end_;
    Vec t = tangent_at(e);
    Vec toc = center() - p;
    return cross(t, toc) > 0 ? 1.0 / radius_ : -1.0 / radius_;
}

double Arc::param_of(Point p) const {
    if (segment_) {
        Vec d = end_ - start_;
        return dot(p - start_, d) / dot(d, d);
    }
    double a = (p - center()).angle();
    if (sweep_ > 0) return mod_two_pi(a - angle0_) / sweep_;
    return -mod_two_pi(angle0_ - a) / sweep_;
}

double Arc::distance_to(Point p) const {
    double t = param_of(p);
    if (!segment_) {
        // Wrap the complementary span to whichever end is closer.
        double full = 2 * kPi / std::fabs(sweep_);
        if (t > (1 + full) / 2) t -= full;
    }
    if (t >= 0 && t <= 1) {
        if (segment_) {
            Point foot = point_at(t);
            return distance(p, foot);
        }
        return carrier_.dist(p);
    }
    return std::min(distance(p, start_), distance(p, end_));
}

bool Arc::contains(Point p, double tol) const {
    return distance_to(p) <= tol;
}

Arc Arc::reversed() const {
    return Arc(end_, witness_, start_);
}

Box Arc::bbox() const {
    Box b;
    b.expand(start_);
    b.expand(end_);
    b.expand(witness_);
    if (!segment_) {
        for (int k = 0; k < 4; ++k) {
            double a = k * kPi / 2;
            Point ext{center_.x + radius_ * std::cos(a), center_.y + radius_ * std::sin(a)};
            double t = param_of(ext);
            if (t > 0 && t < 1) b.expand(ext);
        }
    }
    return b;
}

Vec tangent_direction(const Arc& arc, ArcEnd at) {
    return arc.tangent_at(at);
}

Point invert(const GCircle& mirror, Point p) {
    if (mirror.is_line()) {
        if (p.infinite) return p;
        double n2 = mirror.b * mirror.b + mirror.c * mirror.c;
        double s = (mirror.b * p.x + mirror.c * p.y + mirror.d) / n2;
        return {p.x - 2 * s * mirror.b, p.y - 2 * s * mirror.c};
    }
    Point c = mirror.center();
    double r = mirror.radius();
    if (p.infinite) return c;
    Vec v = p - c;
    double d2 = dot(v, v);
    if (d2 == 0) return Point::at_infinity();
    double k = r * r / d2;
    return {c.x + k * v.x, c.y + k * v.y};
}

MoebiusMap MoebiusMap::identity() {
    return MoebiusMap{};
}

MoebiusMap MoebiusMap::similarity(std::complex<double> mul, std::complex<double> add) {
    MoebiusMap m;
    m.a = mul;
    m.b = add;
    m.c = 0;
    m.d = 1;
    return m;
}

MoebiusMap MoebiusMap::rotation(double ang) {
    return similarity(std::polar(1.0, ang), 0.0);
}

MoebiusMap MoebiusMap::translation(Vec t) {
    return similarity(1.0, {t.x, t.y});
}

MoebiusMap MoebiusMap::scaling(double s) {
    return similarity(s, 0.0);
}

MoebiusMap MoebiusMap::inversion_in(const GCircle& mirror) {
    MoebiusMap m;
    m.conjugate_first = true;
    if (mirror.is_line()) {
        // Reflection across the line: z -> p0 + u^2 * conj(z - p0).
        double n = std::hypot(mirror.b, mirror.c);
        Vec nrm{mirror.b / n, mirror.c / n};
        Vec dir = nrm.perp_cw();
        std::complex<double> u{dir.x, dir.y};
        // Foot of the origin on the line.
        Point p0{-mirror.d / n * nrm.x, -mirror.d / n * nrm.y};
        std::complex<double> z0 = to_complex(p0);
        m.a = u * u;
        m.b = z0 - u * u * std::conj(z0);
        m.c = 0;
        m.d = 1;
        return m;
    }
    std::complex<double> c = to_complex(mirror.center());
    double r = mirror.radius();
    m.a = c;
    m.b = r * r - std::norm(c);
    m.c = 1;
    m.d = -std::conj(c);
    return m;
}

MoebiusMap MoebiusMap::cusp_opener(Point center, double rho) {
    std::complex<double> c = to_complex(center);
    MoebiusMap m;
    m.a = std::conj(c);
    m.b = rho * rho - std::norm(c);
    m.c = 1;
    m.d = -c;
    return m;
}

MoebiusMap MoebiusMap::origin_swap(double R) {
    MoebiusMap m;
    m.a = 0;
    m.b = R * R;
    m.c = 1;
    m.d = 0;
    return m;
}

Point MoebiusMap::apply(Point p) const {
    std::complex<double> alpha = a, beta = b, gamma = c, delta = d;
    if (p.infinite) {
        if (std::abs(gamma) == 0) return Point::at_infinity();
        return from_complex(alpha / gamma);
    }
    std::complex<double> z = to_complex(p);
    if (conjugate_first) z = std::conj(z);
    std::complex<double> den = gamma * z + delta;
    std::complex<double> num = alpha * z + beta;
    double den_scale = std::abs(gamma) * std::abs(z) + std::abs(delta);
    if (std::abs(den) <= 1e-14 * std::max(1.0, den_scale)) return Point::at_infinity();
    return from_complex(num / den);
}

MoebiusMap MoebiusMap::then(const MoebiusMap& next) const {
    // next(this(z)) = fN(conj^n(fT(conj^t z)))
    std::complex<double> ta = a, tb = b, tc = c, td = d;
    if (next.conjugate_first) {
        ta = std::conj(ta);
        tb = std::conj(tb);
        tc = std::conj(tc);
        td = std::conj(td);
    }
    MoebiusMap r;
    r.a = next.a * ta + next.b * tc;
    r.b = next.a * tb + next.b * td;
    r.c = next.c * ta + next.d * tc;
    r.d = next.c * tb + next.d * td;
    r.conjugate_first = conjugate_first != next.conjugate_first;
    return r;
}

Point apply_map(const MoebiusMap& map, Point p) {
    return map.apply(p);
}

Arc apply_map(const MoebiusMap& map, const Arc& arc) {
    Point s = map.apply(arc.start());
    Point w = map.apply(arc.witness());
    Point e = map.apply(arc.end());
    if (s.infinite || w.infinite || e.infinite)
        throw maps_through_infinity("arc point maps to infinity");
    return Arc(s, w, e);
}

namespace {

// Intersection points of the two carriers, with a tangency flag.
struct CarrierHits {
    Point p[2];
    int n = 0;
    bool tangential = false;
};

CarrierHits line_line(const GCircle& g, const GCircle& h) {
    CarrierHits out;
    double det = g.b * h.c - g.c * h.b;
    double n = std::hypot(g.b, g.c) * std::hypot(h.b, h.c);
    if (std::fabs(det) <= 1e-14 * n) return out;  // parallel
    out.n = 1;
    out.p[0] = {(-g.d * h.c + h.d * g.c) / det, (-g.b * h.d + h.b * g.d) / det};
    return out;
}

CarrierHits circle_line(const GCircle& circ, const GCircle& line, double tol) {
    CarrierHits out;
    Point c = circ.center();
    double r = circ.radius();
    double n = std::hypot(line.b, line.c);
    double s = (line.b * c.x + line.c * c.y + line.d) / n;  // signed distance center->line
    Point foot{c.x - s * line.b / n, c.y - s * line.c / n};
    double disc = r * r - s * s;
    if (std::fabs(std::fabs(s) - r) <= tol) {
        out.n = 1;
        out.tangential = true;
        out.p[0] = foot;
        return out;
    }
    if (disc < 0) return out;
    Vec dir{-line.c / n, line.b / n};
    double h = std::sqrt(disc);
    out.n = 2;
    out.p[0] = foot + h * dir;
    out.p[1] = foot + (-h) * dir;
    return out;
}

CarrierHits circle_circle(const GCircle& g, const GCircle& h, double tol) {
    // Radical line: eliminate the quadratic term.
    GCircle rad{0.0, h.a * g.b - g.a * h.b, h.a * g.c - g.a * h.c, h.a * g.d - g.a * h.d};
    double m = std::max({std::fabs(rad.b), std::fabs(rad.c)});
    if (m == 0) return {};  // concentric
    CarrierHits out = circle_line(g, rad.normalized(), tol);
    if (out.n == 2) {
        // Tangency also shows as two nearly equal points.
        if (distance(out.p[0], out.p[1]) <= 2 * tol) {
            out.n = 1;
            out.tangential = true;
            out.p[0] = {(out.p[0].x + out.p[1].x) / 2, (out.p[0].y + out.p[1].y) / 2};
        }
    }
    return out;
}

}  // namespace

ArcIntersections arc_intersections(const Arc& a, const Arc& b) {
    ArcIntersections out;
    Box bb = a.bbox();
    bb.merge(b.bbox());
    double tol = epsilon() * std::max(1.0, bb.diameter());

    if (same_carrier(a.carrier(), b.carrier(), tol)) {
        // Overlap when any endpoint of one arc lies strictly inside the other.
        auto strictly_inside = [&](const Arc& host, Point p) {
            if (!host.contains(p, tol)) return false;
            return distance(p, host.start()) > tol && distance(p, host.end()) > tol;
        };
        if (strictly_inside(a, b.start()) || strictly_inside(a, b.end()) ||
            strictly_inside(b, a.start()) || strictly_inside(b, a.end()) ||
            (a.contains(b.witness(), tol) && b.contains(a.witness(), tol))) {
            out.overlapping_carriers = true;
            return out;
        }
        // Touching only at shared endpoints.
        Point ea[2] = {a.start(), a.end()};
        Point eb[2] = {b.start(), b.end()};
        for (Point pa : ea) {
            for (Point pb : eb) {
                if (near(pa, pb, tol)) {
                    bool dup = false;
                    for (const auto& q : out.points) dup = dup || near(q.p, pa, tol);
                    if (!dup)
                        out.points.push_back({pa, true, true, true});
                }
            }
        }
        return out;
    }

    CarrierHits hits;
    bool la = a.carrier().is_line(), lb = b.carrier().is_line();
    if (la && lb)
        hits = line_line(a.carrier(), b.carrier());
    else if (la)
        hits = circle_line(b.carrier(), a.carrier(), tol);
    else if (lb)
        hits = circle_line(a.carrier(), b.carrier(), tol);
    else
        hits = circle_circle(a.carrier(), b.carrier(), tol);

    for (int i = 0; i < hits.n; ++i) {
        Point p = hits.p[i];
        if (!a.contains(p, tol) || !b.contains(p, tol)) continue;
        ArcIntersection rec;
        rec.p = p;
        rec.tangential = hits.tangential;
        rec.endpoint_of_a = near(p, a.start(), tol) || near(p, a.end(), tol);
        rec.endpoint_of_b = near(p, b.start(), tol) || near(p, b.end(), tol);
        out.points.push_back(rec);
    }
    return out;
}

Arc arc_to_circle_unchecked(Point p, Point q, const GCircle& ref, double phi,
                            bool clockwise_reference) {
    Vec t;
    if (ref.is_line()) {
        t = (q - p).normalized();
    } else {
        Vec radial = (p - ref.center()).normalized();
        t = clockwise_reference ? radial.perp_cw() : radial.perp_ccw();
    }
    double rot = clockwise_reference ? -phi : phi;
    return Arc::from_tangent(p, q, t.rotated(rot));
}

Arc arc_at_angle_to_circle(Point p, Point q, const GCircle& ref, double phi,
                           bool clockwise_reference) {
    double scale = std::max(1.0, distance(p, q));
    double tol = 1e3 * epsilon() * scale;
    if (ref.dist(p) > tol || ref.dist(q) > tol)
        throw points_not_on_circle("arc_at_angle_to_circle: endpoint not on the reference circle");
    if (std::fabs(phi) > std::numbers::pi + epsilon())
        throw angle_out_of_range("arc_at_angle_to_circle: |phi| > pi");
    return arc_to_circle_unchecked(p, q, ref, phi, clockwise_reference);
}

}  // namespace lombardi
