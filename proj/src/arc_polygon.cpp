#include "lombardi/arc_polygon.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numbers>

#include "lombardi/arc_triangle.hpp"

namespace lombardi {

namespace {
constexpr double kPi = std::numbers::pi;

double polygon_tol(const ArcPolygon& poly) {
    return epsilon() * std::max(1.0, poly.bbox().diameter());
}
}  // namespace

ArcPolygon::ArcPolygon(std::vector<Point> vertices, std::vector<Arc> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    std::size_t n = vertices_.size();
    if (n < 2 || edges_.size() != n)
        throw degenerate_vertices("arc-polygon needs n >= 2 vertices and matching edges");
    Box bb;
    for (const Point& p : vertices_) bb.expand(p);
    double tol = 1e3 * epsilon() * std::max(1.0, bb.diameter());
    for (std::size_t i = 0; i < n; ++i) {
        if (!near(edges_[i].start(), vertices_[i], tol) ||
            !near(edges_[i].end(), vertices_[(i + 1) % n], tol))
            throw degenerate_vertices("edge endpoints do not match the vertex cycle");
    }
}

Box ArcPolygon::bbox() const {
    Box bb;
    for (const Arc& e : edges_) bb.merge(e.bbox());
    return bb;
}

ArcPolygon ArcPolygon::rotated_indices(std::size_t shift) const {
    std::size_t n = size();
    std::vector<Point> vs(n);
    std::vector<Arc> es;
    es.reserve(n);
    for (std::size_t i = 0; i < n; ++i) vs[i] = vertices_[(i + shift) % n];
    for (std::size_t i = 0; i < n; ++i) es.push_back(edges_[(i + shift) % n]);
    return ArcPolygon(std::move(vs), std::move(es));
}

ArcPolygon ArcPolygon::normalized_to_unit_square() const {
    Box bb = bbox();
    double span = std::max(bb.maxx - bb.minx, bb.maxy - bb.miny);
    if (span <= 0) span = 1;
    double s = 1.0 / span;
    auto tf = [&](Point p) { return Point{(p.x - bb.minx) * s, (p.y - bb.miny) * s}; };
    std::vector<Point> vs;
    vs.reserve(size());
    for (const Point& p : vertices_) vs.push_back(tf(p));
    std::vector<Arc> es;
    es.reserve(size());
    for (const Arc& e : edges_) es.emplace_back(tf(e.start()), tf(e.witness()), tf(e.end()));
    return ArcPolygon(std::move(vs), std::move(es));
}

ArcPolygon ArcPolygon::transformed(const MoebiusMap& map) const {
    std::vector<Point> vs;
    vs.reserve(size());
    for (const Point& p : vertices_) {
        Point q = map.apply(p);
        if (q.infinite) throw maps_through_infinity("polygon vertex maps to infinity");
        vs.push_back(q);
    }
    std::vector<Arc> es;
    es.reserve(size());
    for (const Arc& e : edges_) es.push_back(apply_map(map, e));
    return ArcPolygon(std::move(vs), std::move(es));
}

double measure_interior_angle(const ArcPolygon& poly, std::size_t i) {
    std::size_t n = poly.size();
    if (i >= n) throw index_out_of_range("vertex index out of range");
    const Arc& in = poly.edge((i + n - 1) % n);
    const Arc& out = poly.edge(i);
    Vec A = in.tangent_at(ArcEnd::End);
    Vec B = out.tangent_at(ArcEnd::Start);
    double raw = mod_two_pi(B.angle() - A.angle());

    const double tie = 1e-7;
    if (raw > tie && raw < 2 * kPi - tie) return raw;

    // Tangent directions coincide: a cusp measures 0, a full wrap 2*pi.
    // The interior is swept counterclockwise from A to B, so it is the thin
    // sliver (angle 0) exactly when the outgoing arc bends further left.
    double ka = in.curvature_at(ArcEnd::End);
    double kb = out.curvature_at(ArcEnd::Start);
    double ceps = epsilon() * (std::fabs(ka) + std::fabs(kb) + 1);
    if (kb > ka + ceps) return 0.0;
    if (kb < ka - ceps) return 2 * kPi;
    return 0.0;  // identical carriers: degenerate bigon convention
}

std::vector<double> measure_all_angles(const ArcPolygon& poly) {
    std::vector<double> out(poly.size());
    for (std::size_t i = 0; i < poly.size(); ++i) out[i] = measure_interior_angle(poly, i);
    return out;
}

SimplicityReport is_simple(const ArcPolygon& poly) {
    std::size_t n = poly.size();
    double tol = 1e2 * polygon_tol(poly);
    SimplicityReport rep;

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            bool consecutive = (j == i + 1) || (i == 0 && j == n - 1);
            std::vector<Point> shared;
            if (n == 2) {
                shared = {poly.vertex(0), poly.vertex(1)};
            } else if (consecutive) {
                shared = {poly.vertex(j == i + 1 ? j : 0)};
            }

            ArcIntersections hits = arc_intersections(poly.edge(i), poly.edge(j));
            if (hits.overlapping_carriers) {
                rep.simple = false;
                rep.witness = SimplicityWitness{i, j, poly.edge(j).witness(),
                                                CrossingKind::ImproperOverlap};
                return rep;
            }
            for (const ArcIntersection& hit : hits.points) {
                bool allowed = false;
                for (const Point& s : shared) allowed = allowed || near(hit.p, s, tol);
                if (allowed) continue;
                rep.simple = false;
                CrossingKind kind = (hit.endpoint_of_a || hit.endpoint_of_b)
                                        ? CrossingKind::VertexOnEdge
                                        : CrossingKind::TransversalCrossing;
                rep.witness = SimplicityWitness{i, j, hit.p, kind};
                return rep;
            }
        }
    }
    return rep;
}

ArcPolygon base_quadrilateral(QuadVariant variant) {
    auto upper = [](double x0, double x1) {
        double c = (x0 + x1) / 2, r = std::fabs(x1 - x0) / 2;
        return Arc({x0, 0}, {c, r}, {x1, 0});
    };
    auto lower = [](double x0, double x1) {
        double c = (x0 + x1) / 2, r = std::fabs(x1 - x0) / 2;
        return Arc({x0, 0}, {c, -r}, {x1, 0});
    };

    if (variant == QuadVariant::AdjacentZeros) {
        // Clockwise hull: two bumps poking into a dome plus a dip; the two
        // bump-to-bump and bump-to-dome tangencies are the adjacent cusps.
        std::vector<Point> vs = {{3, 0}, {2, 0}, {1, 0}, {0, 0}};
        std::vector<Arc> es = {upper(3, 2), upper(2, 1), lower(1, 0), upper(0, 3)};
        return ArcPolygon(std::move(vs), std::move(es));
    }
    // Alternating: an S-shaped chain of two large and two small semicircles.
    std::vector<Point> vs = {{0, 0}, {2, 0}, {3, 0}, {1, 0}};
    std::vector<Arc> es = {upper(0, 2), lower(2, 3), lower(3, 1), upper(1, 0)};
    return ArcPolygon(std::move(vs), std::move(es));
}

ArcPolygon insert_flat_vertex(const ArcPolygon& poly, std::size_t e, double s) {
    std::size_t n = poly.size();
    if (e >= n) throw index_out_of_range("edge index out of range");
    if (!(s > 0 && s < 1)) throw parameter_out_of_range("split fraction must be in (0,1)");
    const Arc& a = poly.edge(e);
    Point mid = a.point_at(s);
    Arc first(a.start(), a.point_at(s / 2), mid);
    Arc second(mid, a.point_at((1 + s) / 2), a.end());

    std::vector<Point> vs;
    std::vector<Arc> es;
    vs.reserve(n + 1);
    es.reserve(n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        vs.push_back(poly.vertex(i));
        if (i == e) {
            es.push_back(first);
            vs.push_back(mid);
            es.push_back(second);
        } else {
            es.push_back(poly.edge(i));
        }
    }
    return ArcPolygon(std::move(vs), std::move(es));
}

ArcPolygon bigon(Point u, Point v, double interior_angle) {
    if (!(interior_angle > 0 && interior_angle < 2 * kPi))
        throw angle_out_of_range("bigon interior angle must lie in (0, 2*pi)");
    Vec chord = (v - u).normalized();
    // Both arcs lean half the interior angle away from the chord; traversal
    // u -> v -> u keeps the lens on the right.
    Arc first = Arc::from_tangent(u, v, chord.rotated(interior_angle / 2));
    Arc second = Arc::from_tangent(v, u, (-1.0 * chord).rotated(interior_angle / 2));
    return ArcPolygon({u, v}, {first, second});
}

namespace {

struct Ray {
    Point origin;
    Vec dir;  // unit, pointing to infinity
};

// A simple polygon cut open at a cusp and mapped so the cusp sits at
// infinity: the two incident edges become parallel rays bracketing the
// finite chain.
struct OpenedChain {
    std::vector<Point> verts;  // cusp+1 ... cusp-1 in traversal order
    std::vector<Arc> arcs;     // arcs between consecutive chain vertices
    Ray ray_in;                // image of the edge leaving the cusp
    Ray ray_out;               // image of the edge entering the cusp
};

OpenedChain open_at_cusp(const ArcPolygon& poly, std::size_t cusp) {
    std::size_t n = poly.size();
    Point c = poly.vertex(cusp);
    MoebiusMap h = MoebiusMap::cusp_opener(c, 1.0);

    OpenedChain chain;
    for (std::size_t k = 1; k < n; ++k) chain.verts.push_back(poly.vertex((cusp + k) % n));
    for (std::size_t k = 1; k + 1 < n; ++k)
        chain.arcs.push_back(poly.edge((cusp + k) % n));

    const Arc& leaving = poly.edge(cusp);               // cusp -> cusp+1
    const Arc& entering = poly.edge((cusp + n - 1) % n);  // cusp-1 -> cusp

    auto ray_from = [&](Point endpoint, Point wit) {
        Point pe = h.apply(endpoint);
        Point pw = h.apply(wit);
        if (pe.infinite || pw.infinite)
            throw not_a_cusp("cusp edge degenerates under inversion");
        return Ray{pe, (pw - pe).normalized()};
    };
    chain.ray_in = ray_from(leaving.end(), leaving.witness());
    chain.ray_out = ray_from(entering.start(), entering.witness());

    for (Point& p : chain.verts) p = h.apply(p);
    for (Arc& a : chain.arcs) a = apply_map(h, a);

    // Rescale so the finite part has unit diameter before strip alignment.
    Box bb;
    for (const Arc& a : chain.arcs) bb.merge(a.bbox());
    for (const Point& p : chain.verts) bb.expand(p);
    double dia = bb.diameter();
    if (dia > 0) {
        MoebiusMap sc = MoebiusMap::scaling(1.0 / dia);
        for (Point& p : chain.verts) p = sc.apply(p);
        for (Arc& a : chain.arcs) a = apply_map(sc, a);
        chain.ray_in.origin = sc.apply(chain.ray_in.origin);
        chain.ray_out.origin = sc.apply(chain.ray_out.origin);
    }
    return chain;
}

void apply_similarity(OpenedChain& chain, const MoebiusMap& m) {
    for (Point& p : chain.verts) p = m.apply(p);
    for (Arc& a : chain.arcs) a = apply_map(m, a);
    std::complex<double> mul = m.a / m.d;
    auto rot = [&](Vec v) {
        std::complex<double> z = mul * std::complex<double>{v.x, v.y};
        return Vec{z.real(), z.imag()}.normalized();
    };
    chain.ray_in = {m.apply(chain.ray_in.origin), rot(chain.ray_in.dir)};
    chain.ray_out = {m.apply(chain.ray_out.origin), rot(chain.ray_out.dir)};
}

// Rotate/scale/translate so the rays point along +x (flip = false) or -x
// (flip = true), with the strip between them normalized to y in [0, 1].
void align_to_strip(OpenedChain& chain, bool flip) {
    Vec d = (chain.ray_in.dir + chain.ray_out.dir).normalized();
    if (d.norm() == 0) throw not_a_cusp("cusp rays are not parallel");
    double ang = -d.angle() + (flip ? kPi : 0.0);
    apply_similarity(chain, MoebiusMap::rotation(ang));

    double y_in = chain.ray_in.origin.y;
    double y_out = chain.ray_out.origin.y;
    // Interior on the right puts the incoming ray on the lower line when the
    // rays point +x, and on the upper line when they point -x.
    double lo = flip ? y_out : y_in;
    double hi = flip ? y_in : y_out;
    if (!(hi > lo))
        throw not_simple_input("cusp strip is inverted; polygon orientation is wrong");
    double s = 1.0 / (hi - lo);
    apply_similarity(chain, MoebiusMap::similarity(s, std::complex<double>{0, -lo * s}));
}

Box chain_bbox(const OpenedChain& chain) {
    Box bb;
    for (const Arc& a : chain.arcs) bb.merge(a.bbox());
    for (const Point& p : chain.verts) bb.expand(p);
    bb.expand(chain.ray_in.origin);
    bb.expand(chain.ray_out.origin);
    return bb;
}

}  // namespace

ArcPolygon glue_at_cusps(const ArcPolygon& P, std::size_t cuspP, const ArcPolygon& Q,
                         std::size_t cuspQ) {
    if (cuspP >= P.size() || cuspQ >= Q.size())
        throw index_out_of_range("cusp index out of range");
    const double angle_tol = 1e-6;
    if (measure_interior_angle(P, cuspP) > angle_tol ||
        measure_interior_angle(Q, cuspQ) > angle_tol)
        throw not_a_cusp("glue vertex does not have interior angle zero");
    if (!is_simple(P).simple || !is_simple(Q).simple)
        throw not_simple_input("glue_at_cusps requires simple inputs");

    OpenedChain cp = open_at_cusp(P, cuspP);
    align_to_strip(cp, /*flip=*/false);
    Box pb = chain_bbox(cp);

    double margin_scale = 4.0;
    for (int attempt = 0; attempt < 8; ++attempt) {
        OpenedChain cq = open_at_cusp(Q, cuspQ);
        align_to_strip(cq, /*flip=*/true);
        Box qb = chain_bbox(cq);

        double margin = margin_scale * std::max(pb.diameter(), qb.diameter()) / 2;
        double dx = pb.maxx + margin - qb.minx;
        apply_similarity(cq, MoebiusMap::translation({dx, 0}));

        // P chain start sits on y=0, its end on y=1; Q enters on y=1 and
        // exits on y=0, so two straight segments close the loop.
        std::vector<Point> vs = cp.verts;
        std::vector<Arc> es = cp.arcs;
        es.push_back(Arc::segment(cp.verts.back(), cq.verts.front()));
        vs.insert(vs.end(), cq.verts.begin(), cq.verts.end());
        es.insert(es.end(), cq.arcs.begin(), cq.arcs.end());
        es.push_back(Arc::segment(cq.verts.back(), cp.verts.front()));

        ArcPolygon glued(std::move(vs), std::move(es));
        if (is_simple(glued).simple) return glued;
        margin_scale *= 2;
    }
    throw overlap_after_placement("glued polygon still self-intersects after retries");
}

namespace {

bool near_angle(double a, double b, double tol = 1e-9) {
    return std::fabs(a - b) <= tol;
}

bool is_forbidden_triple(const std::vector<double>& a) {
    if (a.size() != 3) return false;
    int zeros = 0, pis = 0;
    for (double x : a) {
        if (near_angle(x, 0)) ++zeros;
        if (near_angle(x, kPi)) ++pis;
    }
    return zeros == 2 && pis == 1;
}

ArcPolygon realize_impl(const std::vector<double>& angles);

ArcPolygon realize_quad_base(const std::vector<double>& a) {
    // Multiset {0,0,pi,pi}: pick the variant and rotate labels to match.
    std::size_t z0 = 4, z1 = 4;
    for (std::size_t i = 0; i < 4; ++i)
        if (near_angle(a[i], 0)) (z0 == 4 ? z0 : z1) = i;
    bool adjacent = (z1 == z0 + 1) || (z0 == 0 && z1 == 3);
    ArcPolygon base =
        base_quadrilateral(adjacent ? QuadVariant::AdjacentZeros : QuadVariant::AlternatingZeros);
    std::vector<double> got = measure_all_angles(base);
    for (std::size_t shift = 0; shift < 4; ++shift) {
        bool ok = true;
        for (std::size_t i = 0; i < 4; ++i)
            ok = ok && near_angle(got[(i + shift) % 4], a[i], 1e-6);
        if (ok) return base.rotated_indices(shift);
    }
    throw not_realizable("base quadrilateral does not match the requested cyclic order");
}

ArcPolygon realize_impl(const std::vector<double>& angles) {
    std::size_t n = angles.size();

    if (n == 3) {
        if (is_forbidden_triple(angles))
            throw forbidden_triple("(0,0,pi) and its permutations are not realizable");
        return construct_triangle(AngleTriple{{angles[0], angles[1], angles[2]}});
    }

    if (n == 4) {
        int zeros = 0, pis = 0;
        for (double x : angles) {
            if (near_angle(x, 0)) ++zeros;
            if (near_angle(x, kPi)) ++pis;
        }
        if (zeros == 2 && pis == 2) return realize_quad_base(angles);
    }

    // Remove one flat angle, realize the rest, and split the merged edge.
    for (std::size_t k = 0; k < n; ++k) {
        if (!near_angle(angles[k], kPi)) continue;
        std::vector<double> rest;
        rest.reserve(n - 1);
        for (std::size_t i = 0; i < n; ++i)
            if (i != k) rest.push_back(angles[i]);
        if (is_forbidden_triple(rest)) continue;  // choose a different pi
        std::size_t m = n - 1;
        ArcPolygon sub = realize_impl(rest);
        std::size_t edge = (k + m - 1) % m;
        ArcPolygon grown = insert_flat_vertex(sub, edge, 0.5);
        // The new vertex lands at index edge+1; relabel it as index k.
        std::size_t shift = (edge + 1 + (n - k)) % n;
        return grown.rotated_indices(shift % n);
    }

    // No flat angle: split into two halves, realize each with an extra cusp,
    // and glue the cusps away.
    std::size_t m = (n + 1) / 2;
    std::vector<double> sigma(angles.begin(), angles.begin() + m);
    std::vector<double> tau(angles.begin() + m, angles.end());
    sigma.push_back(0.0);
    tau.push_back(0.0);
    ArcPolygon ps = realize_impl(sigma);
    ArcPolygon pt = realize_impl(tau);
    return glue_at_cusps(ps, m, pt, n - m);
}

}  // namespace

ArcPolygon realize(const std::vector<double>& angles) {
    if (angles.size() < 3)
        throw angle_out_of_range("realize needs at least three angles");
    for (double a : angles)
        if (a < -epsilon() || a > kPi + epsilon())
            throw angle_out_of_range("realize accepts angles in [0, pi] only");
    std::vector<double> clamped = angles;
    for (double& a : clamped) a = std::clamp(a, 0.0, kPi);
    if (is_forbidden_triple(clamped))
        throw forbidden_triple("(0,0,pi) and its permutations are not realizable");
    return realize_impl(clamped).normalized_to_unit_square();
}

ZigzagNote zigzag_is_infeasible(int n) {
    if (n < 4 || n % 2 != 0)
        throw not_applicable("the alternation argument applies to even side counts >= 4");
    ZigzagNote note;
    note.sides = n;
    note.infeasible = true;
    note.reason =
        "angles alternating 0 and 2*pi force consecutive sides onto nested circles, "
        "so the chain can never close back from the innermost circle to the outermost";
    return note;
}

}  // namespace lombardi
