#include "lombardi/drawing.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace lombardi {

namespace {
constexpr double kPi = std::numbers::pi;
}

Box Drawing::bbox() const {
    Box bb;
    for (const auto& [v, p] : vertex_points) bb.expand(p);
    for (const auto& [e, a] : edge_arcs) bb.merge(a.bbox());
    return bb;
}

Drawing Drawing::normalized() const {
    Box bb = bbox();
    double span = std::max({bb.maxx - bb.minx, bb.maxy - bb.miny, 1e-300});
    double s = 1.0 / span;
    auto tf = [&](Point p) { return Point{(p.x - bb.minx) * s, (p.y - bb.miny) * s}; };
    Drawing out;
    for (const auto& [v, p] : vertex_points) out.vertex_points[v] = tf(p);
    for (const auto& [e, a] : edge_arcs)
        out.edge_arcs.emplace(e, Arc(tf(a.start()), tf(a.witness()), tf(a.end())));
    return out;
}

PartialDrawing draw_block(const CactusGraph& g, const Block& block,
                          const std::vector<double>& required_angles) {
    PartialDrawing d;
    if (!block.is_cycle) {
        const EdgeRef& e = g.edges[block.edge_ids[0]];
        d.vertex_points[e.u] = {0, 0};
        d.vertex_points[e.v] = {1, 0};
        d.edge_arcs.emplace(block.edge_ids[0], Arc::segment({0, 0}, {1, 0}));
        return d;
    }

    std::size_t n = block.vertices.size();
    if (n == 2) {
        double a0 = required_angles[0], a1 = required_angles[1];
        if (std::fabs(a0 - a1) > 1e-9)
            throw bigon_angle_mismatch(
                "a bigon face needs equal interior angles at both endpoints (got " +
                std::to_string(a0) + " and " + std::to_string(a1) + ")");
        ArcPolygon lens = bigon({0, 0}, {1, 0}, a0);
        d.vertex_points[block.vertices[0]] = lens.vertex(0);
        d.vertex_points[block.vertices[1]] = lens.vertex(1);
        d.edge_arcs.emplace(block.edges_in_order[0], lens.edge(0));
        d.edge_arcs.emplace(block.edges_in_order[1], lens.edge(1).reversed());
        return d;
    }

    ArcPolygon poly = realize(required_angles);
    for (std::size_t i = 0; i < n; ++i) {
        d.vertex_points[block.vertices[i]] = poly.vertex(i);
        d.edge_arcs.emplace(block.edges_in_order[i], poly.edge(i));
    }
    return d;
}

namespace {

struct PieceRay {
    int edge_id;
    Point origin;
    Vec dir;
};

// Distance from p to the closed angular sector spanned counterclockwise from
// angle lo to angle hi (apex at the origin).
double dist_to_sector(Point p, double lo, double hi) {
    double a = std::atan2(p.y, p.x);
    double span = mod_two_pi(hi - lo);
    double rel = mod_two_pi(a - lo);
    if (rel <= span) return 0.0;  // inside
    auto dist_to_ray = [&](double ang) {
        Vec u{std::cos(ang), std::sin(ang)};
        Vec v{p.x, p.y};
        double t = dot(u, v);
        if (t <= 0) return v.norm();
        return std::fabs(cross(u, v));
    };
    return std::min(dist_to_ray(lo), dist_to_ray(hi));
}

}  // namespace

PartialDrawing glue_at_articulation(int v, const std::vector<PartialDrawing>& pieces,
                                    const std::vector<int>& rotation_at_v,
                                    const CactusGraph& g) {
    if (pieces.size() == 1) return pieces[0];
    int d = static_cast<int>(rotation_at_v.size());

    // Which piece owns each edge at v, and the contiguous fan slots it gets.
    std::map<int, int> owner;
    for (std::size_t i = 0; i < pieces.size(); ++i)
        for (const auto& [eid, arc] : pieces[i].edge_arcs)
            if (g.edges[eid].u == v || g.edges[eid].v == v) owner[eid] = static_cast<int>(i);
    if (owner.size() != rotation_at_v.size())
        throw non_consecutive_edges("pieces do not cover the rotation at the glue vertex");

    // Rotate the rotation list so that slot 0 starts a piece boundary.
    std::vector<int> rot = rotation_at_v;
    for (int r = 0; r < d && owner.at(rot[0]) == owner.at(rot[d - 1]); ++r)
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    std::map<int, int> slot_of_edge;
    for (int s = 0; s < d; ++s) slot_of_edge[rot[s]] = s;
    std::map<int, std::pair<int, int>> slots_of_piece;  // piece -> [first, last]
    {
        int s = 0;
        while (s < d) {
            int p = owner.at(rot[s]);
            int e = s;
            while (e + 1 < d && owner.at(rot[e + 1]) == p) ++e;
            if (slots_of_piece.count(p))
                throw non_consecutive_edges("a subgraph's edges are not consecutive at the vertex");
            slots_of_piece[p] = {s, e};
            s = e + 1;
        }
    }

    double step = 2 * kPi / d;
    PartialDrawing merged;

    for (std::size_t pi = 0; pi < pieces.size(); ++pi) {
        const PartialDrawing& piece = pieces[pi];
        Point pv = piece.vertex_points.at(v);
        MoebiusMap open = MoebiusMap::cusp_opener(pv, 1.0);

        // Rays for the piece's edges at v; everything else stays finite.
        std::vector<PieceRay> rays;
        std::vector<std::pair<int, Arc>> finite_arcs;
        for (const auto& [eid, arc] : piece.edge_arcs) {
            const EdgeRef& er = g.edges[eid];
            if (er.u != v && er.v != v) {
                finite_arcs.push_back({eid, arc});
                continue;
            }
            Arc oriented = er.u == v ? arc : arc.reversed();
            Point far_end = open.apply(oriented.end());
            Point wit = open.apply(oriented.witness());
            if (far_end.infinite || wit.infinite)
                throw maps_through_infinity("edge at the glue vertex degenerates");
            rays.push_back({eid, far_end, (wit - far_end).normalized()});
        }

        auto [s_first, s_last] = slots_of_piece.at(static_cast<int>(pi));
        // Rotate the piece so every ray is parallel to a fan direction. The
        // rays' mutual gap equals the wedge span up to direction, so one of
        // the two anchors lines both of them up.
        double want_first = s_first * step;
        double turn = want_first - rays[0].dir.angle();
        if (rays.size() == 2) {
            double span = (s_last - s_first) * step;
            double gap01 = mod_two_pi(rays[1].dir.angle() - rays[0].dir.angle());
            if (std::fabs(gap01 - span) > 1e-6) turn = want_first - rays[1].dir.angle();
        }
        for (const PieceRay& r : rays) {
            double landed = mod_two_pi(r.dir.angle() + turn);
            double off = std::fmod(landed + step / 2, step) - step / 2;
            if (std::fabs(off) > 1e-6)
                throw overlap_after_placement("piece ray does not align with the angle fan");
        }
        MoebiusMap place = MoebiusMap::rotation(turn);
        MoebiusMap pre = open.then(place);

        // Finite bounding disk after rotation.
        Box bb;
        for (auto& [eid, arc] : finite_arcs) bb.merge(apply_map(pre, arc).bbox());
        for (const auto& [w, p] : piece.vertex_points) {
            if (w == v) continue;
            bb.expand(pre.apply(p));
        }
        for (const PieceRay& r : rays) bb.expand(place.apply(r.origin));

        double radius = std::max(bb.diameter() / 2, 1e-6);
        Point center = bb.center();
        double lo = s_first * step - kPi / d;
        double hi = s_last * step + kPi / d;
        Vec bis{std::cos((lo + hi) / 2), std::sin((lo + hi) / 2)};

        double t = std::max(1.0, 2 * radius);
        double clearance = 1.1 * radius;
        for (int it = 0; it < 200; ++it) {
            Point c{center.x + t * bis.x, center.y + t * bis.y};
            if (dist_to_sector(c, hi, lo) >= clearance && c.x * c.x + c.y * c.y >=
                                                              clearance * clearance)
                break;
            t *= 2;
        }
        MoebiusMap full = open.then(MoebiusMap::rotation(turn))
                              .then(MoebiusMap::translation({t * bis.x, t * bis.y}))
                              .then(MoebiusMap::origin_swap(1.0));

        for (const auto& [w, p] : piece.vertex_points) {
            if (w == v) continue;
            merged.vertex_points[w] = full.apply(p);
        }
        merged.vertex_points[v] = {0, 0};
        for (const auto& [eid, arc] : piece.edge_arcs) {
            const EdgeRef& er = g.edges[eid];
            if (er.u != v && er.v != v) {
                merged.edge_arcs.emplace(eid, apply_map(full, arc));
                continue;
            }
            // Rebuild the edge from its surviving endpoint to v = origin.
            Arc oriented = er.u == v ? arc : arc.reversed();
            Point far_p = full.apply(oriented.end());
            Point wit = full.apply(oriented.witness());
            Arc image(Point{0, 0}, wit, far_p);
            merged.edge_arcs.emplace(eid, er.u == v ? image : image.reversed());
        }
    }
    return merged.normalized();
}

namespace {

struct BlockCutNode {
    int block_index;
    int parent_vertex = -1;  // articulation joining to the parent, -1 at the root
};

PartialDrawing draw_subtree(const CactusGraph& g, const EmbeddedCactus& emb, int block_index,
                            int from_vertex, std::vector<bool>& used);

PartialDrawing merge_at_vertex(const CactusGraph& g, const EmbeddedCactus& emb, int v,
                               PartialDrawing own, int own_block, std::vector<bool>& used) {
    std::vector<PartialDrawing> pieces;
    std::vector<int> piece_blocks;
    pieces.push_back(std::move(own));
    piece_blocks.push_back(own_block);
    for (int bi : g.blocks_at(v)) {
        if (used[bi]) continue;
        used[bi] = true;
        pieces.push_back(draw_subtree(g, emb, bi, v, used));
        piece_blocks.push_back(bi);
    }
    if (pieces.size() == 1) return pieces[0];
    return glue_at_articulation(v, pieces, emb.rotation.at(v), g);
}

PartialDrawing draw_subtree(const CactusGraph& g, const EmbeddedCactus& emb, int block_index,
                            int from_vertex, std::vector<bool>& used) {
    const Block& b = g.blocks[block_index];
    std::vector<double> angles;
    if (b.is_cycle) angles = face_angle_sequence(emb, block_index);
    PartialDrawing d = draw_block(g, b, angles);

    // Glue every child hanging off this block (except through from_vertex).
    for (int v : b.vertices) {
        if (v == from_vertex) continue;
        d = merge_at_vertex(g, emb, v, std::move(d), block_index, used);
    }
    return d;
}

}  // namespace

Drawing draw_cactus(const CactusGraph& g) {
    if (g.edges.empty()) {
        Drawing d;
        d.vertex_points[g.vertex_ids.front()] = {0, 0};
        return d;
    }
    EmbeddedCactus emb = natural_embedding(g);

    // Root at the block containing the smallest vertex id.
    int root_block = 0;
    int best = g.vertex_ids.back() + 1;
    for (std::size_t bi = 0; bi < g.blocks.size(); ++bi) {
        int m = *std::min_element(g.blocks[bi].vertices.begin(), g.blocks[bi].vertices.end());
        if (m < best) {
            best = m;
            root_block = static_cast<int>(bi);
        }
    }
    std::vector<bool> used(g.blocks.size(), false);
    used[root_block] = true;
    PartialDrawing d = draw_subtree(g, emb, root_block, -1, used);
    return d.normalized();
}

VerifyReport verify_lombardi(const Drawing& d, const CactusGraph& g, double tol) {
    VerifyReport rep;
    Box bb = d.bbox();
    double geom_tol = 1e2 * epsilon() * std::max(1.0, bb.diameter());

    for (int v : g.vertex_ids) {
        int deg = g.degree(v);
        if (deg < 2) continue;
        if (!d.covers_vertex(v)) {
            rep.pass = false;
            rep.issues.push_back({"vertex not drawn", v, {}, {}});
            continue;
        }
        Point pv = d.vertex_points.at(v);
        std::vector<double> dirs;
        for (int eid : g.incidence.at(v)) {
            auto it = d.edge_arcs.find(eid);
            if (it == d.edge_arcs.end()) {
                rep.pass = false;
                rep.issues.push_back({"edge not drawn", v, {}, {}});
                continue;
            }
            const Arc& a = it->second;
            bool at_start = distance(a.start(), pv) <= distance(a.end(), pv);
            dirs.push_back(a.tangent_at(at_start ? ArcEnd::Start : ArcEnd::End).angle());
        }
        if (static_cast<int>(dirs.size()) != deg) continue;
        std::sort(dirs.begin(), dirs.end());
        double want = 2 * kPi / deg;
        for (int k = 0; k < deg; ++k) {
            double gap = (k + 1 < deg ? dirs[k + 1] : dirs[0] + 2 * kPi) - dirs[k];
            if (std::fabs(gap - want) > tol) {
                rep.pass = false;
                rep.issues.push_back({"angular gap " + std::to_string(gap) + " != " +
                                          std::to_string(want),
                                      v, {}, Point{pv.x, pv.y}});
                break;
            }
        }
    }

    // Planarity: arcs may meet only at shared endpoints.
    std::vector<int> eids;
    for (const auto& [eid, arc] : d.edge_arcs) eids.push_back(eid);
    for (std::size_t i = 0; i < eids.size(); ++i) {
        for (std::size_t j = i + 1; j < eids.size(); ++j) {
            const EdgeRef &ea = g.edges[eids[i]], &eb = g.edges[eids[j]];
            std::vector<Point> allowed;
            for (int w : {ea.u, ea.v})
                if (w == eb.u || w == eb.v) allowed.push_back(d.vertex_points.at(w));
            ArcIntersections hits =
                arc_intersections(d.edge_arcs.at(eids[i]), d.edge_arcs.at(eids[j]));
            if (hits.overlapping_carriers) {
                rep.pass = false;
                rep.issues.push_back({"overlapping edges", {},
                                      std::make_pair(eids[i], eids[j]), {}});
                continue;
            }
            for (const ArcIntersection& hit : hits.points) {
                bool ok = false;
                for (const Point& p : allowed) ok = ok || near(hit.p, p, geom_tol);
                if (!ok) {
                    rep.pass = false;
                    rep.issues.push_back({"edge crossing", {},
                                          std::make_pair(eids[i], eids[j]), hit.p});
                }
            }
        }
    }
    return rep;
}

std::vector<FaceCheck> check_embedded_faces(const EmbeddedCactus& e) {
    std::vector<FaceCheck> out;
    for (std::size_t bi = 0; bi < e.graph.blocks.size(); ++bi) {
        const Block& b = e.graph.blocks[bi];
        if (!b.is_cycle) continue;
        FaceCheck fc;
        fc.block_index = static_cast<int>(bi);
        fc.angles = face_angle_sequence(e, fc.block_index);

        if (fc.angles.size() == 3) {
            AngleTriple t{{fc.angles[0], fc.angles[1], fc.angles[2]}};
            TriangleVerdict v = classify(t);
            fc.triangle = v;
            switch (v.status) {
                case TriangleStatus::Realizable:
                    fc.status = FaceStatus::Realizable;
                    fc.note = "triangle face angles are realizable";
                    break;
                case TriangleStatus::Boundary:
                    fc.status = FaceStatus::Boundary;
                    fc.note = "certified obstruction: phi reaches +-pi";
                    break;
                case TriangleStatus::Infeasible:
                    fc.status = FaceStatus::Infeasible;
                    fc.note = "certified obstruction: phi leaves [-pi, pi]";
                    break;
            }
        } else if (fc.angles.size() >= 4 &&
                   std::all_of(fc.angles.begin(), fc.angles.end(),
                               [](double a) { return a <= kPi + epsilon(); })) {
            fc.status = FaceStatus::Realizable;
            fc.note = "all face angles are positive and at most pi";
        } else {
            fc.status = FaceStatus::Undecided;
            fc.note = "no characterization applies to this face";
        }
        out.push_back(std::move(fc));
    }
    return out;
}

}  // namespace lombardi
