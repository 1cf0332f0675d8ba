#include "lombardi/graph_io.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace lombardi {

namespace {

std::string fmt_coord(double v) {
    if (v == 0.0) v = 0.0;
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string t;
    while (in >> t) {
        if (t[0] == '#') break;
        out.push_back(t);
    }
    return out;
}

int to_int(const std::string& s) {
    try {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) throw parse_error("bad integer: " + s);
        return v;
    } catch (const std::exception&) {
        throw parse_error("bad integer: " + s);
    }
}

double to_real(const std::string& s) {
    try {
        std::size_t used = 0;
        double v = std::stod(s, &used);
        if (used != s.size()) throw parse_error("bad number: " + s);
        return v;
    } catch (const std::exception&) {
        throw parse_error("bad number: " + s);
    }
}

}  // namespace

GraphFile parse_graph_file(const std::string& text) {
    GraphFile f;
    std::istringstream in(text);
    std::string line;
    std::string section;
    while (std::getline(in, line)) {
        std::vector<std::string> tok = tokenize(line);
        if (tok.empty()) continue;
        if (tok.size() == 1 && (tok[0] == "vertices" || tok[0] == "edges" ||
                                tok[0] == "rotation" || tok[0] == "interior" ||
                                tok[0] == "drawing")) {
            section = tok[0];
            if (section == "rotation") f.has_rotation = true;
            if (section == "interior") f.has_interior = true;
            continue;
        }
        if (section == "vertices") {
            for (const std::string& t : tok) f.vertices.push_back(to_int(t));
        } else if (section == "edges") {
            if (tok.size() != 2) throw parse_error("edge line needs two vertex ids: " + line);
            f.edges.push_back({to_int(tok[0]), to_int(tok[1])});
        } else if (section == "rotation") {
            if (tok.size() < 2) throw parse_error("rotation line needs 'v: e...': " + line);
            std::string head = tok[0];
            if (!head.empty() && head.back() == ':') head.pop_back();
            int v = to_int(head);
            std::vector<int> rot;
            for (std::size_t i = 1; i < tok.size(); ++i) rot.push_back(to_int(tok[i]));
            f.rotation[v] = rot;
        } else if (section == "interior") {
            if (tok.size() != 2) throw parse_error("interior line needs 'v count': " + line);
            f.interior_marks[to_int(tok[0])] = to_int(tok[1]);
        } else if (section == "drawing") {
            // handled by parse_drawing_file
        } else {
            throw parse_error("content before a section header: " + line);
        }
    }
    if (f.vertices.empty()) throw parse_error("missing vertices section");
    std::vector<int> sorted = f.vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw parse_error("duplicate vertex id");
    for (auto [u, v] : f.edges) {
        if (!std::binary_search(sorted.begin(), sorted.end(), u) ||
            !std::binary_search(sorted.begin(), sorted.end(), v))
            throw parse_error("edge references an undeclared vertex");
    }
    return f;
}

std::string serialize_graph_file(const GraphFile& f) {
    std::ostringstream out;
    out << "vertices\n";
    for (std::size_t i = 0; i < f.vertices.size(); ++i)
        out << f.vertices[i] << (i + 1 == f.vertices.size() ? "\n" : " ");
    out << "edges\n";
    for (auto [u, v] : f.edges) out << u << " " << v << "\n";
    if (f.has_rotation && !f.rotation.empty()) {
        out << "rotation\n";
        for (const auto& [v, rot] : f.rotation) {
            out << v << ":";
            for (int e : rot) out << " " << e;
            out << "\n";
        }
    }
    if (f.has_interior && !f.interior_marks.empty()) {
        out << "interior\n";
        for (const auto& [v, k] : f.interior_marks) out << v << " " << k << "\n";
    }
    return out.str();
}

GraphFile to_graph_file(const std::vector<std::pair<int, int>>& edges) {
    GraphFile f;
    std::set<int> vs;
    for (auto [u, v] : edges) {
        vs.insert(u);
        vs.insert(v);
    }
    f.vertices.assign(vs.begin(), vs.end());
    f.edges = edges;
    return f;
}

EmbeddedCactus embed_from_file(const CactusGraph& g, const GraphFile& f) {
    EmbeddedCactus e = natural_embedding(g);
    if (f.has_rotation) {
        for (const auto& [v, rot] : f.rotation) {
            std::vector<int> want = g.incidence.at(v);
            std::vector<int> got = rot;
            std::sort(want.begin(), want.end());
            std::sort(got.begin(), got.end());
            if (want != got)
                throw parse_error("rotation at vertex " + std::to_string(v) +
                                  " does not list each incident edge exactly once");
            e.rotation[v] = rot;
        }
        // Derive gap counts: interior side of each cycle taken as the one
        // with fewer foreign edges between the two cycle edges.
        for (std::size_t bi = 0; bi < g.blocks.size(); ++bi) {
            const Block& b = g.blocks[bi];
            if (!b.is_cycle) continue;
            std::size_t n = b.vertices.size();
            for (std::size_t k = 0; k < n; ++k) {
                int v = b.vertices[k];
                int e_in = b.edges_in_order[(k + n - 1) % n];
                int e_out = b.edges_in_order[k];
                const std::vector<int>& rot = e.rotation.at(v);
                std::size_t m = rot.size();
                std::size_t pi = m, po = m;
                for (std::size_t r = 0; r < m; ++r) {
                    if (rot[r] == e_in) pi = r;
                    if (rot[r] == e_out) po = r;
                }
                std::size_t between = (po + m - pi) % m;  // slots from e_in to e_out
                int n1 = static_cast<int>(between) - 1;
                int n2 = static_cast<int>(m - between) - 1;
                e.interior_gaps[{static_cast<int>(bi), v}] = std::min(n1, n2) + 1;
            }
        }
    }
    for (const auto& [v, k] : f.interior_marks) {
        std::vector<int> owners;
        for (std::size_t bi = 0; bi < g.blocks.size(); ++bi) {
            const Block& b = g.blocks[bi];
            if (!b.is_cycle) continue;
            if (std::find(b.vertices.begin(), b.vertices.end(), v) != b.vertices.end())
                owners.push_back(static_cast<int>(bi));
        }
        if (owners.size() != 1)
            throw parse_error("interior mark at vertex " + std::to_string(v) +
                              " needs the vertex to lie on exactly one cycle");
        if (k < 0 || k > g.degree(v) - 2)
            throw parse_error("interior mark at vertex " + std::to_string(v) +
                              " exceeds the non-cycle degree");
        e.interior_gaps[{owners[0], v}] = k + 1;
    }
    return e;
}

std::string serialize_drawing_file(const GraphFile& f, const Drawing& d) {
    std::ostringstream out;
    out << serialize_graph_file(f);
    out << "drawing\n";
    for (const auto& [v, p] : d.vertex_points)
        out << "vertex " << v << " " << fmt_coord(p.x) << " " << fmt_coord(p.y) << "\n";
    for (const auto& [eid, a] : d.edge_arcs) {
        out << "edge " << eid << " " << fmt_coord(a.start().x) << " " << fmt_coord(a.start().y)
            << " " << fmt_coord(a.witness().x) << " " << fmt_coord(a.witness().y) << " "
            << fmt_coord(a.end().x) << " " << fmt_coord(a.end().y) << "\n";
    }
    return out.str();
}

std::pair<GraphFile, Drawing> parse_drawing_file(const std::string& text) {
    GraphFile f = parse_graph_file(text);
    Drawing d;
    std::istringstream in(text);
    std::string line;
    bool in_drawing = false;
    while (std::getline(in, line)) {
        std::vector<std::string> tok = tokenize(line);
        if (tok.empty()) continue;
        if (tok.size() == 1 && tok[0] == "drawing") {
            in_drawing = true;
            continue;
        }
        if (tok.size() == 1 && (tok[0] == "vertices" || tok[0] == "edges" ||
                                tok[0] == "rotation" || tok[0] == "interior")) {
            in_drawing = false;
            continue;
        }
        if (!in_drawing) continue;
        if (tok[0] == "vertex") {
            if (tok.size() != 4) throw parse_error("vertex line needs 'vertex id x y'");
            d.vertex_points[to_int(tok[1])] = {to_real(tok[2]), to_real(tok[3])};
        } else if (tok[0] == "edge") {
            if (tok.size() != 8) throw parse_error("edge line needs 7 fields");
            Point s{to_real(tok[2]), to_real(tok[3])};
            Point w{to_real(tok[4]), to_real(tok[5])};
            Point e{to_real(tok[6]), to_real(tok[7])};
            d.edge_arcs.emplace(to_int(tok[1]), Arc(s, w, e));
        } else {
            throw parse_error("unknown drawing line: " + line);
        }
    }
    if (d.vertex_points.empty()) throw parse_error("missing drawing section");
    return {f, d};
}

}  // namespace lombardi
