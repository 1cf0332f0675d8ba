#include "lombardi/cactus.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stack>

namespace lombardi {

int CactusGraph::degree(int v) const {
    auto it = incidence.find(v);
    return it == incidence.end() ? 0 : static_cast<int>(it->second.size());
}

std::vector<const Block*> CactusGraph::cycles() const {
    std::vector<const Block*> out;
    for (const Block& b : blocks)
        if (b.is_cycle) out.push_back(&b);
    return out;
}

std::vector<const Block*> CactusGraph::bridges() const {
    std::vector<const Block*> out;
    for (const Block& b : blocks)
        if (!b.is_cycle) out.push_back(&b);
    return out;
}

std::vector<int> CactusGraph::blocks_at(int v) const {
    std::vector<int> out;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        const Block& b = blocks[i];
        if (std::find(b.vertices.begin(), b.vertices.end(), v) != b.vertices.end())
            out.push_back(static_cast<int>(i));
    }
    return out;
}

namespace {

// Standard lowpoint DFS producing biconnected components of a multigraph;
// parallel edges are distinct by edge id.
struct BlockFinder {
    const std::map<int, std::vector<int>>& inc;
    const std::vector<EdgeRef>& edges;
    std::map<int, int> depth;
    std::map<int, int> low;
    std::stack<int> edge_stack;
    std::vector<std::vector<int>> components;  // edge id lists
    std::set<int> cut_vertices;

    void run(int root) {
        dfs(root, -1, 0);
    }

    void dfs(int v, int parent_edge, int d) {
        depth[v] = d;
        low[v] = d;
        int children = 0;
        for (int eid : inc.at(v)) {
            if (eid == parent_edge) continue;
            int w = edges[eid].other(v);
            if (!depth.count(w)) {
                edge_stack.push(eid);
                ++children;
                dfs(w, eid, d + 1);
                low[v] = std::min(low[v], low[w]);
                if ((parent_edge != -1 && low[w] >= d) || (parent_edge == -1 && children > 1))
                    cut_vertices.insert(v);
                if (low[w] >= d) pop_component(eid);
            } else if (depth[w] < d) {
                edge_stack.push(eid);
                low[v] = std::min(low[v], depth[w]);
            }
        }
        if (parent_edge == -1 && !edge_stack.empty()) pop_component(-1);
    }

    void pop_component(int until_edge) {
        std::vector<int> comp;
        while (!edge_stack.empty()) {
            int e = edge_stack.top();
            edge_stack.pop();
            comp.push_back(e);
            if (e == until_edge) break;
        }
        if (!comp.empty()) components.push_back(std::move(comp));
    }
};

// Orders a cycle block's vertices by walking its edges.
Block make_cycle_block(const std::vector<int>& edge_ids, const std::vector<EdgeRef>& edges) {
    Block b;
    b.is_cycle = true;
    b.edge_ids = edge_ids;
    std::map<int, std::vector<int>> local;
    for (int eid : edge_ids) {
        local[edges[eid].u].push_back(eid);
        local[edges[eid].v].push_back(eid);
    }
    int start = local.begin()->first;  // smallest vertex id
    int v = start;
    int prev_edge = -1;
    do {
        b.vertices.push_back(v);
        int next_edge = -1;
        for (int eid : local[v]) {
            if (eid != prev_edge) {
                next_edge = eid;
                break;
            }
        }
        b.edges_in_order.push_back(next_edge);
        v = edges[next_edge].other(v);
        prev_edge = next_edge;
    } while (v != start);
    return b;
}

}  // namespace

CactusGraph validate_cactus(const std::vector<std::pair<int, int>>& edge_list) {
    CactusGraph g;
    std::set<int> vset;
    for (std::size_t i = 0; i < edge_list.size(); ++i) {
        auto [u, v] = edge_list[i];
        if (u == v) throw not_a_cactus("self-loops are not supported", u, v);
        g.edges.push_back({u, v});
        vset.insert(u);
        vset.insert(v);
        g.incidence[u].push_back(static_cast<int>(i));
        g.incidence[v].push_back(static_cast<int>(i));
    }
    if (vset.empty()) throw not_connected("empty graph");
    g.vertex_ids.assign(vset.begin(), vset.end());

    // Connectivity.
    std::set<int> seen;
    std::stack<int> todo;
    todo.push(g.vertex_ids.front());
    seen.insert(g.vertex_ids.front());
    while (!todo.empty()) {
        int v = todo.top();
        todo.pop();
        for (int eid : g.incidence[v]) {
            int w = g.edges[eid].other(v);
            if (seen.insert(w).second) todo.push(w);
        }
    }
    if (seen.size() != vset.size()) throw not_connected("graph is not connected");

    BlockFinder bf{g.incidence, g.edges, {}, {}, {}, {}, {}, {}};
    bf.run(g.vertex_ids.front());
    g.articulation_points = bf.cut_vertices;

    for (const std::vector<int>& comp : bf.components) {
        if (comp.size() == 1) {
            Block b;
            b.is_cycle = false;
            b.edge_ids = comp;
            b.vertices = {g.edges[comp[0]].u, g.edges[comp[0]].v};
            b.edges_in_order = comp;
            g.blocks.push_back(std::move(b));
            continue;
        }
        std::set<int> verts;
        for (int eid : comp) {
            verts.insert(g.edges[eid].u);
            verts.insert(g.edges[eid].v);
        }
        if (verts.size() != comp.size()) {
            // More edges than vertices: some edge lies on two cycles.
            int witness = comp.front();
            throw not_a_cactus("edge belongs to more than one cycle", g.edges[witness].u,
                               g.edges[witness].v);
        }
        g.blocks.push_back(make_cycle_block(comp, g.edges));
    }
    return g;
}

int EmbeddedCactus::gaps(int block_index, int v) const {
    auto it = interior_gaps.find({block_index, v});
    return it == interior_gaps.end() ? 1 : it->second;
}

bool EmbeddedCactus::is_natural() const {
    for (const auto& [key, g] : interior_gaps)
        if (g != 1) return false;
    // Both edges of every cycle must be rotation-adjacent at every vertex.
    for (std::size_t bi = 0; bi < graph.blocks.size(); ++bi) {
        const Block& b = graph.blocks[bi];
        if (!b.is_cycle) continue;
        for (std::size_t k = 0; k < b.vertices.size(); ++k) {
            int v = b.vertices[k];
            int e_in = b.edges_in_order[(k + b.vertices.size() - 1) % b.vertices.size()];
            int e_out = b.edges_in_order[k];
            const std::vector<int>& rot = rotation.at(v);
            std::size_t n = rot.size();
            std::size_t pi = n, po = n;
            for (std::size_t r = 0; r < n; ++r) {
                if (rot[r] == e_in) pi = r;
                if (rot[r] == e_out) po = r;
            }
            if (pi == n || po == n) return false;
            std::size_t diff = (po + n - pi) % n;
            if (diff != 1 && diff != n - 1) return false;
        }
    }
    return true;
}

EmbeddedCactus natural_embedding(const CactusGraph& g) {
    EmbeddedCactus e;
    e.graph = g;
    for (int v : g.vertex_ids) {
        std::vector<int> rot;
        // Blocks in index order; a cycle contributes its two edges at v
        // back-to-back, a bridge one edge.
        for (int bi : g.blocks_at(v)) {
            const Block& b = g.blocks[bi];
            if (!b.is_cycle) {
                rot.push_back(b.edge_ids[0]);
                continue;
            }
            std::size_t n = b.vertices.size();
            for (std::size_t k = 0; k < n; ++k) {
                if (b.vertices[k] != v) continue;
                rot.push_back(b.edges_in_order[(k + n - 1) % n]);
                rot.push_back(b.edges_in_order[k]);
            }
        }
        e.rotation[v] = rot;
    }
    for (std::size_t bi = 0; bi < g.blocks.size(); ++bi) {
        if (!g.blocks[bi].is_cycle) continue;
        for (int v : g.blocks[bi].vertices) e.interior_gaps[{static_cast<int>(bi), v}] = 1;
    }
    return e;
}

std::vector<double> face_angle_sequence(const EmbeddedCactus& e, int block_index) {
    const Block& b = e.graph.blocks[block_index];
    std::vector<double> out;
    out.reserve(b.vertices.size());
    for (int v : b.vertices) {
        int d = e.graph.degree(v);
        out.push_back(e.gaps(block_index, v) * 2 * std::numbers::pi / d);
    }
    return out;
}

GeneratedCactus generate_cactus(int target_vertices, int max_cycle_len, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    GeneratedCactus out;
    std::vector<int> verts;
    int next_id = 0;
    std::vector<std::pair<int, int>> two_cycles;  // endpoints of bigon blocks

    auto new_vertex = [&] {
        verts.push_back(next_id);
        return next_id++;
    };

    auto add_block = [&](int attach) {
        std::uniform_int_distribution<int> kind(0, 2);
        bool make_cycle = max_cycle_len >= 2 && kind(rng) > 0;
        if (!make_cycle) {
            out.edges.push_back({attach, new_vertex()});
            ++out.bridge_count;
            return;
        }
        std::uniform_int_distribution<int> len_dist(2, max_cycle_len);
        int len = len_dist(rng);
        int prev = attach;
        int first = attach;
        for (int i = 1; i < len; ++i) {
            int v = new_vertex();
            out.edges.push_back({prev, v});
            prev = v;
        }
        out.edges.push_back({prev, first});
        ++out.cycle_count;
        if (len == 2) two_cycles.push_back({attach, prev});
    };

    int root = new_vertex();
    add_block(root);
    while (static_cast<int>(verts.size()) < target_vertices) {
        std::uniform_int_distribution<std::size_t> pick(0, verts.size() - 1);
        add_block(verts[pick(rng)]);
    }

    // Equalize bigon endpoint degrees: both interior angles of a bigon face
    // are 2*pi/deg, and a bigon's two angles must be equal. Vertices linked
    // by 2-cycles form components that all need one common degree.
    std::map<int, int> deg;
    for (auto [u, v] : out.edges) {
        ++deg[u];
        ++deg[v];
    }
    std::map<int, std::vector<int>> partner;
    for (auto [u, v] : two_cycles) {
        partner[u].push_back(v);
        partner[v].push_back(u);
    }
    std::set<int> done;
    for (const auto& [start, _] : partner) {
        if (done.count(start)) continue;
        std::vector<int> comp;
        std::stack<int> todo;
        todo.push(start);
        done.insert(start);
        while (!todo.empty()) {
            int v = todo.top();
            todo.pop();
            comp.push_back(v);
            for (int w : partner[v])
                if (done.insert(w).second) todo.push(w);
        }
        int target = 0;
        for (int v : comp) target = std::max(target, deg[v]);
        for (int v : comp) {
            for (int k = deg[v]; k < target; ++k) {
                out.edges.push_back({v, new_vertex()});
                ++out.bridge_count;
            }
            deg[v] = target;
        }
    }
    return out;
}

}  // namespace lombardi
