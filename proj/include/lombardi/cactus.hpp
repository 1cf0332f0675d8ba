#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "lombardi/errors.hpp"

namespace lombardi {

struct EdgeRef {
    int u = 0;
    int v = 0;
    int other(int w) const { return w == u ? v : u; }
};

/// One biconnected component: a bridge (single edge) or a simple cycle.
struct Block {
    bool is_cycle = false;
    std::vector<int> edge_ids;
    /// For cycles: vertices in traversal order, cycle_vertices[i] joined to
    /// cycle_vertices[i+1] by cycle_edges[i]. For bridges: the two endpoints.
    std::vector<int> vertices;
    std::vector<int> edges_in_order;
};

/// Connected multigraph in which every edge lies on at most one cycle.
struct CactusGraph {
    std::vector<int> vertex_ids;                 // sorted
    std::vector<EdgeRef> edges;                  // indexed by edge id
    std::map<int, std::vector<int>> incidence;   // vertex -> incident edge ids
    std::vector<Block> blocks;                   // cycles and bridges
    std::set<int> articulation_points;

    int degree(int v) const;
    std::vector<const Block*> cycles() const;
    std::vector<const Block*> bridges() const;
    std::vector<int> blocks_at(int v) const;     // block indices containing v
};

/// Validates connectivity and the one-cycle-per-edge property; the witness in
/// not_a_cactus is an edge shared by two cycles.
CactusGraph validate_cactus(const std::vector<std::pair<int, int>>& edge_list);

/// Rotation system plus, for every (cycle block, vertex) pair, the number of
/// rotation gaps at that vertex interior to the cycle face (1 in the natural
/// embedding; pendants drawn inside a face raise it).
struct EmbeddedCactus {
    CactusGraph graph;
    std::map<int, std::vector<int>> rotation;          // vertex -> cyclic edge ids
    std::map<std::pair<int, int>, int> interior_gaps;  // (block index, vertex) -> gaps

    int gaps(int block_index, int v) const;
    bool is_natural() const;
};

/// The embedding in which every cycle bounds a face with all other incident
/// edges outside: both cycle edges adjacent in each rotation, one interior gap.
EmbeddedCactus natural_embedding(const CactusGraph& g);

/// Interior angle sequence of a cycle face: gaps * 2*pi / deg at each vertex.
std::vector<double> face_angle_sequence(const EmbeddedCactus& e, int block_index);

struct GeneratedCactus {
    std::vector<std::pair<int, int>> edges;
    int cycle_count = 0;
    int bridge_count = 0;
};

/// Seeded random cactus: a random tree of cycle and bridge blocks. Two-cycles
/// get degree-balancing pendants so both bigon angles agree (a bigon's two
/// interior angles are necessarily equal).
GeneratedCactus generate_cactus(int target_vertices, int max_cycle_len, std::uint64_t seed);

}  // namespace lombardi
