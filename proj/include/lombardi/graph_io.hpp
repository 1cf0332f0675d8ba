#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lombardi/cactus.hpp"
#include "lombardi/drawing.hpp"

namespace lombardi {

/// Line-oriented graph document. Sections: `vertices` (ids), `edges`
/// (id pairs; the edge index is the line order), optional `rotation`
/// (`v: e...` cyclic incident edge ids per vertex), optional `interior`
/// (`v k`: k non-cycle edge slots of cycle-vertex v drawn inside its cycle's
/// face). `#` starts a comment.
struct GraphFile {
    std::vector<int> vertices;
    std::vector<std::pair<int, int>> edges;
    std::map<int, std::vector<int>> rotation;
    std::map<int, int> interior_marks;
    bool has_rotation = false;
    bool has_interior = false;
};

GraphFile parse_graph_file(const std::string& text);
std::string serialize_graph_file(const GraphFile& f);

GraphFile to_graph_file(const std::vector<std::pair<int, int>>& edges);

/// Builds the embedded cactus a graph file describes. Rotation defaults to
/// the natural one; interior marks set the face-side gap counts (k marks make
/// k+1 gaps). Rotation-only files are read with each cycle's interior on the
/// side holding fewer foreign edges at every vertex.
EmbeddedCactus embed_from_file(const CactusGraph& g, const GraphFile& f);

/// Drawing save file: the graph sections followed by a `drawing` section of
/// `vertex id x y` and `edge idx sx sy wx wy ex ey` lines.
std::string serialize_drawing_file(const GraphFile& f, const Drawing& d);
std::pair<GraphFile, Drawing> parse_drawing_file(const std::string& text);

}  // namespace lombardi
