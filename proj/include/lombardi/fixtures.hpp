#pragma once

#include <string>
#include <vector>

#include "lombardi/arc_triangle.hpp"

namespace lombardi {

/// Committed golden outputs, regenerable bit-for-bit with tools/gen_fixtures.
struct Fixture {
    std::string filename;
    std::string content;
};

/// Crossing-or-boundary configuration drawing for an angle triple: the three
/// arcs built from the phi formula with every non-vertex contact highlighted.
std::string svg_of_triangle_configuration(const AngleTriple& t);

/// The 3-cycle with four pendant vertices at each cycle vertex, as graph
/// files: the plain graph and the variant marking `inside_count` pendants of
/// vertex 0 as drawn inside the triangle face.
std::string pendant_triangle_graph(int pendants_inside_at_v0);

std::vector<Fixture> all_fixtures();

}  // namespace lombardi
