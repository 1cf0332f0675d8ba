#pragma once

#include <stdexcept>
#include <string>

namespace lombardi {

struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

struct coincident_points : error {
    using error::error;
};
struct maps_through_infinity : error {
    using error::error;
};
struct points_not_on_circle : error {
    using error::error;
};
struct angle_out_of_range : error {
    using error::error;
};
struct not_realizable : error {
    using error::error;
};
struct degenerate_vertices : error {
    using error::error;
};
struct index_out_of_range : error {
    using error::error;
};
struct parameter_out_of_range : error {
    using error::error;
};
struct forbidden_triple : error {
    using error::error;
};
struct not_a_cusp : error {
    using error::error;
};
struct not_simple_input : error {
    using error::error;
};
struct not_applicable : error {
    using error::error;
};
struct not_connected : error {
    using error::error;
};
struct not_a_cactus : error {
    not_a_cactus(const std::string& what, int u, int v) : error(what), witness_u(u), witness_v(v) {}
    int witness_u;
    int witness_v;
};
struct non_consecutive_edges : error {
    using error::error;
};
struct overlap_after_placement : error {
    using error::error;
};
struct bigon_angle_mismatch : error {
    using error::error;
};
struct parse_error : error {
    using error::error;
};

}  // namespace lombardi
