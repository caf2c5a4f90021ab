// Combinatorial divides: a single immersed arc in the disc given by its signed
// Gauss code, the planar map it induces, and the checkerboard-coloured regions.
#ifndef DIVKNOT_DIVIDE_HPP
#define DIVKNOT_DIVIDE_HPP

#include "divknot/errors.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace divknot {

enum class CrossingSign { Positive, Negative };

struct Visit {
    std::string vertex;
    CrossingSign sign = CrossingSign::Positive;
    friend bool operator==(const Visit&, const Visit&) = default;
};

/// Sequence of double-point visits from the start endpoint to the end endpoint.
/// Every vertex is visited exactly twice with the same sign both times.
struct Divide {
    std::vector<Visit> visits;
    std::optional<std::size_t> black_hint;  // region id forced to be black

    std::size_t double_point_count() const { return visits.size() / 2; }
    std::string gauss_code() const;
};

/// Parses whitespace-separated `name+` / `name-` tokens.
Divide parse_divide(std::string_view code);

/// Parses the divide file format: `#` comments, one `gauss:` line and an
/// optional `black: <region-id>` line.
Divide parse_divide_file(std::string_view contents);

/// Half-edge planar map of the divide together with the boundary circle.
///
/// Vertices: 0 is the start endpoint, 1 the end endpoint, 2 + i the i-th
/// double point in first-visit order. Edges 0 .. 2d are the arc segments in
/// arc order; edge 2d+1 runs along the circle from start to end and edge
/// 2d+2 from end back to start (both counterclockwise). Half-edge 2e leaves
/// the start of edge e, half-edge 2e+1 leaves its end.
struct CombinatorialMap {
    std::size_t double_points = 0;
    std::vector<std::string> vertex_names;
    std::vector<int> origin;
    std::vector<int> rot_next;  // counterclockwise successor around the origin
    std::vector<int> rot_prev;
    std::vector<std::vector<int>> rotation;  // counterclockwise cyclic order per vertex
    std::size_t sphere_faces = 0;

    std::size_t vertex_count() const { return vertex_names.size(); }
    std::size_t half_edge_count() const { return origin.size(); }
    std::size_t edge_count() const { return origin.size() / 2; }
    std::size_t arc_edge_count() const { return 2 * double_points + 1; }

    static int twin(int h) { return h ^ 1; }
    static int edge_of(int h) { return h / 2; }
    bool is_arc_edge(int e) const { return static_cast<std::size_t>(e) < arc_edge_count(); }
    /// Next half-edge along the face lying to the left of h.
    int face_next(int h) const { return rot_prev[static_cast<std::size_t>(twin(h))]; }
    /// Half-edge along the boundary circle whose left face is outside the disc.
    int outer_half_edge() const { return static_cast<int>(2 * arc_edge_count() + 1); }
    /// Map vertex index of a named double point; -1 when absent.
    int vertex_index(std::string_view name) const;
};

/// Builds the rotation system and certifies planarity by the Euler count.
CombinatorialMap build_map(const Divide& divide);

enum class Colour { Unset, Black, White };

struct Region {
    std::size_t id = 0;
    std::vector<int> boundary;  // cyclic half-edge walk, region on the left
    bool is_inner = false;
    Colour colour = Colour::Unset;
};

/// Regions of the disc minus the arc in discovery order, starting from the
/// half-edge leaving the start endpoint. The outer face is dropped.
std::vector<Region> faces(const CombinatorialMap& map);

/// Proper two-colouring across arc edges. Without a hint the region left of
/// the first arc segment (region 0) is white; `swap` inverts every colour.
std::vector<Region> checkerboard(std::vector<Region> regions, const CombinatorialMap& map,
                                 std::optional<std::size_t> black_hint, bool swap = false);

/// Snail divide with n double points: v_n ... v_1 v_1 ... v_n, all positive,
/// with the innermost region marked black.
Divide snail(int n);

/// Id of the innermost region of a snail divide: the monogon closed at v1.
std::size_t snail_innermost_region(const CombinatorialMap& map, const std::vector<Region>& regions);

/// Everything derived from a divide that later stages need.
struct DivideDiagram {
    Divide divide;
    CombinatorialMap map;
    std::vector<Region> regions;  // coloured
};

DivideDiagram analyse(const Divide& divide, bool swap_colours = false);

}  // namespace divknot

#endif  // DIVKNOT_DIVIDE_HPP
