#include "divknot/divide.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>

namespace divknot {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::string occurrence_text(std::size_t count) {
    if (count == 1) return "once";
    return std::to_string(count) + " times";
}

}  // namespace

std::string Divide::gauss_code() const {
    std::string out;
    for (const auto& v : visits) {
        if (!out.empty()) out += ' ';
        out += v.vertex;
        out += v.sign == CrossingSign::Positive ? '+' : '-';
    }
    return out;
}

Divide parse_divide(std::string_view code) {
    using Kind = ValidationError::Kind;
    Divide divide;
    std::istringstream in{std::string(code)};
    std::string token;
    while (in >> token) {
        const char last = token.back();
        if (last != '+' && last != '-')
            throw ValidationError(Kind::Syntax, "token '" + token + "' does not end in + or -");
        if (token.size() == 1) throw ValidationError(Kind::EmptyName, "token '" + token + "' has an empty vertex name");
        divide.visits.push_back(
            {token.substr(0, token.size() - 1), last == '+' ? CrossingSign::Positive : CrossingSign::Negative});
    }

    std::map<std::string, std::vector<std::size_t>> seen;
    std::vector<std::string> order;
    for (std::size_t i = 0; i < divide.visits.size(); ++i) {
        auto& hits = seen[divide.visits[i].vertex];
        if (hits.empty()) order.push_back(divide.visits[i].vertex);
        hits.push_back(i);
    }
    for (const auto& name : order) {
        const auto& hits = seen[name];
        if (hits.size() != 2) throw ValidationError(Kind::OddOccurrence, name + " occurs " + occurrence_text(hits.size()));
        if (divide.visits[hits[0]].sign != divide.visits[hits[1]].sign)
            throw ValidationError(Kind::SignMismatch, name + " has different signs at its two visits");
    }
    return divide;
}

Divide parse_divide_file(std::string_view contents) {
    using Kind = ValidationError::Kind;
    std::optional<Divide> divide;
    std::optional<std::size_t> black;
    std::size_t line_no = 0;
    while (!contents.empty()) {
        const auto eol = contents.find('\n');
        const std::string_view line = trim(contents.substr(0, eol));
        contents = eol == std::string_view::npos ? std::string_view{} : contents.substr(eol + 1);
        ++line_no;
        if (line.empty() || line.front() == '#') continue;
        const auto colon = line.find(':');
        if (colon == std::string_view::npos)
            throw ValidationError(Kind::Syntax, "line " + std::to_string(line_no) + ": expected 'key: value'");
        const auto key = trim(line.substr(0, colon));
        const auto value = trim(line.substr(colon + 1));
        if (key == "gauss") {
            if (divide) throw ValidationError(Kind::Syntax, "line " + std::to_string(line_no) + ": duplicate gauss line");
            divide = parse_divide(value);
        } else if (key == "black") {
            std::size_t id = 0;
            const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), id);
            if (ec != std::errc{} || ptr != value.data() + value.size())
                throw ValidationError(Kind::Syntax, "line " + std::to_string(line_no) + ": bad region id");
            black = id;
        } else {
            throw ValidationError(Kind::Syntax,
                                  "line " + std::to_string(line_no) + ": unknown key '" + std::string(key) + "'");
        }
    }
    if (!divide) throw ValidationError(Kind::Syntax, "missing gauss line");
    divide->black_hint = black;
    return *divide;
}

int CombinatorialMap::vertex_index(std::string_view name) const {
    for (std::size_t v = 2; v < vertex_names.size(); ++v)
        if (vertex_names[v] == name) return static_cast<int>(v);
    return -1;
}

CombinatorialMap build_map(const Divide& divide) {
    const std::size_t d = divide.double_point_count();
    const std::size_t points = 2 * d + 2;  // start, visits, end
    CombinatorialMap map;
    map.double_points = d;
    map.vertex_names = {"start", "end"};

    // point k of the arc -> map vertex
    std::vector<int> point_vertex(points);
    point_vertex.front() = 0;
    point_vertex.back() = 1;
    std::map<std::string, std::vector<std::size_t>> visits_of;
    for (std::size_t i = 0; i < divide.visits.size(); ++i) {
        auto& hits = visits_of[divide.visits[i].vertex];
        if (hits.empty()) map.vertex_names.push_back(divide.visits[i].vertex);
        hits.push_back(i);
    }
    if (map.vertex_names.size() != d + 2)
        throw ValidationError(ValidationError::Kind::OddOccurrence, "visit counts do not pair up");
    for (std::size_t v = 2; v < map.vertex_names.size(); ++v)
        for (std::size_t i : visits_of[map.vertex_names[v]]) point_vertex[i + 1] = static_cast<int>(v);

    const std::size_t arc_edges = 2 * d + 1;
    const std::size_t edges = arc_edges + 2;
    map.origin.assign(2 * edges, -1);
    for (std::size_t k = 0; k < arc_edges; ++k) {
        map.origin[2 * k] = point_vertex[k];
        map.origin[2 * k + 1] = point_vertex[k + 1];
    }
    const int circle_out = static_cast<int>(2 * arc_edges);  // start -> end
    const int circle_back = circle_out + 2;                  // end -> start
    map.origin[circle_out] = 0;
    map.origin[circle_out + 1] = 1;
    map.origin[circle_back] = 1;
    map.origin[circle_back + 1] = 0;

    map.rotation.assign(map.vertex_names.size(), {});
    map.rotation[0] = {circle_out, 0, circle_back + 1};
    map.rotation[1] = {circle_back, static_cast<int>(2 * arc_edges - 1), circle_out + 1};
    for (std::size_t v = 2; v < map.vertex_names.size(); ++v) {
        const auto& hits = visits_of[map.vertex_names[v]];
        const int in1 = static_cast<int>(2 * hits[0] + 1);
        const int out1 = static_cast<int>(2 * hits[0] + 2);
        const int in2 = static_cast<int>(2 * hits[1] + 1);
        const int out2 = static_cast<int>(2 * hits[1] + 2);
        if (divide.visits[hits[0]].sign == CrossingSign::Positive)
            map.rotation[v] = {in1, in2, out1, out2};
        else
            map.rotation[v] = {in1, out2, out1, in2};
    }

    map.rot_next.assign(map.origin.size(), -1);
    map.rot_prev.assign(map.origin.size(), -1);
    for (const auto& cycle : map.rotation) {
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            const int h = cycle[i];
            const int next = cycle[(i + 1) % cycle.size()];
            map.rot_next[static_cast<std::size_t>(h)] = next;
            map.rot_prev[static_cast<std::size_t>(next)] = h;
        }
    }

    std::vector<bool> visited(map.origin.size(), false);
    for (std::size_t h = 0; h < map.origin.size(); ++h) {
        if (visited[h]) continue;
        ++map.sphere_faces;
        for (int cur = static_cast<int>(h); !visited[static_cast<std::size_t>(cur)]; cur = map.face_next(cur))
            visited[static_cast<std::size_t>(cur)] = true;
    }
    if (map.sphere_faces != d + 3)
        throw ValidationError(ValidationError::Kind::Planarity,
                              "signed Gauss code is not realizable in the disc: Euler count gives " +
                                  std::to_string(map.sphere_faces) + " faces, expected " + std::to_string(d + 3));
    return map;
}

std::vector<Region> faces(const CombinatorialMap& map) {
    std::vector<int> face_of(map.half_edge_count(), -1);
    std::vector<std::vector<int>> walks;
    auto trace = [&](int start) {
        if (face_of[static_cast<std::size_t>(start)] != -1) return;
        const int id = static_cast<int>(walks.size());
        std::vector<int> walk;
        for (int cur = start; face_of[static_cast<std::size_t>(cur)] == -1; cur = map.face_next(cur)) {
            face_of[static_cast<std::size_t>(cur)] = id;
            walk.push_back(cur);
        }
        walks.push_back(std::move(walk));
    };
    // The outer face is claimed first so that disc regions are numbered from
    // the half-edge leaving the start endpoint.
    trace(map.outer_half_edge());
    for (std::size_t h = 0; h < map.half_edge_count(); ++h) trace(static_cast<int>(h));

    std::vector<Region> regions;
    for (std::size_t f = 1; f < walks.size(); ++f) {
        Region r;
        r.id = regions.size();
        r.boundary = std::move(walks[f]);
        r.is_inner = std::all_of(r.boundary.begin(), r.boundary.end(),
                                 [&](int h) { return map.is_arc_edge(CombinatorialMap::edge_of(h)); });
        regions.push_back(std::move(r));
    }
    return regions;
}

std::vector<Region> checkerboard(std::vector<Region> regions, const CombinatorialMap& map,
                                 std::optional<std::size_t> black_hint, bool swap) {
    using Kind = ValidationError::Kind;
    if (regions.empty()) return regions;
    if (black_hint && *black_hint >= regions.size())
        throw ValidationError(Kind::UnknownRegion, "black region " + std::to_string(*black_hint) + " does not exist");

    std::vector<int> region_of(map.half_edge_count(), -1);
    for (const auto& r : regions)
        for (int h : r.boundary) region_of[static_cast<std::size_t>(h)] = static_cast<int>(r.id);

    std::vector<std::vector<std::size_t>> neighbours(regions.size());
    for (std::size_t e = 0; e < map.arc_edge_count(); ++e) {
        const int a = region_of[2 * e];
        const int b = region_of[2 * e + 1];
        if (a < 0 || b < 0) throw InvariantViolation("arc edge bounds the outer face");
        if (a == b)
            throw ValidationError(Kind::Colouring,
                                  "region " + std::to_string(a) + " lies on both sides of arc edge " + std::to_string(e));
        neighbours[static_cast<std::size_t>(a)].push_back(static_cast<std::size_t>(b));
        neighbours[static_cast<std::size_t>(b)].push_back(static_cast<std::size_t>(a));
    }

    for (auto& r : regions) r.colour = Colour::Unset;
    const std::size_t root = black_hint.value_or(0);
    regions[root].colour = black_hint ? Colour::Black : Colour::White;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
        const std::size_t cur = queue.front();
        queue.pop_front();
        const Colour other = regions[cur].colour == Colour::Black ? Colour::White : Colour::Black;
        for (std::size_t nb : neighbours[cur]) {
            if (regions[nb].colour == Colour::Unset) {
                regions[nb].colour = other;
                queue.push_back(nb);
            } else if (regions[nb].colour != other) {
                throw ValidationError(Kind::Colouring, "regions cannot be checkerboard coloured");
            }
        }
    }
    for (auto& r : regions) {
        if (r.colour == Colour::Unset) throw InvariantViolation("region " + std::to_string(r.id) + " left uncoloured");
        if (swap) r.colour = r.colour == Colour::Black ? Colour::White : Colour::Black;
    }
    return regions;
}

std::size_t snail_innermost_region(const CombinatorialMap& map, const std::vector<Region>& regions) {
    // the loop at v1 is the middle arc segment
    const int loop_edge = static_cast<int>(map.double_points);
    std::optional<std::size_t> found;
    for (const auto& r : regions) {
        if (r.boundary.size() != 1 || CombinatorialMap::edge_of(r.boundary.front()) != loop_edge) continue;
        if (found) throw InvariantViolation("snail has two monogons on its middle segment");
        found = r.id;
    }
    if (!found) throw InvariantViolation("snail has no innermost monogon");
    return *found;
}

Divide snail(int n) {
    if (n < 1) throw std::invalid_argument("snail: n must be positive");
    Divide divide;
    for (int i = n; i >= 1; --i) divide.visits.push_back({"v" + std::to_string(i), CrossingSign::Positive});
    for (int i = 1; i <= n; ++i) divide.visits.push_back({"v" + std::to_string(i), CrossingSign::Positive});
    const CombinatorialMap map = build_map(divide);
    divide.black_hint = snail_innermost_region(map, faces(map));
    return divide;
}

DivideDiagram analyse(const Divide& divide, bool swap_colours) {
    DivideDiagram diagram{divide, build_map(divide), {}};
    diagram.regions = checkerboard(faces(diagram.map), diagram.map, divide.black_hint, swap_colours);
    return diagram;
}

}  // namespace divknot
