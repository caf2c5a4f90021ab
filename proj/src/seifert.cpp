#include "divknot/seifert.hpp"

#include "divknot/exact_linalg.hpp"

#include <algorithm>
#include <unordered_set>

namespace divknot {

std::vector<Generator> ishikawa_basis(const DivideDiagram& diagram) {
    std::vector<Generator> basis;
    for (const auto& r : diagram.regions) {
        if (!r.is_inner) continue;
        Generator g;
        g.kind = r.colour == Colour::Black ? GeneratorKind::BlackRegion : GeneratorKind::WhiteRegion;
        g.region = r.id;
        g.label = "R" + std::to_string(r.id);
        basis.push_back(std::move(g));
    }
    for (std::size_t v = 2; v < diagram.map.vertex_count(); ++v) {
        Generator g;
        g.kind = GeneratorKind::DoublePoint;
        g.vertex = static_cast<int>(v);
        g.label = diagram.map.vertex_names[v];
        basis.push_back(std::move(g));
    }
    for (std::size_t i = 0; i < basis.size(); ++i) basis[i].ordinal = i;
    return basis;
}

std::size_t shared_edges(const CombinatorialMap& map, const Region& a, const Region& b) {
    std::unordered_set<int> in_a(a.boundary.begin(), a.boundary.end());
    std::size_t count = 0;
    for (int h : b.boundary)
        if (map.is_arc_edge(CombinatorialMap::edge_of(h)) && in_a.count(CombinatorialMap::twin(h))) ++count;
    return count;
}

std::size_t vertex_multiplicity(const CombinatorialMap& map, const Region& region, int vertex) {
    return static_cast<std::size_t>(std::count_if(region.boundary.begin(), region.boundary.end(), [&](int h) {
        return map.origin[static_cast<std::size_t>(h)] == vertex;
    }));
}

std::vector<std::size_t> incidences(const CombinatorialMap& map, const std::vector<Region>& regions, int vertex) {
    std::vector<std::size_t> out;
    out.reserve(regions.size());
    for (const auto& r : regions) out.push_back(vertex_multiplicity(map, r, vertex));
    return out;
}

SeifertData seifert_matrix(const DivideDiagram& diagram) {
    SeifertData data;
    data.basis = ishikawa_basis(diagram);
    const auto n = static_cast<Eigen::Index>(data.basis.size());
    data.matrix = IntMatrix::Zero(n, n);
    const auto& map = diagram.map;
    const auto& regions = diagram.regions;

    for (Eigen::Index i = 0; i < n; ++i) {
        const Generator& x = data.basis[static_cast<std::size_t>(i)];
        data.matrix(i, i) = 1;
        for (Eigen::Index j = 0; j < n; ++j) {
            if (i == j) continue;
            const Generator& y = data.basis[static_cast<std::size_t>(j)];
            // Only black-before-white, black-before-vertex and vertex-before-white
            // pairings are nonzero; everything else links trivially.
            if (x.kind == GeneratorKind::BlackRegion && y.kind == GeneratorKind::WhiteRegion)
                data.matrix(i, j) = static_cast<unsigned long>(shared_edges(map, regions[x.region], regions[y.region]));
            else if (x.kind == GeneratorKind::BlackRegion && y.kind == GeneratorKind::DoublePoint)
                data.matrix(i, j) = static_cast<unsigned long>(vertex_multiplicity(map, regions[x.region], y.vertex));
            else if (x.kind == GeneratorKind::DoublePoint && y.kind == GeneratorKind::WhiteRegion)
                data.matrix(i, j) = static_cast<unsigned long>(vertex_multiplicity(map, regions[y.region], x.vertex));
        }
    }
    return data;
}

void validate_seifert(const SeifertData& data) {
    const IntMatrix& a = data.matrix;
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        if (a(i, i) != 1) throw InvariantViolation("Seifert matrix has a diagonal entry different from 1");
    const IntMatrix form = a - a.transpose();
    if (!unimodular_check(form))
        throw InvariantViolation("intersection form A - A^T has determinant " + integer_determinant(form).get_str() +
                                 ", expected ±1");
}

}  // namespace divknot
