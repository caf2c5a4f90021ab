// Ishikawa basis of the fibre surface of a divide knot and its Seifert matrix.
#ifndef DIVKNOT_SEIFERT_HPP
#define DIVKNOT_SEIFERT_HPP

#include "divknot/divide.hpp"
#include "divknot/scalar.hpp"

#include <string>
#include <vector>

namespace divknot {

enum class GeneratorKind { BlackRegion, WhiteRegion, DoublePoint };

struct Generator {
    GeneratorKind kind = GeneratorKind::DoublePoint;
    std::size_t region = 0;  // region id, for region generators
    int vertex = -1;         // map vertex, for double-point generators
    std::string label;       // region id or vertex name
    std::size_t ordinal = 0;
};

struct SeifertData {
    std::vector<Generator> basis;
    IntMatrix matrix;  // matrix(i, j) = S(basis[i], basis[j])

    std::size_t size() const { return basis.size(); }
};

/// One generator per inner region (by region id), then one per double point
/// (by first visit along the arc).
std::vector<Generator> ishikawa_basis(const DivideDiagram& diagram);

/// Number of arc edges shared by the boundaries of two regions.
std::size_t shared_edges(const CombinatorialMap& map, const Region& a, const Region& b);

/// How many corners of the region sit at the given vertex (0, 1 or 2 for a double point).
std::size_t vertex_multiplicity(const CombinatorialMap& map, const Region& region, int vertex);

/// Multiplicity of the vertex in every region, indexed by region id.
std::vector<std::size_t> incidences(const CombinatorialMap& map, const std::vector<Region>& regions, int vertex);

SeifertData seifert_matrix(const DivideDiagram& diagram);

/// Throws InvariantViolation unless A has unit diagonal and det(A - A^T) = ±1.
void validate_seifert(const SeifertData& data);

}  // namespace divknot

#endif  // DIVKNOT_SEIFERT_HPP
