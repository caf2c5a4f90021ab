// Genus-defect certificates: sublattices of the first homology on which the
// Seifert form has a unit Alexander determinant, and the resulting two-sided
// bounds on the topological four-genus.
#ifndef DIVKNOT_DEFECT_HPP
#define DIVKNOT_DEFECT_HPP

#include "divknot/divide.hpp"
#include "divknot/exact_linalg.hpp"
#include "divknot/invariants.hpp"
#include "divknot/seifert.hpp"

#include <optional>
#include <string>
#include <vector>

namespace divknot {

/// Rows are coordinate vectors in the Ishikawa basis.
struct SubgroupBasis {
    IntMatrix vectors;

    Eigen::Index rank() const { return vectors.rows(); }
    Eigen::Index ambient_dimension() const { return vectors.cols(); }
};

struct DefectCertificate {
    std::string source;  // "snail_subgroup", "search", ...
    SubgroupBasis subgroup;
    IntMatrix restricted;  // B = P A P^T
    Unit unit;             // det(tB - B^T) = sign * t^exponent
    long upper_bound = 0;  // genus - rank / 2
};

/// B = P A P^T where P stacks the rows of V.
IntMatrix restrict_form(const IntMatrix& seifert, const SubgroupBasis& subgroup);

/// Certificate when det(tB - B^T) is a unit, nothing otherwise.
std::optional<DefectCertificate> verify_alex_trivial(const IntMatrix& seifert, const SubgroupBasis& subgroup,
                                                     long genus);

/// Re-checks a certificate from scratch against the Seifert matrix.
bool revalidate(const IntMatrix& seifert, long genus, const DefectCertificate& certificate);

/// The sublattice spanned by a_i = α_{i+1} - γ_i and b_i = γ_{i+1}, i < n, in
/// coordinates (α_1 .. α_n, γ_1 .. γ_n), regions and double points counted
/// from the inside out. Rows are a_1 .. a_{n-1}, b_1 .. b_{n-1}.
SubgroupBasis snail_subgroup(int n);

/// Positions in the Ishikawa basis of α_1 .. α_n followed by γ_1 .. γ_n for a
/// snail diagram (innermost region black or not).
std::vector<Eigen::Index> snail_frame(const DivideDiagram& diagram, const SeifertData& data, int n);

/// snail_subgroup(n) rewritten in Ishikawa-basis coordinates.
SubgroupBasis snail_subgroup_in_basis(const DivideDiagram& diagram, const SeifertData& data, int n);

struct SearchConfig {
    int coeff_bound = 1;
    std::size_t max_candidates = 100000;
    double time_budget_seconds = 60.0;
    /// Stop as soon as a certificate reaches this bound (usually the signature bound).
    long target_upper_bound = 0;
};

struct SearchStats {
    std::size_t candidates = 0;
    std::size_t isotropic = 0;
    std::size_t nodes = 0;
    bool truncated = false;  // candidate enumeration hit max_candidates
    bool timed_out = false;
};

/// Isotropic-vector search for an Alexander-trivial sublattice. Builds pairs
/// (x_i, y_i) with S(x_i, x_j) = 0 for all i, j and y_j orthogonal in both
/// orders to every earlier x_i, so that both mixed blocks of tB - B^T are
/// triangular with unit diagonal. The best certificate is re-verified
/// exactly; the fallback is the empty sublattice.
DefectCertificate search_defect(const IntMatrix& seifert, long genus, const SearchConfig& config,
                                SearchStats* stats = nullptr);

struct BoundsReport {
    InvariantSet invariants;
    long g4top_lower = 0;
    long g4top_upper = 0;
    std::vector<DefectCertificate> certificates;
    bool exact = false;
};

/// Lower bound |σ|/2, upper bound the best of the genus, the supplied
/// sublattice (if any) and the search. The search is skipped once the
/// interval has collapsed.
BoundsReport g4_bounds(const SeifertData& data, const SearchConfig& config,
                       const std::optional<SubgroupBasis>& known_subgroup = std::nullopt);

}  // namespace divknot

#endif  // DIVKNOT_DEFECT_HPP
