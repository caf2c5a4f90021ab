#include "divknot/invariants.hpp"

#include "divknot/errors.hpp"
#include "divknot/exact_linalg.hpp"

namespace divknot {

long genus(const IntMatrix& seifert) {
    if (seifert.rows() % 2 != 0)
        throw InvariantViolation("Seifert form of odd rank " + std::to_string(seifert.rows()) + " does not belong to a knot");
    return static_cast<long>(seifert.rows() / 2);
}

Laurent alexander(const IntMatrix& seifert) { return normalize_alexander(laurent_det(alexander_matrix(seifert))); }

BigInt knot_determinant(const IntMatrix& seifert) { return abs(alexander(seifert).evaluate(BigInt(-1))); }

int signature_of_knot(const IntMatrix& seifert) { return signature_exact(IntMatrix(seifert + seifert.transpose())); }

InvariantSet compute_invariants(const SeifertData& sd) {
    InvariantSet inv;
    inv.genus = genus(sd);
    inv.smooth_g4 = smooth_g4(sd);
    inv.alexander = alexander(sd);
    inv.determinant = abs(inv.alexander.evaluate(BigInt(-1)));
    inv.signature = signature_of_knot(sd);
    return inv;
}

}  // namespace divknot
