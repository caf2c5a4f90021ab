// Classical invariants of a divide knot computed from its Seifert matrix.
#ifndef DIVKNOT_INVARIANTS_HPP
#define DIVKNOT_INVARIANTS_HPP

#include "divknot/laurent.hpp"
#include "divknot/seifert.hpp"

namespace divknot {

struct InvariantSet {
    long genus = 0;
    long smooth_g4 = 0;
    Laurent alexander;
    BigInt determinant;
    int signature = 0;

    friend bool operator==(const InvariantSet&, const InvariantSet&) = default;
};

/// Half the rank of the Seifert form; throws on odd rank.
long genus(const IntMatrix& seifert);
inline long genus(const SeifertData& sd) { return genus(sd.matrix); }

/// Canonical representative of det(tA - A^T).
Laurent alexander(const IntMatrix& seifert);
inline Laurent alexander(const SeifertData& sd) { return alexander(sd.matrix); }

/// |Δ(-1)|.
BigInt knot_determinant(const IntMatrix& seifert);
inline BigInt knot_determinant(const SeifertData& sd) { return knot_determinant(sd.matrix); }

/// Signature of A + A^T.
int signature_of_knot(const IntMatrix& seifert);
inline int signature_of_knot(const SeifertData& sd) { return signature_of_knot(sd.matrix); }

/// Smooth four-genus of a divide knot. Divide knots are strongly quasipositive,
/// so it equals the Seifert genus; the value is reported, not derived.
inline long smooth_g4(const SeifertData& sd) { return genus(sd); }

InvariantSet compute_invariants(const SeifertData& sd);

}  // namespace divknot

#endif  // DIVKNOT_INVARIANTS_HPP
