#pragma once

#include "superw/jbasis.hpp"
#include "superw/linalg.hpp"
#include "superw/polymatrix.hpp"

namespace superw {

/// Second-class constraints in supertrace-dual coordinates: one per weight
/// slot m > -j (the mirror image of the matrix-side m < j set, same count),
/// in canonical (j,m,a,b) order.
struct ConstraintSet {
    std::vector<GenSymbol> phi;  // the coordinate symbol of each constraint
    explicit ConstraintSet(const JBasisStructure& st);
};

/// Applies the constraints after bracketing: coordinates at weight m > -j
/// become their gauge-fixed values, lowest weights become the W generators.
/// Idempotent by construction (the image has no J symbols).
Poly apply_constraints(const Poly& p, const JBasisStructure& st);

struct DiracData {
    ConstraintSet constraints;
    PolyMatrix delta;       // {phi_a, phi_b} with constraints applied
    RatMatrix delta0;       // constant part, invertible
    PolyMatrix delta_hat;   // delta0^{-1} delta1, nilpotent
    int nilpotency_order;   // smallest r with delta_hat^r = 0
    PolyMatrix delta_inv;   // terminating Neumann series
};

/// Builds and inverts the constraint matrix; verifies the inverse two-sided.
DiracData build_dirac_data(const JBasisStructure& st);

/// Full Dirac-bracket table on the highest-weight generators, returned in
/// the hat basis (same convention as solder_brackets).
BracketTable dirac_brackets(const JBasisStructure& st);

}  // namespace superw
