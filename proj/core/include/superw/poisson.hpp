#pragma once

#include <array>

#include "superw/bracket_table.hpp"

namespace superw {

/// Graded Poisson bracket of polynomials, extended from the generator table
/// by bilinearity and the graded Leibniz rule. Constants bracket to zero.
Poly poisson_bracket(const Poly& f, const Poly& g, const BracketTable& t);

struct JacobiViolation {
    GenSymbol x, y, z;
    Poly residual;
};

struct JacobiReport {
    std::size_t triples_checked = 0;
    std::vector<JacobiViolation> violations;
    bool pass() const { return violations.empty(); }
};

/// Checks (-1)^{[x][z]}{x,{y,z}} + graded cyclic permutations = 0 on every
/// generator multiset {x<=y<=z} of the table domain (or a given selection).
JacobiReport check_jacobi(const BracketTable& t);
JacobiReport check_jacobi(const BracketTable& t, const std::vector<std::array<GenSymbol, 3>>& triples);

}  // namespace superw
