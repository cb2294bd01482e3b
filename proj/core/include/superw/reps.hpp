#pragma once

#include <optional>

#include "superw/linalg.hpp"
#include "superw/supermatrix.hpp"

namespace superw {

/// Finite-dimensional gl(M|N) representation: matrices rho(E_ab) over a
/// parity-labelled carrier space.
struct GlRep {
    GradedDim alg;
    Parities carrier;
    std::map<std::pair<int, int>, SuperMatrix> rho;

    const SuperMatrix& at(int a, int b) const { return rho.at({a, b}); }
    /// [rho(E_ab), rho(E_cd)} = d_cb rho(E_ad) - (-1)^{([a]+[b])([c]+[d])} d_ad rho(E_cb).
    bool verify() const;
};

GlRep fundamental_rep(const GradedDim& d);

/// Assignment of operators to the Yangian modes T^{ab}_(r): T_(0) is the
/// identity, levels above the cutoff vanish.
struct RepAssignment {
    GradedDim alg;
    Parities carrier;
    int cutoff = 0;
    std::map<std::tuple<int, int, int>, SuperMatrix> op;  // (a,b,r), r >= 1

    SuperMatrix at(int a, int b, int r) const;
    bool level_nonzero(int r) const;
};

RepAssignment evaluation_rep(const GlRep& rep);

struct RelationReport {
    std::size_t checks = 0;
    std::vector<std::tuple<int, int, int, int, int, int>> violations;  // (a,b,m,c,d,n)
    bool pass() const { return violations.empty(); }
};

/// Exact operator check of the defining mode relations up to level_bound.
RelationReport check_defining_relations(const RepAssignment& ra, int level_bound);

/// Graded tensor product of evaluation-type assignments via the coproduct
/// chain formula; cutoff is the number of factors.
RepAssignment tensor_eval(const std::vector<RepAssignment>& reps);

struct HighestWeightData {
    int kernel_dim = 0;
    bool unique = false;         // one-dimensional joint kernel
    bool diagonal_ok = false;    // v+ is an exact eigenvector of every T^{aa}_(n)
    std::vector<Rat> vplus;
    std::map<std::pair<int, int>, Rat> lambda;  // (a, n) -> lambda_a^{(n)}
};

/// Joint kernel of the raising operators T^{ab}_(n), a < b (standard Borel).
HighestWeightData highest_weight(const RepAssignment& ra);

/// Factored highest-weight input: for each index a the root multiset of the
/// numerator polynomial of lambda_a(u) (written over u^{deg}).
struct DrinfeldInput {
    std::vector<std::vector<std::pair<Rat, int>>> numerators;  // size M+N
};

struct DrinfeldResult {
    bool accepted = false;
    std::string reason;
    /// Witness roots per position a (monic P_a for a != M, the pair
    /// (P~_M, P_M) stored at position M).
    std::map<int, std::vector<Rat>> witness;
    std::vector<Rat> witness_tilde;  // P~_M numerator roots
};

DrinfeldResult drinfeld_check(const DrinfeldInput& in, const GradedDim& d);

}  // namespace superw
