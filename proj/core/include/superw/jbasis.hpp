#pragma once

#include "superw/bracket_table.hpp"
#include "superw/clebsch.hpp"
#include "superw/poisson.hpp"

namespace superw {

/// Linear bracket table of gl(Mp|Np) in the spin-multiplet basis J_{jm}^{ab},
/// verified at construction against graded matrix commutators of
/// M_{jm} (x) E_ab in the fundamental representation.
class JBasisStructure {
public:
    JBasisStructure(const GradedDim& d, int p);

    const GradedDim& dims() const { return gd_; }
    int p() const { return p_; }
    const ClebschTable& clebsch() const { return cg_; }
    const BracketTable& table() const { return table_; }

    GenSymbol sym(int j, int m, int a, int b) const {
        return GenSymbol(Family::J, j, a, b, gd_, m);
    }
    /// Fundamental-representation matrix M_{jm} (x) E_ab.
    SuperMatrix fundamental(int j, int m, int a, int b) const;

    /// str(M_{jm}^{ab} M_{ln}^{cd}) = (-1)^{[a]} d^{ad} d^{cb} (-1)^m d_{jl} d_{m+n,0} eta_j.
    bool verify_supertrace_pairing() const;

private:
    GradedDim gd_;
    int p_;
    ClebschTable cg_;
    BracketTable table_;
    void verify_fundamental() const;
};

/// tau(J_{jm}^{ab}) = (-1)^{j+1} (-1)^{[a]([b]+1)} theta_a theta_b J_{jm}^{bar b, bar a}.
std::pair<int, GenSymbol> tau_J(const GenSymbol& j, const ThetaData& th, const GradedDim& d);
Poly tau_apply(const Poly& p, const ThetaData& th, const GradedDim& d);

struct TauReport {
    bool involution_ok = true;
    std::size_t pairs_checked = 0;
    std::vector<std::pair<GenSymbol, GenSymbol>> bracket_violations;
    bool pass() const { return involution_ok && bracket_violations.empty(); }
};

/// Checks tau^2 = id and {tau x, tau y} = tau{x, y} on all generator pairs.
TauReport check_tau_on_J(const JBasisStructure& st, const ThetaData& th);

struct FoldReport {
    int fixed_dim = 0;
    int fixed_dim_even = 0;
    int fixed_dim_odd = 0;
    int expected_dim = 0;       // dim osp(Mp|2np) = q(q-1)/2 + r(2r+1) + 2qr
    int expected_dim_even = 0;
    int expected_dim_odd = 0;
    // dim osp(2np|Mp): the parity-swapped count. For even p the fixed space
    // of this tau has exactly this dimension (the two coincide when M = 2n).
    int expected_dim_swapped = 0;
    int expected_dim_swapped_even = 0;
    int expected_dim_swapped_odd = 0;
    bool symmetry_ok = true;    // K_{jm}^{ab} = (-1)^{j+1}(-1)^{[a]([b]+1)} th_a th_b K_{jm}^{bar b bar a}
    bool closure_ok = true;     // {K,K} lands in Ker(1-tau)
    bool formula_ok = true;     // {K,K} matches the folded closed form term by term
    bool dims_match_osp() const {
        return fixed_dim == expected_dim && fixed_dim_even == expected_dim_even &&
               fixed_dim_odd == expected_dim_odd;
    }
    bool dims_match_swapped() const {
        return fixed_dim == expected_dim_swapped && fixed_dim_even == expected_dim_swapped_even &&
               fixed_dim_odd == expected_dim_swapped_odd;
    }
    bool pass() const { return dims_match_osp() && symmetry_ok && closure_ok && formula_ok; }
};

/// Folds gl(Mp|2np) along tau: K = J + tau(J). Verifies the fixed-space
/// dimension against the orthosymplectic count and the K-bracket closed form.
FoldReport fold_fixed_subalgebra(const JBasisStructure& st, const ThetaData& th);

}  // namespace superw
