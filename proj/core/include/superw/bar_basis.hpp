#pragma once

#include "superw/poisson.hpp"

namespace superw {

/// One of the two polynomial bases { sign W-bar_j } of W_p(M|N), built over a
/// hat-basis W table by the bracket recursion with W-bar_1. Coefficients
/// alpha are indexed by the composition (s_1..s_n) of each product chain.
class BarBasis {
public:
    /// sign = +1 or -1. Builds W-bar_j for j = 0..p-1.
    BarBasis(int sign, const BracketTable& wtable, const GradedDim& d, int p);

    int sign() const { return sign_; }
    int p() const { return p_; }
    const GradedDim& dims() const { return gd_; }

    const Poly& at(int j, int a, int b) const;
    /// Trace combination W-bar_j^0 = sum_a W-bar_j^{aa}.
    Poly trace_gen(int j) const;

    /// alpha^{n,j}_{s} where s is the composition; throws if absent.
    const Rat& alpha(int j, const std::vector<int>& comp) const;

    /// Residual of the recursion at step j -> j+1 for the candidate next
    /// polynomial X (empty X checks whether W-bar_{j+1} = 0 is consistent).
    Poly recursion_residual(int j, int a, int b, int c, int dd,
                            const std::map<std::pair<int, int>, Poly>& next) const;

    /// Checks that W-bar_p = 0 closes the recursion (minus basis).
    bool minus_terminates() const;

private:
    int sign_;
    const BracketTable* table_;
    GradedDim gd_;
    int p_;
    std::map<std::tuple<int, int, int>, Poly> bars_;                 // (j,a,b)
    std::map<int, std::map<std::vector<int>, Rat>> alpha_;           // j -> comp -> value

    void build();
    Poly chain(int a, const std::vector<int>& comp, int b) const;
};

/// Verifies the closed-form change of basis between the plus and minus bases
/// for all j = 0..p-1; returns per-(j,a,b) residuals that are nonzero.
std::vector<std::tuple<int, int, int>> change_bar_basis(const BarBasis& plus, const BarBasis& minus);

}  // namespace superw
