#pragma once

#include "superw/bar_basis.hpp"
#include "superw/poisson.hpp"
#include "superw/supermatrix.hpp"

namespace superw {

/// Classical super-Yangian bracket of modes, truncated at level p:
/// {T_(m), T_(n)} = linear term at level m+n-1 plus the min(m,n)-1 quadratic
/// terms, with T_(k) = 0 for k > p. T_(0) is the Kronecker constant, never a
/// generator.
class YangianTable {
public:
    YangianTable(const GradedDim& d, int p);

    const GradedDim& dims() const { return gd_; }
    int p() const { return p_; }
    const BracketTable& table() const { return table_; }

    GenSymbol t(int level, int a, int b) const {
        return GenSymbol(Family::T, level, a, b, gd_);
    }
    /// The defining right-hand side for arbitrary (possibly >p) mode levels;
    /// truncate=false keeps all levels (used by the ideal report).
    Poly rhs(int m, int a, int b, int n, int c, int d, bool truncate) const;

private:
    GradedDim gd_;
    int p_;
    BracketTable table_;
};

struct IdealReport {
    std::size_t pairs_checked = 0;
    /// Pairs whose bracket has a monomial with every factor at level <= p.
    std::vector<std::pair<GenSymbol, GenSymbol>> violations;
    bool pass() const { return violations.empty(); }
};

/// For every pair with one mode level in (p, 2p], checks term by term that
/// each monomial of the untruncated bracket has a factor of level > p.
IdealReport verify_poisson_ideal(const GradedDim& d, int p);

struct IsoReport {
    std::size_t pairs_checked = 0;
    std::vector<std::tuple<GenSymbol, GenSymbol, Poly>> residuals;
    bool pass() const { return residuals.empty(); }
};

/// The main identification T_(n) = minus-W-bar_{n-1}: every W-algebra bracket
/// of the bar generators must equal the truncated Yangian right-hand side as
/// a polynomial identity in the W generators.
IsoReport iso_check(const YangianTable& yt, const BracketTable& wtable, const BarBasis& minus);

/// tau(T_(m)) = (-1)^m T^t_(m); checks that it preserves the truncated table.
struct TauYangianReport {
    bool involution_ok = true;
    std::size_t pairs_checked = 0;
    std::vector<std::pair<GenSymbol, GenSymbol>> bracket_violations;
    bool pass() const { return involution_ok && bracket_violations.empty(); }
};
TauYangianReport check_tau_on_yangian(const YangianTable& yt, const ThetaData& th);

/// Symbol image under tau: (-1)^m applied to the transposed entry.
std::pair<int, GenSymbol> tau_T(const GenSymbol& t, const ThetaData& th, const GradedDim& d);

}  // namespace superw
