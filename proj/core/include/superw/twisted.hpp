#pragma once

#include "superw/polymatrix.hpp"
#include "superw/yangian.hpp"

namespace superw {

/// Reflection-symmetry bookkeeping shared by the S and K families:
/// F^{ab}_(s) = sigma * F^{bar b, bar a}_(s) with
/// sigma = (-1)^s (-1)^{[a]([b]+1)} theta_a theta_b.
namespace twist_sym {
int sigma(int level, int a, int b, const ThetaData& th, const GradedDim& d);
bool is_canonical(int a, int b, const ThetaData& th);
/// Zero / canonical symbol / signed partner symbol, truncated above maxlevel.
Poly reduce(Family fam, int level, int a, int b, const ThetaData& th, const GradedDim& d,
            int maxlevel);
}  // namespace twist_sym

/// Concrete twisted generators S^{ab}_(n) = sum_{c,q} (-1)^q
/// (-1)^{[c]([b]+1)} theta_c theta_b T^{ac}_(n-q) T^{bar b bar c}_(q),
/// built over the truncated Yangian (nonzero up to level 2p).
class SGenerators {
public:
    SGenerators(const YangianTable& yt, const ThetaData& th);

    const GradedDim& dims() const { return gd_; }
    const ThetaData& theta() const { return th_; }
    int p() const { return p_; }
    const Poly& at(int n, int a, int b) const;

    /// S^{ab}_(n) = (-1)^n (-1)^{[a]([b]+1)} theta_a theta_b S^{bar b bar a}_(n).
    bool symmetry_ok() const;

private:
    GradedDim gd_;
    ThetaData th_;
    int p_;
    std::map<std::tuple<int, int, int>, Poly> s_;
};

/// The reflection operator of the classical bracket in this codebase's
/// conventions: entries Q_{(bar b, b), (c, bar c)} = theta_b theta_c on the
/// graded tensor square. It is the unsigned companion of P^{t_1}; the mode
/// relation below determines it uniquely.
PolyMatrix classical_q_matrix(const ThetaData& th);

/// Column parity twist: entry (a,b) scaled by (-1)^{[b]}. The classical
/// matrix identities hold for matrices of components in this convention.
PolyMatrix column_twist(const PolyMatrix& x, const GradedDim& d);

/// Right-hand side of the classical reflection mode relation at modes (q,r):
///   sum_{s=0}^{q-1} [ P F1(s) F2(o) - F2(o) F1(s) P
///                     + (-1)^{q+s} (F1(s) Q F2(o) - F2(o) Q F1(s)) ],
/// o = q+r-1-s, where F1/F2 are the slot-embedded, column-twisted component
/// matrices indexed by mode level (index range gives the truncation).
PolyMatrix reflection_mode_rhs(const std::vector<PolyMatrix>& f1,
                               const std::vector<PolyMatrix>& f2, const PolyMatrix& pm,
                               const PolyMatrix& qm, int q, int r);

/// Extraction sign tying matrix entries back to component brackets:
/// {X^{ab}, X^{cd}} = sign * C_{(a,c),(b,d)} for C = pb-matrix of twisted
/// slot embeddings.
int reflection_extract_sign(const GradedDim& d, int b, int c, int dd);

/// Truncated twisted bracket table on canonical S components (levels 1..p),
/// populated from the reflection mode relation with symbolic S matrices.
/// Both orientations are extracted and checked for consistency.
BracketTable twisted_symbolic_table(const GradedDim& d, const ThetaData& th, int p);

}  // namespace superw
