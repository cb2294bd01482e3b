#pragma once

#include "superw/clebsch.hpp"
#include "superw/poisson.hpp"

namespace superw {

/// Gauge parameters of the soldering recursion. Every lambda_{j,m}^{ab} is
/// linear in the free parameters lambda~_k (one per level), with coefficients
/// polynomial in the highest-weight generators W.
class SolderState {
public:
    SolderState(const GradedDim& d, int p, const ClebschTable& cg);

    const GradedDim& dims() const { return gd_; }
    int p() const { return p_; }
    const ClebschTable& clebsch() const { return *cg_; }

    GenSymbol lam(int k, int a, int b) const { return GenSymbol(Family::Lambda, k, a, b, gd_); }
    GenSymbol w(int j, int a, int b) const { return GenSymbol(Family::W, j, a, b, gd_); }

    const Poly& lambda(int j, int m, int a, int b) const;
    std::size_t free_parameter_count() const { return static_cast<std::size_t>(gd_.dim()) * gd_.dim() * p_; }

private:
    GradedDim gd_;
    int p_;
    const ClebschTable* cg_;
    std::map<std::tuple<int, int, int, int>, Poly> lam_;

    friend SolderState solve_lambda(const GradedDim& d, int p, const ClebschTable& cg);
};

/// Runs the soldering recursion for W_p(M|N).
SolderState solve_lambda(const GradedDim& d, int p, const ClebschTable& cg);

/// Reads the W brackets off the gauge variation of W_j as lambda~
/// coefficients and returns the table in the hat-normalized basis
/// (W-hat^{ab} = (-1)^{[a]} W^{ab}). Cross-orientation extraction is
/// verified against graded antisymmetry.
BracketTable solder_brackets(const SolderState& st);

/// Gauge variation delta_lambda W_j^{ab} (highest-weight row of the recursion).
Poly delta_w(const SolderState& st, int j, int a, int b);

/// Relabels an unhatted W-table into the hat basis.
BracketTable hat_basis(const BracketTable& t, const GradedDim& d);

}  // namespace superw
