#pragma once

#include <tuple>

#include "superw/sl2.hpp"

namespace superw {

/// Rational structure constants of the M_{jm} product law,
/// <j,m;k,l|r,s> = (-1)^s / eta_r * tr(M_{jm} M_{kl} M_{r,-s}),
/// together with the pairing normalizations eta_j defined by
/// tr(M_{jm} M_{l,n}) = (-1)^m delta_{jl} delta_{m+n,0} eta_j.
class ClebschTable {
public:
    explicit ClebschTable(int p);

    int p() const { return p_; }
    const Rat& eta(int j) const { return eta_.at(j); }
    /// <j,m;k,l|r,s>; zero for any out-of-range or non-contributing labels.
    const Rat& cg(int j, int m, int k, int l, int r, int s) const;
    const MjmBasis& mjm() const { return mjm_; }

    const std::map<std::tuple<int, int, int, int, int, int>, Rat>& entries() const { return c_; }

private:
    int p_;
    MjmBasis mjm_;
    std::vector<Rat> eta_;
    std::map<std::tuple<int, int, int, int, int, int>, Rat> c_;
};

}  // namespace superw
