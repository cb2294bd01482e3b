#pragma once

#include "superw/supermatrix.hpp"

namespace superw {

/// Principal sl(2) of gl(p): [e0, e±] = ±e±, [e+, e-] = e0.
struct Sl2Triple {
    int p = 0;
    SuperMatrix eplus, eminus, ezero;
};

Sl2Triple build_principal_sl2(int p);

/// Spin multiplets M_{jm} of gl(p) under the principal sl(2), normalized by
/// M_{jj} = (2 e+)^j and lowered with ad e-. All adjoint-action identities
/// are verified exactly at build time.
class MjmBasis {
public:
    explicit MjmBasis(int p);

    int p() const { return p_; }
    const SuperMatrix& at(int j, int m) const;
    const Sl2Triple& sl2() const { return sl2_; }

private:
    int p_;
    Sl2Triple sl2_;
    std::vector<std::vector<SuperMatrix>> m_;  // m_[j][m+j]
};

}  // namespace superw
