#include "superw/sl2.hpp"

namespace superw {

Sl2Triple build_principal_sl2(int p) {
    if (p < 1) throw ConfigError("build_principal_sl2: p >= 1 required");
    Parities sp = ungraded_space(p);
    Sl2Triple t;
    t.p = p;
    t.eplus = SuperMatrix(sp);
    t.eminus = SuperMatrix(sp);
    t.ezero = SuperMatrix(sp);
    for (int i = 1; i < p; ++i) {
        t.eminus.set(i + 1, i, Rat(1));
        t.eplus.set(i, i + 1, Rat(static_cast<long>(i) * (p - i), 2));
    }
    for (int i = 1; i <= p; ++i) t.ezero.set(i, i, Rat(p + 1 - 2 * i, 2));

    if (!(commutator(t.ezero, t.eplus) - t.eplus).is_zero() ||
        !(commutator(t.ezero, t.eminus) + t.eminus).is_zero() ||
        !(commutator(t.eplus, t.eminus) - t.ezero).is_zero())
        throw Error("build_principal_sl2: defining relations failed");
    return t;
}

MjmBasis::MjmBasis(int p) : p_(p), sl2_(build_principal_sl2(p)) {
    m_.resize(p);
    SuperMatrix two_eplus = Rat(2) * sl2_.eplus;
    for (int j = 0; j < p; ++j) {
        m_[j].resize(2 * j + 1);
        SuperMatrix top = SuperMatrix::identity(sl2_.eplus.space());
        for (int k = 0; k < j; ++k) top = top * two_eplus;
        m_[j][2 * j] = top;  // M_{jj}
        for (int m = j; m > -j; --m) m_[j][m - 1 + j] = commutator(sl2_.eminus, m_[j][m + j]);
    }
    // exact verification of the three adjoint-action identities
    for (int j = 0; j < p; ++j)
        for (int m = -j; m <= j; ++m) {
            const SuperMatrix& x = at(j, m);
            if (!(commutator(sl2_.ezero, x) - Rat(m) * x).is_zero())
                throw Error("MjmBasis: [e0, M_jm] != m M_jm");
            SuperMatrix up = commutator(sl2_.eplus, x);
            if (m == j) {
                if (!up.is_zero()) throw Error("MjmBasis: e+ does not annihilate M_jj");
            } else {
                Rat c(static_cast<long>(j) * (j + 1) - static_cast<long>(m) * (m + 1), 2);
                if (!(up - c * at(j, m + 1)).is_zero())
                    throw Error("MjmBasis: [e+, M_jm] normalization failed");
            }
            if (m == -j && !commutator(sl2_.eminus, x).is_zero())
                throw Error("MjmBasis: e- does not annihilate M_{j,-j}");
        }
}

const SuperMatrix& MjmBasis::at(int j, int m) const {
    if (j < 0 || j >= p_ || m < -j || m > j) throw Error("MjmBasis: (j,m) out of range");
    return m_[j][m + j];
}

}  // namespace superw
