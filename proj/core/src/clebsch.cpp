#include "superw/clebsch.hpp"

namespace superw {

ClebschTable::ClebschTable(int p) : p_(p), mjm_(p) {
    // eta_j from the trace pairing, plus a full orthogonality sweep
    eta_.resize(p);
    for (int j = 0; j < p; ++j) {
        Rat t = trace(mjm_.at(j, -j) * mjm_.at(j, j));
        eta_[j] = (j % 2) ? -t : t;
        if (eta_[j].is_zero()) throw Error("ClebschTable: vanishing eta_" + std::to_string(j));
    }
    for (int j = 0; j < p; ++j)
        for (int m = -j; m <= j; ++m)
            for (int l = 0; l < p; ++l)
                for (int n = -l; n <= l; ++n) {
                    Rat t = trace(mjm_.at(j, m) * mjm_.at(l, n));
                    Rat expect = (j == l && m + n == 0) ? ((m % 2) ? -eta_[j] : eta_[j]) : Rat(0);
                    if (t != expect) throw Error("ClebschTable: trace pairing violated");
                }

    for (int j = 0; j < p; ++j)
        for (int m = -j; m <= j; ++m)
            for (int k = 0; k < p; ++k)
                for (int l = -k; l <= k; ++l) {
                    SuperMatrix prod = mjm_.at(j, m) * mjm_.at(k, l);
                    int s = m + l;
                    SuperMatrix rebuilt(prod.space());
                    for (int r = std::abs(s); r < p; ++r) {
                        Rat coeff = Rat(s % 2 ? -1 : 1) * trace(prod * mjm_.at(r, -s)) / eta_[r];
                        if (coeff.is_zero()) continue;
                        if (r < std::abs(j - k) || r > j + k)
                            throw Error("ClebschTable: coefficient outside |j-k|..j+k");
                        c_[{j, m, k, l, r, s}] = coeff;
                        rebuilt += coeff * mjm_.at(r, s);
                    }
                    if (!(rebuilt - prod).is_zero())
                        throw Error("ClebschTable: product law reconstruction failed");
                }
}

const Rat& ClebschTable::cg(int j, int m, int k, int l, int r, int s) const {
    static const Rat zero(0);
    auto it = c_.find({j, m, k, l, r, s});
    return it == c_.end() ? zero : it->second;
}

}  // namespace superw
