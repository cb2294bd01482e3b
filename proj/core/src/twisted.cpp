#include "superw/twisted.hpp"

namespace superw {

namespace twist_sym {

int sigma(int level, int a, int b, const ThetaData& th, const GradedDim& d) {
    int s = level % 2 ? -1 : 1;
    if ((d.parity(a) * (d.parity(b) + 1)) % 2) s = -s;
    return s * th.theta(a) * th.theta(b);
}

bool is_canonical(int a, int b, const ThetaData& th) {
    return std::make_pair(a, b) <= std::make_pair(th.bar(b), th.bar(a));
}

Poly reduce(Family fam, int level, int a, int b, const ThetaData& th, const GradedDim& d,
            int maxlevel) {
    if (level > maxlevel) return Poly();
    int pa = th.bar(b), pb = th.bar(a);
    if (std::make_pair(a, b) == std::make_pair(pa, pb)) {
        // self-paired component: vanishes unless sigma = +1
        if (sigma(level, a, b, th, d) < 0) return Poly();
        return Poly(GenSymbol(fam, level, a, b, d));
    }
    if (std::make_pair(a, b) < std::make_pair(pa, pb)) return Poly(GenSymbol(fam, level, a, b, d));
    return Poly(GenSymbol(fam, level, pa, pb, d), Rat(sigma(level, a, b, th, d)));
}

}  // namespace twist_sym

SGenerators::SGenerators(const YangianTable& yt, const ThetaData& th)
    : gd_(yt.dims()), th_(th), p_(yt.p()) {
    if (gd_.even != th.M || gd_.odd != 2 * th.n)
        throw ConfigError("SGenerators: need Y(M|2n) with matching theta data");
    int n = gd_.dim();
    auto tpoly = [&](int lvl, int a, int b) -> Poly {
        if (lvl == 0) return a == b ? Poly(Rat(1)) : Poly();
        if (lvl > p_) return Poly();
        return Poly(yt.t(lvl, a, b));
    };
    for (int lvl = 0; lvl <= 2 * p_; ++lvl)
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b) {
                Poly acc;
                for (int c = 1; c <= n; ++c) {
                    int base = (gd_.parity(c) * (gd_.parity(b) + 1)) % 2 ? -1 : 1;
                    base *= th.theta(c) * th.theta(b);
                    for (int q = 0; q <= lvl; ++q) {
                        int sgn = (q % 2 ? -base : base);
                        Poly term = tpoly(lvl - q, a, c) * tpoly(q, th.bar(b), th.bar(c));
                        acc += Rat(sgn) * term;
                    }
                }
                s_[{lvl, a, b}] = acc;
            }
}

const Poly& SGenerators::at(int n, int a, int b) const {
    static const Poly zero;
    if (n > 2 * p_) return zero;
    return s_.at({n, a, b});
}

bool SGenerators::symmetry_ok() const {
    int n = gd_.dim();
    for (int lvl = 0; lvl <= 2 * p_; ++lvl)
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b) {
                Rat sg(twist_sym::sigma(lvl, a, b, th_, gd_));
                if (!(at(lvl, a, b) == sg * at(lvl, th_.bar(b), th_.bar(a)))) return false;
            }
    return true;
}

PolyMatrix classical_q_matrix(const ThetaData& th) {
    GradedDim d = th.dims();
    int n = d.dim();
    Parities comp = tensor_space(parities_of(d), parities_of(d));
    SuperMatrix q(comp);
    for (int b = 1; b <= n; ++b)
        for (int c = 1; c <= n; ++c)
            q.set((th.bar(b) - 1) * n + b, (c - 1) * n + th.bar(c),
                  Rat(th.theta(b) * th.theta(c)));
    return PolyMatrix::lift(q);
}

PolyMatrix column_twist(const PolyMatrix& x, const GradedDim& d) {
    int n = d.dim();
    if (x.dim() != n) throw Error("column_twist: size mismatch");
    PolyMatrix r(n);
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) r.at(a, b) = d.parity(b) ? -x.at(a, b) : x.at(a, b);
    return r;
}

PolyMatrix reflection_mode_rhs(const std::vector<PolyMatrix>& f1,
                               const std::vector<PolyMatrix>& f2, const PolyMatrix& pm,
                               const PolyMatrix& qm, int q, int r) {
    PolyMatrix rhs(pm.dim());
    int top = static_cast<int>(f1.size()) - 1;
    for (int s = 0; s < q; ++s) {
        int other = q + r - 1 - s;
        if (other < 0 || other > top || s > top) continue;
        rhs += pm * f1[s] * f2[other] - f2[other] * f1[s] * pm;
        PolyMatrix bb = f1[s] * qm * f2[other] - f2[other] * qm * f1[s];
        rhs += ((q + s) % 2 ? Rat(-1) : Rat(1)) * bb;
    }
    return rhs;
}

int reflection_extract_sign(const GradedDim& d, int b, int c, int dd) {
    int e = d.parity(b) + d.parity(dd) + (d.parity(c) + d.parity(dd)) * d.parity(b);
    return e % 2 ? -1 : 1;
}

BracketTable twisted_symbolic_table(const GradedDim& d, const ThetaData& th, int p) {
    int n = d.dim();
    std::vector<PolyMatrix> s1(2 * p + 1), s2(2 * p + 1);
    for (int m = 0; m <= 2 * p; ++m) {
        PolyMatrix sm(n);
        if (m == 0) {
            sm = PolyMatrix::identity(n);  // level 0 stays untwisted
        } else {
            for (int a = 1; a <= n; ++a)
                for (int b = 1; b <= n; ++b)
                    sm.at(a, b) = twist_sym::reduce(Family::S, m, a, b, th, d, p);
            sm = column_twist(sm, d);
        }
        s1[m] = kron_first(sm, d);
        s2[m] = kron_second(sm, d);
    }
    PolyMatrix pm = PolyMatrix::lift(permutation_P(d));
    PolyMatrix qm = classical_q_matrix(th);

    BracketTable out;
    for (int lvl = 1; lvl <= p; ++lvl)
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b)
                if (twist_sym::is_canonical(a, b, th) &&
                    !twist_sym::reduce(Family::S, lvl, a, b, th, d, p).is_zero())
                    out.add_generator(GenSymbol(Family::S, lvl, a, b, d));

    for (int q = 1; q <= p; ++q)
        for (int r = 1; r <= p; ++r) {
            PolyMatrix rhs = reflection_mode_rhs(s1, s2, pm, qm, q, r);
            for (int a = 1; a <= n; ++a)
                for (int b = 1; b <= n; ++b)
                    for (int c = 1; c <= n; ++c)
                        for (int dd = 1; dd <= n; ++dd) {
                            GenSymbol x(Family::S, q, a, b, d), y(Family::S, r, c, dd, d);
                            if (!out.covers(x) || !out.covers(y)) continue;
                            const Poly& e = rhs.at((a - 1) * n + c, (b - 1) * n + dd);
                            Poly val = Rat(reflection_extract_sign(d, b, c, dd)) * e;
                            if (!out.set_checked(x, y, val))
                                throw Error("twisted_symbolic_table: orientation clash");
                        }
        }
    return out;
}

}  // namespace superw
