#include "superw/folding.hpp"

#include "superw/linalg.hpp"

namespace superw {

FoldData::FoldData(const YangianTable& yt, const ThetaData& th)
    : gd_(yt.dims()), th_(th), p_(yt.p()), yt_(&yt) {
    if (gd_.even != th.M || gd_.odd != 2 * th.n)
        throw ConfigError("FoldData: need gl(M|2n) with matching theta data");
}

Poly FoldData::k_in_t(int s, int a, int b) const {
    // (X^t)^{ab} = (-1)^{[b]([a]+1)} theta_{bar b} theta_{bar a} X^{bar b bar a}
    int sign = (gd_.parity(b) * (gd_.parity(a) + 1)) % 2 ? -1 : 1;
    sign *= th_.theta(th_.bar(b)) * th_.theta(th_.bar(a));
    if (s % 2) sign = -sign;
    Poly r(yt_->t(s, a, b), Rat(1, 2));
    r += Poly(yt_->t(s, th_.bar(b), th_.bar(a)), Rat(sign, 2));
    return r;
}

Poly FoldData::phi_in_t(int s, int a, int b) const {
    return Poly(yt_->t(s, a, b)) - k_in_t(s, a, b);
}

Poly FoldData::substitute(const Poly& p) const {
    return p.substituted([&](const GenSymbol& s) {
        if (s.family != Family::T) return Poly(s);
        return twist_sym::reduce(Family::K, s.level, s.a, s.b, th_, gd_, p_);
    });
}

std::vector<GenSymbol> FoldData::k_components(int s) const {
    std::vector<GenSymbol> out;
    int n = gd_.dim();
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
            if (twist_sym::is_canonical(a, b, th_) &&
                !twist_sym::reduce(Family::K, s, a, b, th_, gd_, p_).is_zero())
                out.push_back(GenSymbol(Family::K, s, a, b, gd_));
    return out;
}

int FoldData::phi_rank(int s) const {
    int n = gd_.dim();
    std::map<std::pair<int, int>, int> coord;
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) coord[{a, b}] = static_cast<int>(coord.size());
    RatMatrix m(n * n, n * n);
    int row = 0;
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b, ++row) {
            Poly ph = phi_in_t(s, a, b);
            for (const auto& [mono, c] : ph.terms()) {
                const GenSymbol& t = mono.factors().front().first;
                m.at(row, coord[{t.a, t.b}]) += c;
            }
        }
    return rank(m);
}

BracketTable folded_k_table(const FoldData& fd, const YangianTable& yt) {
    BracketTable out;
    std::vector<GenSymbol> gens;
    for (int s = 1; s <= fd.p(); ++s)
        for (const auto& g : fd.k_components(s)) {
            out.add_generator(g);
            gens.push_back(g);
        }
    for (const auto& x : gens)
        for (const auto& y : gens) {
            Poly raw = poisson_bracket(fd.k_in_t(x.level, x.a, x.b),
                                       fd.k_in_t(y.level, y.a, y.b), yt.table());
            if (!out.set_checked(x, y, fd.substitute(raw)))
                throw Error("folded_k_table: orientation clash");
        }
    return out;
}

namespace {

struct FoldedMatrices {
    std::vector<PolyMatrix> raw1, raw2;  // K in T coordinates, slot-embedded
    std::vector<PolyMatrix> sub1, sub2;  // substituted (canonical K symbols)
    PolyMatrix pm, qm;
};

FoldedMatrices folded_matrices(const FoldData& fd, const YangianTable& yt, const ThetaData& th) {
    const GradedDim& d = yt.dims();
    int p = yt.p(), n = d.dim();
    FoldedMatrices out;
    out.raw1.resize(p + 1);
    out.raw2.resize(p + 1);
    out.sub1.resize(p + 1);
    out.sub2.resize(p + 1);
    for (int m = 0; m <= p; ++m) {
        PolyMatrix km(n), kqm(n);
        if (m == 0) {
            // the level-0 slot stays the plain identity in this convention
            km = PolyMatrix::identity(n);
            kqm = PolyMatrix::identity(n);
        } else {
            for (int a = 1; a <= n; ++a)
                for (int b = 1; b <= n; ++b) {
                    km.at(a, b) = fd.k_in_t(m, a, b);
                    kqm.at(a, b) = fd.substitute(km.at(a, b));
                }
            km = column_twist(km, d);
            kqm = column_twist(kqm, d);
        }
        out.raw1[m] = kron_first(km, d);
        out.raw2[m] = kron_second(km, d);
        out.sub1[m] = kron_first(kqm, d);
        out.sub2[m] = kron_second(kqm, d);
    }
    out.pm = PolyMatrix::lift(permutation_P(d));
    out.qm = classical_q_matrix(th);
    return out;
}

}  // namespace

TwistReport twisted_pb_check(const SGenerators& s, const YangianTable& yt) {
    TwistReport rep;
    rep.symmetry_ok = s.symmetry_ok();
    const GradedDim& d = yt.dims();
    const ThetaData& th = s.theta();
    int p = yt.p(), n = d.dim();

    FoldData fd(yt, th);
    FoldedMatrices fm = folded_matrices(fd, yt, th);

    // classical reflection relation, mode by mode, on the folded realization
    rep.relation_modes_ok = true;
    std::map<std::pair<int, int>, PolyMatrix> lhs;
    for (int q = 1; q <= p; ++q)
        for (int r = 1; r <= p; ++r) {
            PolyMatrix block = pb_matrix(fm.raw1[q], fm.raw2[r], yt.table());
            lhs[{q, r}] = Rat(2) * block.substituted([&](const GenSymbol& g) {
                if (g.family != Family::T) return Poly(g);
                return twist_sym::reduce(Family::K, g.level, g.a, g.b, th, d, p);
            });
            PolyMatrix rhs = reflection_mode_rhs(fm.sub1, fm.sub2, fm.pm, fm.qm, q, r);
            ++rep.modes_checked;
            if (!(lhs[{q, r}] == rhs)) rep.relation_modes_ok = false;
        }

    // division validity of the two geometric expansions
    rep.antidiagonals_ok = true;
    auto a_block = [&](int i, int j) -> PolyMatrix {
        if (i > p || j > p) return PolyMatrix(n * n);
        return fm.pm * fm.sub1[i] * fm.sub2[j] - fm.sub2[j] * fm.sub1[i] * fm.pm;
    };
    auto b_block = [&](int i, int j) -> PolyMatrix {
        if (i > p || j > p) return PolyMatrix(n * n);
        return fm.sub2[j] * fm.qm * fm.sub1[i] - fm.sub1[i] * fm.qm * fm.sub2[j];
    };
    for (int c = 0; c <= 2 * p; ++c) {
        PolyMatrix sa(n * n), sb(n * n);
        for (int i = std::max(0, c - p); i <= std::min(c, p); ++i) {
            sa += a_block(i, c - i);
            PolyMatrix bb = b_block(i, c - i);
            sb += (i % 2 ? Rat(-1) : Rat(1)) * bb;
        }
        if (!sa.is_zero() || !sb.is_zero()) rep.antidiagonals_ok = false;
    }

    // (u^2-v^2)-cleared Laurent identity
    UVPoly lhs_uv;
    for (const auto& [qr, m] : lhs) lhs_uv.add(-qr.first, -qr.second, m);
    // modes with q = 0 or r = 0 vanish ({1, X} = 0), so lhs is complete
    UVPoly k1u, k2v;
    for (int m = 0; m <= p; ++m) {
        k1u.add(-m, 0, fm.sub1[m]);
        k2v.add(0, -m, fm.sub2[m]);
    }
    UVPoly puv = UVPoly::monomial(0, 0, fm.pm), quv = UVPoly::monomial(0, 0, fm.qm);
    UVPoly a_uv = puv * k1u * k2v - k2v * k1u * puv;
    UVPoly b_uv = k2v * quv * k1u - k1u * quv * k2v;
    UVPoly left = lhs_uv.shifted(2, 0) - lhs_uv.shifted(0, 2);
    UVPoly right = a_uv.shifted(1, 0) + a_uv.shifted(0, 1) + b_uv.shifted(1, 0) -
                   b_uv.shifted(0, 1);
    rep.cleared_identity_ok = (left == right);

    // the naive S polynomials do not close in the graded case; record the
    // diagonal counterexample when present
    rep.s_polynomials_close = true;
    for (int a = 1; a <= n && rep.s_polynomials_close; ++a)
        for (int b = 1; b <= n && rep.s_polynomials_close; ++b) {
            if (d.parity(a) || !d.parity(b)) continue;
            Poly br = poisson_bracket(s.at(2, a, a), s.at(1, a, b), yt.table());
            for (const auto& [mono, c] : br.terms()) {
                const auto& f = mono.factors();
                if (f.size() == 2 && f[0].first.a == a && f[0].first.b == a &&
                    f[1].first.a == a && f[1].first.b == b) {
                    rep.s_polynomials_close = false;
                    rep.closure_note = "{" + s.at(2, a, a).str() + ", S(1)^{" +
                                       std::to_string(a) + std::to_string(b) +
                                       "}} contains the non-S monomial " + mono.str();
                }
            }
        }
    return rep;
}

FoldCompareReport fold_and_compare(const YangianTable& yt, const ThetaData& th) {
    FoldCompareReport rep;
    const GradedDim& d = yt.dims();
    int p = yt.p();
    int n = d.dim();
    FoldData fd(yt, th);

    rep.substitution_idempotent = true;
    rep.k_symmetry_ok = true;
    for (int s = 1; s <= p; ++s)
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b) {
                Poly once = fd.substitute(fd.k_in_t(s, a, b));
                if (!(fd.substitute(once) == once)) rep.substitution_idempotent = false;
                Poly partner = fd.substitute(fd.k_in_t(s, th.bar(b), th.bar(a)));
                Rat sg(twist_sym::sigma(s, a, b, th, d));
                if (!(once == sg * partner)) rep.k_symmetry_ok = false;
            }

    // per-level component counts against the orthosymplectic split
    rep.component_counts_ok = true;
    int dim_osp = th.M * (th.M - 1) / 2 + th.n * (2 * th.n + 1) + 2 * th.M * th.n;
    for (int s = 1; s <= p; ++s) {
        int kc = static_cast<int>(fd.k_components(s).size());
        int pc = fd.phi_rank(s);
        int expect_k = (s % 2) ? dim_osp : n * n - dim_osp;
        if (kc != expect_k || pc != n * n - expect_k) rep.component_counts_ok = false;
    }

    // 2{K_(q)1, K_(r)2} against the P/Q mode formula, on the quotient
    FoldedMatrices fm = folded_matrices(fd, yt, th);
    rep.folded_display_ok = true;
    for (int q = 1; q <= p; ++q)
        for (int r = 1; r <= p; ++r) {
            PolyMatrix block = pb_matrix(fm.raw1[q], fm.raw2[r], yt.table());
            PolyMatrix lhs = Rat(2) * block.substituted([&](const GenSymbol& g) {
                if (g.family != Family::T) return Poly(g);
                return twist_sym::reduce(Family::K, g.level, g.a, g.b, th, d, p);
            });
            PolyMatrix rhs = reflection_mode_rhs(fm.sub1, fm.sub2, fm.pm, fm.qm, q, r);
            ++rep.modes_checked;
            if (!(lhs == rhs)) rep.folded_display_ok = false;
        }

    // the folded table is the twisted table under S_(m) -> 2^m K_(m)
    BracketTable ktable = folded_k_table(fd, yt);
    BracketTable stable = twisted_symbolic_table(d, th, p);
    auto s_to_k = [&](const GenSymbol& s) -> Poly {
        if (s.family != Family::S) return Poly(s);
        Rat scale(1);
        for (int i = 0; i < s.level; ++i) scale *= Rat(2);
        return Poly(GenSymbol(Family::K, s.level, s.a, s.b, s.parity, s.m), scale);
    };
    rep.twisted_match_ok = stable.domain().size() == ktable.domain().size();
    for (const auto& [xy, poly] : stable.entries()) {
        GenSymbol kx(Family::K, xy.first.level, xy.first.a, xy.first.b, xy.first.parity, 0);
        GenSymbol ky(Family::K, xy.second.level, xy.second.a, xy.second.b, xy.second.parity, 0);
        Rat scale(1);
        for (int i = 0; i < kx.level + ky.level; ++i) scale *= Rat(2);
        Poly expect = scale * ktable.bracket(kx, ky);
        Poly actual = poly.substituted(s_to_k);
        if (!(expect == actual)) rep.twisted_match_ok = false;
    }
    return rep;
}

bool osp_inclusion_check(const ThetaData& th) {
    GradedDim d = th.dims();
    int n = d.dim();
    YangianTable yt(d, 1);
    FoldData fd(yt, th);
    BracketTable osp = folded_k_table(fd, yt);

    PolyMatrix f(n);
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
            f.at(a, b) = Rat(2) * twist_sym::reduce(Family::K, 1, a, b, th, d, 1);
    f = column_twist(f, d);
    std::vector<PolyMatrix> s1(2), s2(2);
    s1[0] = PolyMatrix::identity(n * n);
    s2[0] = PolyMatrix::identity(n * n);
    s1[1] = kron_first(f, d);
    s2[1] = kron_second(f, d);
    PolyMatrix pm = PolyMatrix::lift(permutation_P(d));
    PolyMatrix qm = classical_q_matrix(th);

    // S(u) = 1 + F/u: S_(1) = F, S_(m>=2) = 0; all nontrivial modes are small
    for (int q = 1; q <= 4; ++q)
        for (int r = 1; r <= 4; ++r) {
            PolyMatrix lhs(n * n);
            if (q == 1 && r == 1) lhs = pb_matrix(s1[1], s2[1], osp);
            std::vector<PolyMatrix> e1(5, PolyMatrix(n * n)), e2(5, PolyMatrix(n * n));
            e1[0] = s1[0];
            e2[0] = s2[0];
            e1[1] = s1[1];
            e2[1] = s2[1];
            PolyMatrix rhs = reflection_mode_rhs(e1, e2, pm, qm, q, r);
            if (!(lhs == rhs)) return false;
        }
    return true;
}

}  // namespace superw
