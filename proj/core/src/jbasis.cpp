#include "superw/jbasis.hpp"

#include "superw/linalg.hpp"

namespace superw {

JBasisStructure::JBasisStructure(const GradedDim& d, int p) : gd_(d), p_(p), cg_(p) {
    int n = gd_.dim();
    for (int j = 0; j < p; ++j)
        for (int m = -j; m <= j; ++m)
            for (int a = 1; a <= n; ++a)
                for (int b = 1; b <= n; ++b) table_.add_generator(sym(j, m, a, b));

    for (int j = 0; j < p; ++j)
        for (int m = -j; m <= j; ++m)
            for (int a = 1; a <= n; ++a)
                for (int b = 1; b <= n; ++b) {
                    GenSymbol x = sym(j, m, a, b);
                    for (int k = 0; k < p; ++k)
                        for (int l = -k; l <= k; ++l)
                            for (int c = 1; c <= n; ++c)
                                for (int dd = 1; dd <= n; ++dd) {
                                    GenSymbol y = sym(k, l, c, dd);
                                    if (y < x) continue;
                                    Poly rhs;
                                    int s = m + l;
                                    int koszul = ((gd_.parity(a) + gd_.parity(b)) *
                                                  (gd_.parity(c) + gd_.parity(dd))) % 2;
                                    for (int r = std::abs(s); r < p; ++r) {
                                        if (b == c) {
                                            const Rat& q = cg_.cg(j, m, k, l, r, s);
                                            if (!q.is_zero()) rhs += Poly(sym(r, s, a, dd), q);
                                        }
                                        if (a == dd) {
                                            const Rat& q = cg_.cg(k, l, j, m, r, s);
                                            if (!q.is_zero())
                                                rhs += Poly(sym(r, s, c, b), koszul ? q : -q);
                                        }
                                    }
                                    table_.set(x, y, rhs);
                                }
                }
    verify_fundamental();
}

SuperMatrix JBasisStructure::fundamental(int j, int m, int a, int b) const {
    return graded_tensor(cg_.mjm().at(j, m),
                         SuperMatrix::unit(parities_of(gd_), a, b));
}

void JBasisStructure::verify_fundamental() const {
    int n = gd_.dim();
    std::vector<GenSymbol> gens(table_.domain().begin(), table_.domain().end());
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t k = i; k < gens.size(); ++k) {
            const GenSymbol &x = gens[i], &y = gens[k];
            SuperMatrix lhs = graded_commutator(fundamental(x.level, x.m, x.a, x.b), x.parity,
                                                fundamental(y.level, y.m, y.a, y.b), y.parity);
            SuperMatrix rhs(lhs.space());
            Poly br = table_.bracket(x, y);
            for (const auto& [mono, c] : br.terms()) {
                const GenSymbol& z = mono.factors().front().first;
                rhs += c * fundamental(z.level, z.m, z.a, z.b);
            }
            if (!(lhs - rhs).is_zero())
                throw Error("JBasisStructure: fundamental representation check failed at {" +
                            x.str() + ", " + y.str() + "}");
        }
    (void)n;
}

bool JBasisStructure::verify_supertrace_pairing() const {
    int n = gd_.dim();
    for (int j = 0; j < p_; ++j)
        for (int m = -j; m <= j; ++m)
            for (int l = 0; l < p_; ++l)
                for (int nn = -l; nn <= l; ++nn)
                    for (int a = 1; a <= n; ++a)
                        for (int b = 1; b <= n; ++b)
                            for (int c = 1; c <= n; ++c)
                                for (int dd = 1; dd <= n; ++dd) {
                                    Rat lhs = supertrace(fundamental(j, m, a, b) *
                                                         fundamental(l, nn, c, dd));
                                    Rat rhs(0);
                                    if (a == dd && c == b && j == l && m + nn == 0) {
                                        rhs = cg_.eta(j);
                                        if (m % 2) rhs = -rhs;
                                        if (gd_.parity(a)) rhs = -rhs;
                                    }
                                    if (lhs != rhs) return false;
                                }
    return true;
}

std::pair<int, GenSymbol> tau_J(const GenSymbol& x, const ThetaData& th, const GradedDim& d) {
    int pa = d.parity(x.a), pb = d.parity(x.b);
    int sign = ((x.level + 1) % 2 == 0 ? 1 : -1);
    if ((pa * (pb + 1)) % 2) sign = -sign;
    sign *= th.theta(x.a) * th.theta(x.b);
    return {sign, GenSymbol(x.family, x.level, th.bar(x.b), th.bar(x.a), d, x.m)};
}

Poly tau_apply(const Poly& p, const ThetaData& th, const GradedDim& d) {
    return p.substituted([&](const GenSymbol& s) {
        auto [sign, t] = tau_J(s, th, d);
        return Poly(t, Rat(sign));
    });
}

TauReport check_tau_on_J(const JBasisStructure& st, const ThetaData& th) {
    TauReport rep;
    const GradedDim& d = st.dims();
    std::vector<GenSymbol> gens(st.table().domain().begin(), st.table().domain().end());
    for (const auto& g : gens) {
        auto [s1, t1] = tau_J(g, th, d);
        auto [s2, t2] = tau_J(t1, th, d);
        if (!(t2 == g && s1 * s2 == 1)) rep.involution_ok = false;
    }
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t k = i; k < gens.size(); ++k) {
            auto [sx, tx] = tau_J(gens[i], th, d);
            auto [sy, ty] = tau_J(gens[k], th, d);
            Poly lhs = Rat(sx * sy) * st.table().bracket(tx, ty);
            Poly rhs = tau_apply(st.table().bracket(gens[i], gens[k]), th, d);
            ++rep.pairs_checked;
            if (!(lhs == rhs)) rep.bracket_violations.push_back({gens[i], gens[k]});
        }
    return rep;
}

namespace {

Poly k_combo(const GenSymbol& j, const ThetaData& th, const GradedDim& d) {
    auto [sign, t] = tau_J(j, th, d);
    Poly p(j);
    p += Poly(t, Rat(sign));
    return p;
}

}  // namespace

FoldReport fold_fixed_subalgebra(const JBasisStructure& st, const ThetaData& th) {
    FoldReport rep;
    const GradedDim& d = st.dims();
    if (d.even != th.M || d.odd != 2 * th.n)
        throw ConfigError("fold_fixed_subalgebra: theta data does not match gl(M|2n)");
    int p = st.p();
    int q = th.M * p, r = th.n * p;
    rep.expected_dim_even = q * (q - 1) / 2 + r * (2 * r + 1);
    rep.expected_dim_odd = 2 * q * r;
    rep.expected_dim = rep.expected_dim_even + rep.expected_dim_odd;
    int qs = 2 * th.n * p;  // parity-swapped count, even block of size 2np
    int rs_half = th.M * p;
    if (rs_half % 2 == 0) {
        int rr = rs_half / 2;
        rep.expected_dim_swapped_even = qs * (qs - 1) / 2 + rr * (2 * rr + 1);
        rep.expected_dim_swapped_odd = 2 * qs * rr;
    } else {
        // odd Mp: no symplectic half, count directly from the survival signs
        rep.expected_dim_swapped_even = -1;
        rep.expected_dim_swapped_odd = -1;
    }
    rep.expected_dim_swapped = rep.expected_dim_swapped_even < 0
                                   ? -1
                                   : rep.expected_dim_swapped_even + rep.expected_dim_swapped_odd;

    std::vector<GenSymbol> gens(st.table().domain().begin(), st.table().domain().end());
    std::map<GenSymbol, int> coord;
    for (const auto& g : gens) coord[g] = static_cast<int>(coord.size());

    auto rank_of_parity = [&](int parity) {
        std::vector<std::vector<Rat>> rows;
        for (const auto& g : gens) {
            if (g.parity != parity) continue;
            std::vector<Rat> v(gens.size(), Rat(0));
            Poly kc = k_combo(g, th, d);
            for (const auto& [mono, c] : kc.terms())
                v[coord[mono.factors().front().first]] += c;
            rows.push_back(std::move(v));
        }
        RatMatrix m(static_cast<int>(rows.size()), static_cast<int>(gens.size()));
        for (int i = 0; i < m.rows; ++i)
            for (int j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
        return rank(m);
    };
    rep.fixed_dim_even = rank_of_parity(0);
    rep.fixed_dim_odd = rank_of_parity(1);
    rep.fixed_dim = rep.fixed_dim_even + rep.fixed_dim_odd;

    // symmetry relation on the K's
    for (const auto& g : gens) {
        auto [sign, t] = tau_J(g, th, d);
        Poly diff = k_combo(g, th, d) - Rat(sign) * k_combo(t, th, d);
        if (!diff.is_zero()) rep.symmetry_ok = false;
    }

    // closure and the folded closed form
    const ClebschTable& cgt = st.clebsch();
    for (const auto& x : gens)
        for (const auto& y : gens) {
            Poly kk = poisson_bracket(k_combo(x, th, d), k_combo(y, th, d), st.table());
            if (!(tau_apply(kk, th, d) == kk)) rep.closure_ok = false;

            int j = x.level, m = x.m, a = x.a, b = x.b;
            int k = y.level, l = y.m, c = y.a, dd = y.b;
            int s = m + l;
            int koszul = ((d.parity(a) + d.parity(b)) * (d.parity(c) + d.parity(dd))) % 2;
            // (-1)^j (-1)^{[a]([b]+1)} theta_a theta_b
            int front = (j % 2 ? -1 : 1) *
                        ((d.parity(a) * (d.parity(b) + 1)) % 2 ? -1 : 1) *
                        th.theta(a) * th.theta(b);
            Poly rhs;
            for (int rr = std::abs(s); rr < p; ++rr) {
                const Rat& q1 = cgt.cg(j, m, k, l, rr, s);
                if (q1.is_zero()) continue;
                int swap = ((j + k + rr) % 2 ? -1 : 1) * (koszul ? -1 : 1);
                Poly block;
                if (b == c) block += k_combo(st.sym(rr, s, a, dd), th, d);
                if (th.bar(a) == c)
                    block -= Rat(front) * k_combo(st.sym(rr, s, th.bar(b), dd), th, d);
                if (a == dd) block -= Rat(swap) * k_combo(st.sym(rr, s, c, b), th, d);
                if (th.bar(b) == dd)
                    block += Rat(swap * front) * k_combo(st.sym(rr, s, c, th.bar(a)), th, d);
                rhs += q1 * block;
            }
            if (!(kk == rhs)) rep.formula_ok = false;
        }
    return rep;
}

}  // namespace superw
