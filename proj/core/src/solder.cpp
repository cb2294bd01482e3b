#include "superw/solder.hpp"

namespace superw {

SolderState::SolderState(const GradedDim& d, int p, const ClebschTable& cg)
    : gd_(d), p_(p), cg_(&cg) {
    if (cg.p() != p) throw ConfigError("SolderState: Clebsch table built for different p");
}

const Poly& SolderState::lambda(int j, int m, int a, int b) const {
    auto it = lam_.find({j, m, a, b});
    if (it == lam_.end()) throw Error("SolderState: lambda out of range");
    return it->second;
}

SolderState solve_lambda(const GradedDim& d, int p, const ClebschTable& cg) {
    SolderState st(d, p, cg);
    int n = d.dim();
    auto key = [](int j, int m, int a, int b) { return std::make_tuple(j, m, a, b); };
    std::map<std::tuple<int, int, int, int>, Poly> lam;

    // free parameters: lambda_{k,-k} = (-1)^k / eta_k * lambda~_k
    for (int k = 0; k < p; ++k) {
        Rat c = Rat(k % 2 ? -1 : 1) / cg.eta(k);
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b) lam[key(k, -k, a, b)] = Poly(st.lam(k, a, b), c);
    }

    // raise the weight one step at a time; entries at weight m+1 depend only
    // on weights l = m - r <= m
    for (int m = -(p - 1); m <= p - 2; ++m) {
        for (int j = 0; j < p; ++j) {
            if (m < -j || m > j - 1) continue;
            for (int a = 1; a <= n; ++a)
                for (int b = 1; b <= n; ++b) {
                    Poly acc;
                    for (int k = 0; k < p; ++k)
                        for (int r = 0; r < p; ++r) {
                            int l = m - r;
                            if (l < -k || l > k) continue;
                            const Rat& c1 = cg.cg(k, l, r, r, j, m);
                            const Rat& c2 = cg.cg(r, r, k, l, j, m);
                            if (c1.is_zero() && c2.is_zero()) continue;
                            for (int e = 1; e <= n; ++e) {
                                const Poly& le = lam.at(key(k, l, a, e));
                                const Poly& lb = lam.at(key(k, l, e, b));
                                if (!c1.is_zero() && !le.is_zero())
                                    acc += c1 * (le * Poly(st.w(r, e, b)));
                                if (!c2.is_zero() && !lb.is_zero())
                                    acc -= c2 * (Poly(st.w(r, a, e)) * lb);
                            }
                        }
                    lam[key(j, m + 1, a, b)] = acc;
                }
        }
    }

    // every entry must be linear in the lambda~ symbols
    for (const auto& [k, poly] : lam) {
        for (const auto& [mono, c] : poly.terms()) {
            int count = 0;
            for (const auto& [s, e] : mono.factors())
                if (s.family == Family::Lambda) count += e;
            if (count != 1) throw Error("solve_lambda: entry not linear in lambda~");
        }
    }

    st.lam_ = std::move(lam);
    return st;
}

BracketTable solder_brackets(const SolderState& st) {
    const GradedDim& d = st.dims();
    int n = d.dim(), p = st.p();
    BracketTable unhat;
    for (int j = 0; j < p; ++j)
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b) unhat.add_generator(st.w(j, a, b));

    for (int j = 0; j < p; ++j)
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b) {
                Poly dw = delta_w(st, j, a, b);
                // group terms by the leading lambda~ factor
                std::map<GenSymbol, Poly> by_lam;
                for (const auto& [mono, c] : dw.terms()) {
                    const auto& factors = mono.factors();
                    if (factors.empty() || factors.front().first.family != Family::Lambda ||
                        factors.front().second != 1)
                        throw Error("solder_brackets: residual lambda~ structure in delta W");
                    for (std::size_t i = 1; i < factors.size(); ++i)
                        if (factors[i].first.family == Family::Lambda)
                            throw Error("solder_brackets: entry not linear in lambda~");
                    Mono rest;
                    {
                        std::vector<GenSymbol> seq;
                        for (std::size_t i = 1; i < factors.size(); ++i)
                            for (int e = 0; e < factors[i].second; ++e)
                                seq.push_back(factors[i].first);
                        auto [mm, sg] = Mono::normalize(seq);
                        (void)sg;
                        rest = mm;
                    }
                    by_lam[factors.front().first].add_term(rest, c);
                }
                // delta W_j^{ab} = sum (-1)^{[dd]} lambda~_k^{dc} {W_k^{cd}, W_j^{ab}}
                for (auto& [ls, coeff] : by_lam) {
                    int k = ls.level, dd = ls.a, c = ls.b;
                    Poly bracket = d.parity(dd) ? -coeff : coeff;
                    if (!unhat.set_checked(st.w(k, c, dd), st.w(j, a, b), bracket))
                        throw Error("solder_brackets: antisymmetry clash between extractions");
                }
            }
    return hat_basis(unhat, d);
}

Poly delta_w(const SolderState& st, int j, int a, int b) {
    const GradedDim& d = st.dims();
    const ClebschTable& cg = st.clebsch();
    int n = d.dim(), p = st.p();
    Poly acc;
    for (int k = 0; k < p; ++k)
        for (int r = 0; r < p; ++r) {
            int l = j - r;
            if (l < -k || l > k) continue;
            const Rat& c1 = cg.cg(k, l, r, r, j, j);
            const Rat& c2 = cg.cg(r, r, k, l, j, j);
            if (c1.is_zero() && c2.is_zero()) continue;
            for (int e = 1; e <= n; ++e) {
                if (!c1.is_zero()) acc += c1 * (st.lambda(k, l, a, e) * Poly(st.w(r, e, b)));
                if (!c2.is_zero()) acc -= c2 * (Poly(st.w(r, a, e)) * st.lambda(k, l, e, b));
            }
        }
    return acc;
}

BracketTable hat_basis(const BracketTable& t, const GradedDim& d) {
    auto hat_poly = [&](const Poly& p) {
        Poly out;
        for (const auto& [mono, c] : p.terms()) {
            int sgn = 0;
            for (const auto& [s, e] : mono.factors()) sgn += d.parity(s.a) * e;
            out.add_term(mono, sgn % 2 ? -c : c);
        }
        return out;
    };
    BracketTable out;
    for (const auto& g : t.domain()) out.add_generator(g);
    for (const auto& [xy, poly] : t.entries()) {
        int sgn = d.parity(xy.first.a) + d.parity(xy.second.a);
        Poly q = hat_poly(poly);
        out.set(xy.first, xy.second, sgn % 2 ? -q : q);
    }
    return out;
}

}  // namespace superw
