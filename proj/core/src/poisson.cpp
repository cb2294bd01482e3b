#include "superw/poisson.hpp"

#include <array>

#include "superw/util.hpp"

namespace superw {

namespace {

Poly mono_poly(const Mono& m) {
    Poly p;
    p.add_term(m, Rat(1));
    return p;
}

// Splits off the first factor: m = x * rest.
void split(const Mono& m, GenSymbol& x, Mono& rest) {
    auto f = m.factors();
    x = f.front().first;
    if (f.front().second == 1)
        f.erase(f.begin());
    else
        f.front().second -= 1;
    std::vector<GenSymbol> seq;
    for (const auto& [s, e] : f)
        for (int i = 0; i < e; ++i) seq.push_back(s);
    auto [r, sg] = Mono::normalize(seq);
    (void)sg;  // already canonical, sign is +1
    rest = r;
}

// {x, n} for a single generator x and monomial n.
Poly pb_sym_mono(const GenSymbol& x, const Mono& n, const BracketTable& t) {
    if (n.is_constant()) return Poly();
    GenSymbol y;
    Mono rest;
    split(n, y, rest);
    if (rest.is_constant()) return t.bracket(x, y);
    // {x, y*rest} = {x,y}*rest + (-1)^{[x][y]} y*{x,rest}
    Poly r = t.bracket(x, y) * mono_poly(rest);
    Poly tail = Poly(y) * pb_sym_mono(x, rest, t);
    if (x.parity & y.parity & 1)
        r -= tail;
    else
        r += tail;
    return r;
}

// {m, n} for monomials.
Poly pb_mono(const Mono& m, const Mono& n, const BracketTable& t) {
    if (m.is_constant() || n.is_constant()) return Poly();
    GenSymbol x;
    Mono rest;
    split(m, x, rest);
    if (rest.is_constant()) return pb_sym_mono(x, n, t);
    // {x*rest, n} = x*{rest,n} + (-1)^{[rest][n]} {x,n}*rest
    Poly r = Poly(x) * pb_mono(rest, n, t);
    Poly tail = pb_sym_mono(x, n, t) * mono_poly(rest);
    if (rest.parity() & n.parity() & 1)
        r -= tail;
    else
        r += tail;
    return r;
}

}  // namespace

Poly poisson_bracket(const Poly& f, const Poly& g, const BracketTable& t) {
    Poly r;
    for (const auto& [mf, cf] : f.terms()) {
        if (mf.is_constant()) continue;
        for (const auto& [mg, cg] : g.terms()) {
            if (mg.is_constant()) continue;
            r += (cf * cg) * pb_mono(mf, mg, t);
        }
    }
    return r;
}

namespace {

Poly jacobi_residual(const GenSymbol& x, const GenSymbol& y, const GenSymbol& z,
                     const BracketTable& t) {
    auto term = [&](const GenSymbol& u, const GenSymbol& v, const GenSymbol& w) {
        // (-1)^{[u][w]} {u, {v, w}}
        Poly inner = t.bracket(v, w);
        Poly outer = poisson_bracket(Poly(u), inner, t);
        return (u.parity & w.parity & 1) ? -outer : outer;
    };
    return term(x, y, z) + term(y, z, x) + term(z, x, y);
}

}  // namespace

JacobiReport check_jacobi(const BracketTable& t, const std::vector<std::array<GenSymbol, 3>>& triples) {
    JacobiReport rep;
    rep.triples_checked = triples.size();
    auto results = parallel_map<Poly>(triples.size(), [&](std::size_t i) {
        return jacobi_residual(triples[i][0], triples[i][1], triples[i][2], t);
    });
    for (std::size_t i = 0; i < triples.size(); ++i)
        if (!results[i].is_zero())
            rep.violations.push_back({triples[i][0], triples[i][1], triples[i][2], results[i]});
    return rep;
}

JacobiReport check_jacobi(const BracketTable& t) {
    std::vector<GenSymbol> gens(t.domain().begin(), t.domain().end());
    std::vector<std::array<GenSymbol, 3>> triples;
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i; j < gens.size(); ++j)
            for (std::size_t k = j; k < gens.size(); ++k)
                triples.push_back({gens[i], gens[j], gens[k]});
    return check_jacobi(t, triples);
}

}  // namespace superw
