#include "superw/bar_basis.hpp"

#include "superw/linalg.hpp"

namespace superw {

namespace {

void compositions_rec(int total, int parts, std::vector<int>& cur,
                      std::vector<std::vector<int>>& out) {
    if (parts == 1) {
        cur.push_back(total);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int first = 0; first <= total; ++first) {
        cur.push_back(first);
        compositions_rec(total - first, parts - 1, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> compositions(int total, int parts) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    compositions_rec(total, parts, cur, out);
    return out;
}

}  // namespace

BarBasis::BarBasis(int sign, const BracketTable& wtable, const GradedDim& d, int p)
    : sign_(sign), table_(&wtable), gd_(d), p_(p) {
    if (sign != 1 && sign != -1) throw ConfigError("BarBasis: sign must be +1 or -1");
    build();
}

Poly BarBasis::chain(int a, const std::vector<int>& comp, int b) const {
    auto wsym = [&](int lvl, int x, int y) { return GenSymbol(Family::W, lvl, x, y, gd_); };
    if (comp.size() == 1) return Poly(wsym(comp[0], a, b));
    std::vector<int> rest(comp.begin() + 1, comp.end());
    Poly acc;
    for (int i = 1; i <= gd_.dim(); ++i) {
        Poly piece = Poly(wsym(comp[0], a, i)) * chain(i, rest, b);
        if (gd_.parity(i))
            acc -= piece;
        else
            acc += piece;
    }
    return acc;
}

void BarBasis::build() {
    auto wsym = [&](int lvl, int x, int y) { return GenSymbol(Family::W, lvl, x, y, gd_); };
    int n = gd_.dim();

    // W-bar_0 = p W_0
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) bars_[{0, a, b}] = Poly(wsym(0, a, b), Rat(p_));
    alpha_[0][{0}] = Rat(p_);
    if (p_ == 1) return;

    // W-bar_1 = sign p(p^2-1)/6 W_1 + p(p+sign)/2 sum_e (-1)^{[e]} W_0 W_0
    Rat c1 = Rat(sign_) * Rat(static_cast<long>(p_) * (p_ * p_ - 1), 6);
    Rat c2 = Rat(static_cast<long>(p_) * (p_ + sign_), 2);
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) {
            Poly v(wsym(1, a, b), c1);
            v += c2 * chain(a, {0, 0}, b);
            bars_[{1, a, b}] = v;
        }
    alpha_[1][{1}] = c1;
    alpha_[1][{0, 0}] = c2;

    // higher levels from the bracket recursion with W-bar_1
    for (int j = 1; j + 1 <= p_ - 1; ++j) {
        int next = j + 1;
        std::vector<std::vector<int>> comps;
        for (int parts = 1; parts <= next + 1; ++parts)
            for (auto& c : compositions(next + 1 - parts, parts)) {
                bool ok = true;
                for (int s : c)
                    if (s >= p_) ok = false;
                if (ok) comps.push_back(c);
            }

        // ansatz polynomials G_comp^{xy}
        std::map<std::pair<int, int>, std::vector<Poly>> g;
        for (int x = 1; x <= n; ++x)
            for (int y = 1; y <= n; ++y) {
                auto& v = g[{x, y}];
                v.reserve(comps.size());
                for (const auto& c : comps) v.push_back(chain(x, c, y));
            }

        // linear system over the alphas, one row per (a,b,c,d,monomial)
        std::vector<std::map<int, Rat>> cols_sparse;  // per equation row: col -> coeff
        std::vector<Rat> rhs_v;

        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b)
                for (int c = 1; c <= n; ++c)
                    for (int dd = 1; dd <= n; ++dd) {
                        Poly lhs = poisson_bracket(bars_.at({1, a, b}), bars_.at({j, c, dd}),
                                                   *table_);
                        // tail (-1)^{[c]([a]+[b])+[a][b]} (Wb0^{cb} Wbj^{ad} - Wbj^{cb} Wb0^{ad})
                        int ksign = (gd_.parity(c) * (gd_.parity(a) + gd_.parity(b)) +
                                     gd_.parity(a) * gd_.parity(b)) % 2;
                        Poly tail = bars_.at({0, c, b}) * bars_.at({j, a, dd}) -
                                    bars_.at({j, c, b}) * bars_.at({0, a, dd});
                        lhs -= ksign ? -tail : tail;

                        int koszul = ((gd_.parity(a) + gd_.parity(b)) *
                                      (gd_.parity(c) + gd_.parity(dd))) % 2;
                        std::map<Mono, int> local;
                        auto row_of = [&](const Mono& m) {
                            auto [it, fresh] = local.try_emplace(m, static_cast<int>(cols_sparse.size()));
                            if (fresh) {
                                cols_sparse.emplace_back();
                                rhs_v.emplace_back(0);
                            }
                            return it->second;
                        };
                        for (const auto& [mono, coef] : lhs.terms()) rhs_v[row_of(mono)] = coef;
                        for (std::size_t u = 0; u < comps.size(); ++u) {
                            Poly pattern;
                            if (c == b) pattern += g[{a, dd}][u];
                            if (a == dd) {
                                const Poly& gc = g[{c, b}][u];
                                pattern -= koszul ? -gc : gc;
                            }
                            for (const auto& [mono, coef] : pattern.terms()) {
                                int r = row_of(mono);
                                cols_sparse[static_cast<std::size_t>(r)][static_cast<int>(u)] += coef;
                            }
                        }
                    }

        RatMatrix A(static_cast<int>(cols_sparse.size()), static_cast<int>(comps.size()));
        for (std::size_t r = 0; r < cols_sparse.size(); ++r)
            for (const auto& [cidx, v] : cols_sparse[r]) A.at(static_cast<int>(r), cidx) = v;
        bool unique = false;
        auto sol = solve(A, rhs_v, &unique);
        if (!sol) throw Error("BarBasis: recursion inconsistent at level " + std::to_string(next));
        if (!unique)
            throw Error("BarBasis: coefficient system underdetermined at level " +
                        std::to_string(next));

        for (std::size_t u = 0; u < comps.size(); ++u) alpha_[next][comps[u]] = (*sol)[u];
        for (int x = 1; x <= n; ++x)
            for (int y = 1; y <= n; ++y) {
                Poly v;
                for (std::size_t u = 0; u < comps.size(); ++u) v += (*sol)[u] * g[{x, y}][u];
                bars_[{next, x, y}] = v;
            }

        // the solved polynomials must close the recursion exactly
        std::map<std::pair<int, int>, Poly> nx;
        for (int x = 1; x <= n; ++x)
            for (int y = 1; y <= n; ++y) nx[{x, y}] = bars_.at({next, x, y});
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b)
                for (int c = 1; c <= n; ++c)
                    for (int dd = 1; dd <= n; ++dd)
                        if (!recursion_residual(j, a, b, c, dd, nx).is_zero())
                            throw Error("BarBasis: recursion residual nonzero at level " +
                                        std::to_string(next));
    }
}

const Poly& BarBasis::at(int j, int a, int b) const {
    auto it = bars_.find({j, a, b});
    if (it == bars_.end()) throw Error("BarBasis: level out of range");
    return it->second;
}

Poly BarBasis::trace_gen(int j) const {
    Poly acc;
    for (int a = 1; a <= gd_.dim(); ++a) acc += at(j, a, a);
    return acc;
}

const Rat& BarBasis::alpha(int j, const std::vector<int>& comp) const {
    auto it = alpha_.find(j);
    if (it == alpha_.end()) throw Error("BarBasis: no alphas at level " + std::to_string(j));
    auto it2 = it->second.find(comp);
    if (it2 == it->second.end()) {
        static const Rat zero(0);
        return zero;
    }
    return it2->second;
}

Poly BarBasis::recursion_residual(int j, int a, int b, int c, int dd,
                                  const std::map<std::pair<int, int>, Poly>& next) const {
    Poly lhs = poisson_bracket(at(1, a, b), at(j, c, dd), *table_);
    int ksign = (gd_.parity(c) * (gd_.parity(a) + gd_.parity(b)) +
                 gd_.parity(a) * gd_.parity(b)) % 2;
    Poly tail = at(0, c, b) * at(j, a, dd) - at(j, c, b) * at(0, a, dd);
    lhs -= ksign ? -tail : tail;
    int koszul = ((gd_.parity(a) + gd_.parity(b)) * (gd_.parity(c) + gd_.parity(dd))) % 2;
    Poly expect;
    if (c == b) {
        auto it = next.find({a, dd});
        if (it != next.end()) expect += it->second;
    }
    if (a == dd) {
        auto it = next.find({c, b});
        if (it != next.end()) expect -= koszul ? -it->second : it->second;
    }
    return lhs - expect;
}

bool BarBasis::minus_terminates() const {
    if (sign_ != -1) throw Error("minus_terminates: only meaningful for the minus basis");
    if (p_ == 1) return true;  // W-bar_1 itself already vanishes at p = 1
    std::map<std::pair<int, int>, Poly> zero;
    for (int a = 1; a <= gd_.dim(); ++a)
        for (int b = 1; b <= gd_.dim(); ++b)
            for (int c = 1; c <= gd_.dim(); ++c)
                for (int dd = 1; dd <= gd_.dim(); ++dd)
                    if (!recursion_residual(p_ - 1, a, b, c, dd, zero).is_zero()) return false;
    return true;
}

std::vector<std::tuple<int, int, int>> change_bar_basis(const BarBasis& plus, const BarBasis& minus) {
    if (plus.sign() != 1 || minus.sign() != -1 || plus.p() != minus.p())
        throw ConfigError("change_bar_basis: need matching plus/minus bases");
    const GradedDim& d = plus.dims();
    int n = d.dim();
    std::vector<std::tuple<int, int, int>> bad;

    // chain over the other basis' polynomials
    std::function<Poly(const BarBasis&, int, const std::vector<int>&, int)> chain_bar =
        [&](const BarBasis& src, int a, const std::vector<int>& comp, int b) -> Poly {
        if (comp.size() == 1) return src.at(comp[0], a, b);
        std::vector<int> rest(comp.begin() + 1, comp.end());
        Poly acc;
        for (int i = 1; i <= n; ++i) {
            Poly piece = src.at(comp[0], a, i) * chain_bar(src, i, rest, b);
            if (d.parity(i))
                acc -= piece;
            else
                acc += piece;
        }
        return acc;
    };

    auto check_side = [&](const BarBasis& dst, const BarBasis& src) {
        for (int j = 0; j < dst.p(); ++j)
            for (int a = 1; a <= n; ++a)
                for (int b = 1; b <= n; ++b) {
                    Poly rhs;
                    for (int parts = 1; parts <= j + 1; ++parts) {
                        int sgn = (j + 1 + parts) % 2 ? -1 : 1;
                        for (const auto& comp : compositions(j + 1 - parts, parts))
                            rhs += Rat(sgn) * chain_bar(src, a, comp, b);
                    }
                    if (!(dst.at(j, a, b) == rhs)) bad.push_back({j, a, b});
                }
    };
    check_side(plus, minus);
    check_side(minus, plus);
    return bad;
}

}  // namespace superw
