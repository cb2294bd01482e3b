#include "superw/reps.hpp"

#include <algorithm>

namespace superw {

bool GlRep::verify() const {
    int n = alg.dim();
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
            for (int c = 1; c <= n; ++c)
                for (int d = 1; d <= n; ++d) {
                    int pa = (alg.parity(a) + alg.parity(b)) % 2;
                    int pc = (alg.parity(c) + alg.parity(d)) % 2;
                    SuperMatrix lhs = graded_commutator(at(a, b), pa, at(c, d), pc);
                    SuperMatrix rhs(carrier);
                    if (c == b) rhs += at(a, d);
                    if (a == d) {
                        if (pa * pc % 2)
                            rhs += at(c, b);
                        else
                            rhs -= at(c, b);
                    }
                    if (!(lhs - rhs).is_zero()) return false;
                }
    return true;
}

GlRep fundamental_rep(const GradedDim& d) {
    GlRep r;
    r.alg = d;
    r.carrier = parities_of(d);
    for (int a = 1; a <= d.dim(); ++a)
        for (int b = 1; b <= d.dim(); ++b) r.rho[{a, b}] = SuperMatrix::unit(r.carrier, a, b);
    if (!r.verify()) throw Error("fundamental_rep: commutator check failed");
    return r;
}

SuperMatrix RepAssignment::at(int a, int b, int r) const {
    if (r == 0) {
        SuperMatrix m(carrier);
        if (a == b) m = SuperMatrix::identity(carrier);
        return m;
    }
    auto it = op.find({a, b, r});
    return it == op.end() ? SuperMatrix(carrier) : it->second;
}

bool RepAssignment::level_nonzero(int r) const {
    for (int a = 1; a <= alg.dim(); ++a)
        for (int b = 1; b <= alg.dim(); ++b)
            if (!at(a, b, r).is_zero()) return true;
    return false;
}

RepAssignment evaluation_rep(const GlRep& rep) {
    RepAssignment ra;
    ra.alg = rep.alg;
    ra.carrier = rep.carrier;
    ra.cutoff = 1;
    for (const auto& [ab, m] : rep.rho)
        if (!m.is_zero()) ra.op[{ab.first, ab.second, 1}] = m;
    return ra;
}

RelationReport check_defining_relations(const RepAssignment& ra, int level_bound) {
    RelationReport rep;
    int n = ra.alg.dim();
    for (int m = 1; m <= level_bound; ++m)
        for (int nn = 1; nn <= level_bound; ++nn)
            for (int a = 1; a <= n; ++a)
                for (int b = 1; b <= n; ++b)
                    for (int c = 1; c <= n; ++c)
                        for (int d = 1; d <= n; ++d) {
                            int pab = (ra.alg.parity(a) + ra.alg.parity(b)) % 2;
                            int pcd = (ra.alg.parity(c) + ra.alg.parity(d)) % 2;
                            SuperMatrix lhs = graded_commutator(ra.at(a, b, m), pab,
                                                                ra.at(c, d, nn), pcd);
                            SuperMatrix rhs(ra.carrier);
                            int top = m + nn - 1;
                            if (c == b) rhs += ra.at(a, d, top);
                            if (a == d) {
                                SuperMatrix t = ra.at(c, b, top);
                                if (pab * pcd % 2)
                                    rhs += t;
                                else
                                    rhs -= t;
                            }
                            int qsign = (ra.alg.parity(c) * (pab) + ra.alg.parity(a) * ra.alg.parity(b)) % 2
                                            ? -1
                                            : 1;
                            for (int r = 1; r <= std::min(m, nn) - 1; ++r) {
                                SuperMatrix quad = ra.at(c, b, r) * ra.at(a, d, top - r) -
                                                   ra.at(c, b, top - r) * ra.at(a, d, r);
                                if (qsign < 0)
                                    rhs -= quad;
                                else
                                    rhs += quad;
                            }
                            ++rep.checks;
                            if (!(lhs - rhs).is_zero())
                                rep.violations.push_back({a, b, m, c, d, nn});
                        }
    return rep;
}

namespace {

// Embeds a matrix on (aux (x) V1) into (aux (x) V1 (x) V2): identity on the
// trailing slot needs no Koszul sign.
SuperMatrix embed_av1(const SuperMatrix& m, const Parities& v2) {
    Parities tot = tensor_space(m.space(), v2);
    SuperMatrix r(tot);
    int n2 = static_cast<int>(v2.size());
    for (const auto& [rc, v] : m.entries())
        for (int k = 1; k <= n2; ++k)
            r.add_to((rc.first - 1) * n2 + k, (rc.second - 1) * n2 + k, v);
    return r;
}

// Embeds a matrix on (aux (x) V2) into (aux (x) V1 (x) V2): identity on the
// middle slot, Koszul sign for moving the V2 part of the entry past V1.
SuperMatrix embed_av2(const SuperMatrix& m, const Parities& aux, const Parities& v1,
                      const Parities& v2) {
    Parities tot = tensor_space(tensor_space(aux, v1), v2);
    SuperMatrix r(tot);
    int n2 = static_cast<int>(v2.size()), n1 = static_cast<int>(v1.size());
    for (const auto& [rc, v] : m.entries()) {
        int a = (rc.first - 1) / n2 + 1, i = (rc.first - 1) % n2 + 1;
        int b = (rc.second - 1) / n2 + 1, j = (rc.second - 1) % n2 + 1;
        int pv2 = (v2[i - 1] + v2[j - 1]) % 2;
        for (int k = 1; k <= n1; ++k) {
            int row = ((a - 1) * n1 + (k - 1)) * n2 + i;
            int col = ((b - 1) * n1 + (k - 1)) * n2 + j;
            r.add_to(row, col, (pv2 && v1[k - 1]) ? Rat(0) - v : v);
        }
    }
    return r;
}

// Dressed L-operator matrix of an assignment at one mode level:
// sum_ab (-1)^{[a][b]} E_ab (x) T^{ab}_(m). The dressing makes the matrix
// exchange relation hold with R = 1 - P/u, so products of L's fuse (graded
// Yang-Baxter equation); components are undressed by the same sign.
SuperMatrix l_mode(const RepAssignment& ra, const Parities& aux, int m) {
    const GradedDim& d = ra.alg;
    int n = d.dim();
    Parities space = tensor_space(aux, ra.carrier);
    SuperMatrix x(space);
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) {
            SuperMatrix op = ra.at(a, b, m);
            if (op.is_zero()) continue;
            Rat eps(d.parity(a) * d.parity(b) ? -1 : 1);
            x += eps * graded_tensor(SuperMatrix::unit(aux, a, b), op);
        }
    return x;
}

RepAssignment fuse_pair(const RepAssignment& r1, const RepAssignment& r2) {
    const GradedDim& d = r1.alg;
    int n = d.dim();
    Parities aux = parities_of(d);
    RepAssignment out;
    out.alg = d;
    out.cutoff = r1.cutoff + r2.cutoff;
    out.carrier = tensor_space(r1.carrier, r2.carrier);
    int dim = static_cast<int>(out.carrier.size());

    std::vector<SuperMatrix> l1(r1.cutoff + 1), l2(r2.cutoff + 1);
    for (int m = 0; m <= r1.cutoff; ++m) l1[m] = embed_av1(l_mode(r1, aux, m), r2.carrier);
    for (int m = 0; m <= r2.cutoff; ++m)
        l2[m] = embed_av2(l_mode(r2, aux, m), aux, r1.carrier, r2.carrier);

    for (int r = 1; r <= out.cutoff; ++r) {
        Parities big = tensor_space(aux, out.carrier);
        SuperMatrix mode(big);
        for (int m1 = std::max(0, r - r2.cutoff); m1 <= std::min(r, r1.cutoff); ++m1)
            mode += l1[m1] * l2[r - m1];
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b) {
                SuperMatrix op(out.carrier);
                for (const auto& [rc, v] : mode.entries()) {
                    if ((rc.first - 1) / dim + 1 != a || (rc.second - 1) / dim + 1 != b) continue;
                    int i = (rc.first - 1) % dim + 1, j = (rc.second - 1) % dim + 1;
                    int sg = (out.carrier[i - 1] + out.carrier[j - 1]) * d.parity(b) % 2;
                    op.add_to(i, j, sg ? Rat(0) - v : v);
                }
                Rat eps(d.parity(a) * d.parity(b) ? -1 : 1);
                op = eps * op;
                if (!op.is_zero()) out.op[{a, b, r}] = op;
            }
    }
    return out;
}

}  // namespace

RepAssignment tensor_eval(const std::vector<RepAssignment>& reps) {
    if (reps.empty()) throw ConfigError("tensor_eval: need at least one factor");
    const GradedDim& alg = reps.front().alg;
    for (const auto& r : reps)
        if (!(r.alg == alg)) throw ConfigError("tensor_eval: mismatched algebras");
    RepAssignment out = reps.front();
    for (std::size_t k = 1; k < reps.size(); ++k) out = fuse_pair(out, reps[k]);
    return out;
}

HighestWeightData highest_weight(const RepAssignment& ra) {
    HighestWeightData hw;
    int n = ra.alg.dim();
    int dim = static_cast<int>(ra.carrier.size());
    std::vector<const SuperMatrix*> raising;
    std::vector<SuperMatrix> storage;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            for (int r = 1; r <= ra.cutoff; ++r) {
                SuperMatrix m = ra.at(a, b, r);
                if (!m.is_zero()) storage.push_back(std::move(m));
            }
    for (const auto& m : storage) raising.push_back(&m);

    RatMatrix stacked(static_cast<int>(raising.size()) * dim, dim);
    int row = 0;
    for (const auto* m : raising) {
        for (const auto& [rc, v] : m->entries()) stacked.at(row + rc.first - 1, rc.second - 1) = v;
        row += dim;
    }
    auto basis = nullspace(stacked);
    hw.kernel_dim = static_cast<int>(basis.size());
    hw.unique = hw.kernel_dim == 1;
    if (hw.kernel_dim == 0) return hw;
    hw.vplus = basis.front();
    if (!hw.unique) return hw;

    hw.diagonal_ok = true;
    int lead = 0;
    while (lead < dim && hw.vplus[lead].is_zero()) ++lead;
    for (int a = 1; a <= n; ++a)
        for (int r = 1; r <= ra.cutoff; ++r) {
            SuperMatrix m = ra.at(a, a, r);
            std::vector<Rat> image(dim, Rat(0));
            for (const auto& [rc, v] : m.entries())
                image[rc.first - 1] += v * hw.vplus[rc.second - 1];
            Rat lam = image[lead] / hw.vplus[lead];
            for (int i = 0; i < dim; ++i)
                if (image[i] != lam * hw.vplus[i]) hw.diagonal_ok = false;
            if (!lam.is_zero()) hw.lambda[{a, r}] = lam;
        }
    return hw;
}

namespace {

// floor of an exact rational
Rat rat_floor(const Rat& r) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), r.raw().get_num().get_mpz_t(), r.raw().get_den().get_mpz_t());
    return Rat(mpq_class(q));
}

using RootMultiset = std::map<Rat, int>;

void cancel_common(RootMultiset& a, RootMultiset& b) {
    for (auto it = a.begin(); it != a.end();) {
        auto jt = b.find(it->first);
        if (jt != b.end()) {
            int c = std::min(it->second, jt->second);
            it->second -= c;
            jt->second -= c;
            if (jt->second == 0) b.erase(jt);
            if (it->second == 0) {
                it = a.erase(it);
                continue;
            }
        }
        ++it;
    }
}

}  // namespace

DrinfeldResult drinfeld_check(const DrinfeldInput& in, const GradedDim& d) {
    DrinfeldResult res;
    int total = d.dim();
    if (static_cast<int>(in.numerators.size()) != total)
        throw ConfigError("drinfeld_check: need one numerator list per index");
    for (const auto& lst : in.numerators)
        for (const auto& [root, mult] : lst)
            if (mult < 0) throw ConfigError("drinfeld_check: negative multiplicity");

    auto degree = [&](int a) {
        int deg = 0;
        for (const auto& [root, mult] : in.numerators[a - 1]) deg += mult;
        return deg;
    };
    auto roots_of = [&](int a) {
        RootMultiset r;
        for (const auto& [root, mult] : in.numerators[a - 1])
            if (mult > 0) r[root] += mult;
        return r;
    };

    for (int a = 1; a < total; ++a) {
        RootMultiset num = roots_of(a), den = roots_of(a + 1);
        num[Rat(0)] += degree(a + 1);
        den[Rat(0)] += degree(a);
        cancel_common(num, den);

        if (a == d.even) {
            // boundary position: equal-degree (1 - r/u) form always closes
            std::vector<Rat>&wt = res.witness_tilde, &w = res.witness[a];
            for (const auto& [root, mult] : num)
                for (int i = 0; i < mult; ++i) wt.push_back(root);
            for (const auto& [root, mult] : den)
                for (int i = 0; i < mult; ++i) w.push_back(root);
            continue;
        }

        // group the reduced ratio by integer-shift class
        std::map<Rat, std::pair<std::vector<Rat>, std::vector<Rat>>> classes;
        for (const auto& [root, mult] : num) {
            Rat frac = root - rat_floor(root);
            for (int i = 0; i < mult; ++i) classes[frac].first.push_back(root);
        }
        for (const auto& [root, mult] : den) {
            Rat frac = root - rat_floor(root);
            for (int i = 0; i < mult; ++i) classes[frac].second.push_back(root);
        }
        for (auto& [frac, nd] : classes) {
            auto& [nu, de] = nd;
            if (nu.size() != de.size()) {
                res.reason = "position " + std::to_string(a) + ": unbalanced shift class";
                return res;
            }
            std::sort(nu.rbegin(), nu.rend());
            std::sort(de.rbegin(), de.rend());
            for (std::size_t i = 0; i < nu.size(); ++i) {
                if (!(nu[i] < de[i])) {
                    res.reason = "position " + std::to_string(a) + ": no downward shift chain";
                    return res;
                }
                // chain of witness roots de[i], de[i]-1, ..., nu[i]+1
                for (Rat g = de[i]; nu[i] < g; g -= Rat(1)) res.witness[a].push_back(g);
            }
        }
    }
    res.accepted = true;
    return res;
}

}  // namespace superw
