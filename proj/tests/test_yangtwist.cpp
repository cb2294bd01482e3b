#include "doctest.h"

#include "superw/bar_basis.hpp"
#include "superw/dirac.hpp"
#include "superw/folding.hpp"
#include "superw/solder.hpp"
#include "superw/twisted.hpp"
#include "superw/yangian.hpp"

using namespace superw;

TEST_CASE("yangian table modes") {
    GradedDim d(1, 1);
    YangianTable yt(d, 2);
    // {T_(1)^{ab}, T_(1)^{cd}} has no quadratic tail
    for (int a = 1; a <= 2; ++a)
        for (int b = 1; b <= 2; ++b)
            for (int c = 1; c <= 2; ++c)
                for (int dd = 1; dd <= 2; ++dd) {
                    Poly got = yt.table().bracket(yt.t(1, a, b), yt.t(1, c, dd));
                    Poly expect;
                    if (c == b) expect += Poly(yt.t(1, a, dd));
                    int k = ((d.parity(a) + d.parity(b)) * (d.parity(c) + d.parity(dd))) % 2;
                    if (a == dd) expect += Poly(yt.t(1, c, b), Rat(k ? 1 : -1));
                    CHECK(got == expect);
                }
    // {T_(2), T_(2)} is purely quadratic: T_(3) = 0 under truncation
    Poly t22 = yt.table().bracket(yt.t(2, 1, 1), yt.t(2, 2, 2));
    for (const auto& [mono, c] : t22.terms()) CHECK(mono.degree() == 2);
}

TEST_CASE("yangian tables pass jacobi") {
    CHECK(check_jacobi(YangianTable(GradedDim(1, 1), 2).table()).pass());
    CHECK(check_jacobi(YangianTable(GradedDim(2, 1), 2).table()).pass());
}

TEST_CASE("truncation ideal membership") {
    for (auto [M, N, p] : {std::tuple{1, 1, 1}, {1, 1, 2}, {2, 1, 2}}) {
        IdealReport rep = verify_poisson_ideal(GradedDim(M, N), p);
        CHECK(rep.pass());
        CHECK(rep.pairs_checked > 0);
    }
}

TEST_CASE("classical RTT matrix form of the mode table") {
    // (u-v){T~_1(u),T~_2(v)} = P T~_1 T~_2 - T~_2 T~_1 P for the
    // column-twisted component matrices; validates the graded kron and
    // bracket-matrix machinery against the mode table
    GradedDim d(1, 1);
    int p = 2;
    YangianTable yt(d, p);
    int n = d.dim();
    PolyMatrix pm = PolyMatrix::lift(permutation_P(d));
    auto tmat = [&](int m) {
        PolyMatrix r(n);
        if (m == 0) return PolyMatrix::identity(n);
        if (m > p) return r;
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b) r.at(a, b) = Poly(yt.t(m, a, b));
        return column_twist(r, d);
    };
    UVPoly t1u, t2v, lhs;
    for (int m = 0; m <= p; ++m) {
        t1u.add(-m, 0, kron_first(tmat(m), d));
        t2v.add(0, -m, kron_second(tmat(m), d));
    }
    for (int q = 0; q <= p; ++q)
        for (int r = 0; r <= p; ++r)
            lhs.add(-q, -r, pb_matrix(kron_first(tmat(q), d), kron_second(tmat(r), d), yt.table()));
    UVPoly puv = UVPoly::monomial(0, 0, pm);
    UVPoly rhs = puv * t1u * t2v - t2v * t1u * puv;
    CHECK(lhs.shifted(1, 0) - lhs.shifted(0, 1) == rhs);
}

TEST_CASE("isomorphism with the W table") {
    GradedDim d(1, 1);
    int p = 2;
    ClebschTable cg(p);
    SolderState st = solve_lambda(d, p, cg);
    BracketTable wt = solder_brackets(st);
    BarBasis minus(-1, wt, d, p);
    YangianTable yt(d, p);
    IsoReport rep = iso_check(yt, wt, minus);
    CHECK(rep.pass());
    CHECK(rep.pairs_checked > 0);
}

TEST_CASE("tau preserves the truncated yangian table") {
    ThetaData th(1, 1);
    YangianTable yt(GradedDim(1, 2), 2);
    TauYangianReport rep = check_tau_on_yangian(yt, th);
    CHECK(rep.pass());
}

TEST_CASE("S generators") {
    ThetaData th(1, 1);
    GradedDim d(1, 2);
    YangianTable yt(d, 2);
    SGenerators s(yt, th);

    // S_(0) = identity
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
            CHECK(s.at(0, a, b) == (a == b ? Poly(Rat(1)) : Poly()));

    // S_(1)^{ab} = T_(1)^{ab} - (-1)^{[a]([b]+1)} th_a th_b T_(1)^{bar b bar a}
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b) {
            Poly expect(yt.t(1, a, b));
            int sg = (d.parity(a) * (d.parity(b) + 1)) % 2 ? -1 : 1;
            sg *= th.theta(a) * th.theta(b);
            expect += Poly(yt.t(1, th.bar(b), th.bar(a)), Rat(-sg));
            CHECK(s.at(1, a, b) == expect);
        }

    CHECK(s.symmetry_ok());
}

TEST_CASE("twisted reflection bracket at (1,2,1)") {
    ThetaData th(1, 1);
    GradedDim d(1, 2);
    YangianTable yt(d, 1);
    SGenerators s(yt, th);
    TwistReport rep = twisted_pb_check(s, yt);
    CHECK(rep.symmetry_ok);
    CHECK(rep.antidiagonals_ok);
    CHECK(rep.relation_modes_ok);
    CHECK(rep.cleared_identity_ok);
    // the naive classical S polynomials do not close in the graded case;
    // the report documents the counterexample
    CHECK(!rep.s_polynomials_close);
    CHECK(!rep.closure_note.empty());
}

TEST_CASE("twisted reflection bracket at (1,2,2)") {
    ThetaData th(1, 1);
    GradedDim d(1, 2);
    YangianTable yt(d, 2);
    SGenerators s(yt, th);
    TwistReport rep = twisted_pb_check(s, yt);
    CHECK(rep.pass());
}

TEST_CASE("twisted symbolic table passes jacobi at (1,2,1)") {
    ThetaData th(1, 1);
    GradedDim d(1, 2);
    BracketTable t = twisted_symbolic_table(d, th, 1);
    CHECK(t.domain().size() == 5);  // dim osp(1|2)
    CHECK(check_jacobi(t).pass());
}

TEST_CASE("folding at (1,2,1) gives the orthosymplectic table") {
    ThetaData th(1, 1);
    GradedDim d(1, 2);
    YangianTable yt(d, 1);
    FoldCompareReport rep = fold_and_compare(yt, th);
    CHECK(rep.substitution_idempotent);
    CHECK(rep.k_symmetry_ok);
    CHECK(rep.component_counts_ok);
    CHECK(rep.folded_display_ok);
    CHECK(rep.twisted_match_ok);
}

TEST_CASE("orthosymplectic evaluation inclusion") {
    // S(u) = 1 + F/u with F = 2 K_(1) over the folded p=1 table satisfies
    // the reflection relation
    CHECK(osp_inclusion_check(ThetaData(1, 1)));
    CHECK(osp_inclusion_check(ThetaData(2, 1)));
}
