#include "doctest.h"

#include "superw/jbasis.hpp"

using namespace superw;

TEST_CASE("principal sl2") {
    Sl2Triple t1 = build_principal_sl2(1);
    CHECK(t1.eplus.is_zero());
    CHECK(t1.eminus.is_zero());
    CHECK(t1.ezero.is_zero());

    Sl2Triple t2 = build_principal_sl2(2);
    CHECK(t2.eplus.at(1, 2) == Rat(1, 2));
    CHECK(t2.ezero.at(1, 1) == Rat(1, 2));
    CHECK(t2.ezero.at(2, 2) == Rat(-1, 2));
    CHECK(commutator(t2.eplus, t2.eminus) == t2.ezero);

    Sl2Triple t3 = build_principal_sl2(3);
    CHECK(commutator(t3.ezero, t3.eplus) == t3.eplus);
    CHECK_THROWS_AS(build_principal_sl2(0), ConfigError);
}

TEST_CASE("M_jm normalization") {
    for (int p = 1; p <= 5; ++p) {
        MjmBasis mjm(p);  // adjoint identities verified inside the constructor
        CHECK(mjm.at(0, 0) == SuperMatrix::identity(ungraded_space(p)));
    }
    MjmBasis m2(2);
    CHECK(m2.at(1, -1) == Rat(-2) * SuperMatrix::unit(ungraded_space(2), 2, 1));
    CHECK(trace(m2.at(1, -1) * m2.at(1, 1)) == Rat(-2));
}

TEST_CASE("trace pairing matches the closed form") {
    // tr(M_{k,-k} M_{kk}) = (-1)^k (2k)! (k!)^2 binom(p+k, 2k+1)
    for (int p = 1; p <= 5; ++p) {
        MjmBasis mjm(p);
        for (int k = 0; k < p; ++k) {
            Rat expect = rat_factorial(2 * k) * rat_factorial(k) * rat_factorial(k) *
                         rat_binomial(p + k, 2 * k + 1);
            if (k % 2) expect = -expect;
            CHECK(trace(mjm.at(k, -k) * mjm.at(k, k)) == expect);
        }
    }
}

TEST_CASE("clebsch coefficients") {
    ClebschTable cg2(2);
    CHECK(cg2.eta(0) == Rat(2));  // eta_0 = p
    CHECK(cg2.cg(1, -1, 1, 1, 0, 0) == Rat(-1));

    for (int p = 1; p <= 4; ++p) {
        ClebschTable cg(p);
        // <0,0; j,m | j,m> = 1
        for (int j = 0; j < p; ++j)
            for (int m = -j; m <= j; ++m) CHECK(cg.cg(0, 0, j, m, j, m) == Rat(1));
        // swap symmetry with the (-1)^{j+t+r} rule on every entry
        for (const auto& [key, val] : cg.entries()) {
            auto [j, m, k, l, r, s] = key;
            Rat swapped = cg.cg(k, l, j, m, r, s);
            CHECK(val == (((j + k + r) % 2) ? -swapped : swapped));
        }
        // eta closed form
        for (int j = 0; j < p; ++j)
            CHECK(cg.eta(j) == rat_factorial(2 * j) * rat_factorial(j) * rat_factorial(j) *
                                   rat_binomial(p + j, 2 * j + 1));
    }
}

TEST_CASE("J-basis structure constants") {
    // j = l = 0 block is the plain gl(M|N) bracket
    GradedDim d(1, 1);
    JBasisStructure st(d, 2);
    for (int a = 1; a <= 2; ++a)
        for (int b = 1; b <= 2; ++b)
            for (int c = 1; c <= 2; ++c)
                for (int e = 1; e <= 2; ++e) {
                    Poly got = st.table().bracket(st.sym(0, 0, a, b), st.sym(0, 0, c, e));
                    Poly expect;
                    if (c == b) expect += Poly(st.sym(0, 0, a, e));
                    int koszul = ((d.parity(a) + d.parity(b)) * (d.parity(c) + d.parity(e))) % 2;
                    if (a == e) expect += Poly(st.sym(0, 0, c, b), Rat(koszul ? 1 : -1));
                    CHECK(got == expect);
                }
    CHECK(st.verify_supertrace_pairing());
    CHECK(check_jacobi(st.table()).pass());
}

TEST_CASE("tau automorphism of gl(Mp|2np)") {
    ThetaData th(1, 1);
    GradedDim d(1, 2);
    JBasisStructure st(d, 2);

    // tau(J_{1m}^{11}) = J_{1m}^{11} at M=1, n=1
    for (int m = -1; m <= 1; ++m) {
        auto [sign, img] = tau_J(st.sym(1, m, 1, 1), th, d);
        CHECK(sign == 1);
        CHECK(img == st.sym(1, m, 1, 1));
    }

    TauReport rep = check_tau_on_J(st, th);
    CHECK(rep.involution_ok);
    CHECK(rep.bracket_violations.empty());
    CHECK(rep.pairs_checked > 0);
}

TEST_CASE("folding gl(2|4) at p = 2") {
    ThetaData th(1, 1);
    GradedDim d(1, 2);
    JBasisStructure st(d, 2);
    FoldReport rep = fold_fixed_subalgebra(st, th);
    CHECK(rep.symmetry_ok);
    CHECK(rep.closure_ok);
    CHECK(rep.formula_ok);
    // The self-paired component J^{a, bar a}_{jm} survives in K iff
    // (-1)^{j+1+[a]} = +1, which at even p yields the parity-swapped
    // orthosymplectic count: dim osp(4|2) = 17, not dim osp(2|4) = 19.
    CHECK(rep.expected_dim == 19);
    CHECK(rep.expected_dim_swapped == 17);
    CHECK(rep.fixed_dim == 17);
    CHECK(rep.fixed_dim_even == 9);
    CHECK(rep.fixed_dim_odd == 8);
    CHECK(rep.dims_match_swapped());
    CHECK(!rep.dims_match_osp());
}

TEST_CASE("folding gl(3|6) at p = 3 gives osp(3|6)") {
    ThetaData th(1, 1);
    GradedDim d(1, 2);
    JBasisStructure st(d, 3);
    FoldReport rep = fold_fixed_subalgebra(st, th);
    CHECK(rep.symmetry_ok);
    CHECK(rep.closure_ok);
    CHECK(rep.formula_ok);
    CHECK(rep.expected_dim == 42);  // q(q-1)/2 + r(2r+1) + 2qr at q = r = 3
    CHECK(rep.fixed_dim == 42);
    CHECK(rep.fixed_dim_even == 24);
    CHECK(rep.fixed_dim_odd == 18);
    CHECK(rep.pass());
}
