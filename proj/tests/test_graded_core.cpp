#include "doctest.h"

#include <random>

#include "superw/supermatrix.hpp"

using namespace superw;

TEST_CASE("supertrace of identities and units") {
    GradedDim g21(2, 1);
    CHECK(supertrace(SuperMatrix::identity(parities_of(g21))) == Rat(1));
    GradedDim g22(2, 2);
    CHECK(supertrace(SuperMatrix::identity(parities_of(g22))) == Rat(0));
    // E_{M+1,M+1} sits on the odd diagonal
    CHECK(supertrace(SuperMatrix::unit(parities_of(g21), 3, 3)) == Rat(-1));
}

TEST_CASE("graded tensor sign rule in gl(1|1)") {
    GradedDim d(1, 1);
    Parities sp = parities_of(d);
    auto E = [&](int a, int b) { return SuperMatrix::unit(sp, a, b); };
    SuperMatrix lhs = graded_tensor(E(1, 2), E(2, 1)) * graded_tensor(E(2, 1), E(1, 2));
    SuperMatrix rhs = Rat(-1) * graded_tensor(E(1, 1), E(2, 2));
    CHECK(lhs == rhs);

    SuperMatrix id = SuperMatrix::identity(sp);
    SuperMatrix ab = graded_tensor(E(1, 2), E(2, 2));
    CHECK(graded_tensor(id, id) * ab == ab);
}

TEST_CASE("all-even tensor is the plain Kronecker product") {
    Parities sp = ungraded_space(2);
    SuperMatrix a(sp), b(sp);
    a.set(1, 2, Rat(3));
    a.set(2, 2, Rat(1, 2));
    b.set(2, 1, Rat(-5));
    SuperMatrix t = graded_tensor(a, b);
    CHECK(t.at(2, 3) == Rat(-15));       // (1,2)x(2,1)
    CHECK(t.at(4, 3) == Rat(-5, 2));     // (2,2)x(2,1)
}

TEST_CASE("P squares to the identity") {
    for (auto [m, n] : {std::pair{1, 0}, {1, 1}, {2, 1}, {2, 2}}) {
        GradedDim d(m, n);
        SuperMatrix p = permutation_P(d);
        Parities sq = tensor_space(parities_of(d), parities_of(d));
        CHECK(p * p == SuperMatrix::identity(sq));
    }
    CHECK(permutation_P(GradedDim(1, 0)) == SuperMatrix::identity(ungraded_space(1)));
}

TEST_CASE("theta invariants") {
    for (auto [m, n] : {std::pair{1, 1}, {2, 1}, {2, 2}, {3, 2}}) {
        ThetaData th(m, n);
        GradedDim d = th.dims();
        for (int a = 1; a <= d.dim(); ++a) {
            int lhs = (d.parity(a) ? -1 : 1) * th.theta(a) * th.theta(th.bar(a));
            CHECK(lhs == 1);
            CHECK(d.parity(th.bar(a)) == d.parity(a));
            CHECK(th.bar(th.bar(a)) == a);
        }
    }
}

TEST_CASE("transposition t on gl(1|2)") {
    ThetaData th(1, 1);
    Parities sp = parities_of(th.dims());
    auto E = [&](int a, int b) { return SuperMatrix::unit(sp, a, b); };
    CHECK(transpose_t(E(1, 1), th) == E(1, 1));
    CHECK(transpose_t(E(2, 3), th) == Rat(-1) * E(2, 3));
    CHECK(transpose_t(SuperMatrix(sp), th) == SuperMatrix(sp));
}

TEST_CASE("order of the transposition") {
    // t^2 = id in this sign convention (recorded; not assumed elsewhere)
    for (auto [m, n] : {std::pair{1, 1}, {2, 1}, {2, 2}}) {
        ThetaData th(m, n);
        Parities sp = parities_of(th.dims());
        for (int a = 1; a <= th.dim(); ++a)
            for (int b = 1; b <= th.dim(); ++b) {
                SuperMatrix e = SuperMatrix::unit(sp, a, b);
                CHECK(transpose_t(transpose_t(e, th), th) == e);
            }
    }
}

TEST_CASE("q operator") {
    ThetaData th10(1, 0);
    CHECK(q_operator(th10) == SuperMatrix::identity(ungraded_space(1)));

    ThetaData th(1, 1);
    SuperMatrix q = q_operator(th);
    // Q^2 = kappa Q with kappa = M - 2n (regression value -1 here)
    CHECK(q * q == Rat(-1) * q);
    for (const auto& [rc, v] : q.entries()) CHECK((v == Rat(1) || v == Rat(-1)));

    ThetaData th21(2, 1);
    SuperMatrix q21 = q_operator(th21);
    CHECK(q21 * q21 == Rat(0) * q21);  // kappa = 0 for gl(2|2)
}

TEST_CASE("supertrace is multiplicative over graded tensor") {
    std::mt19937 rng(20240817);
    GradedDim d(2, 1);
    Parities sp = parities_of(d);
    auto random_matrix = [&]() {
        SuperMatrix m(sp);
        std::uniform_int_distribution<int> idx(1, 3), val(-4, 4);
        for (int k = 0; k < 5; ++k) m.set(idx(rng), idx(rng), Rat(val(rng)));
        return m;
    };
    for (int trial = 0; trial < 25; ++trial) {
        SuperMatrix a = random_matrix(), b = random_matrix();
        CHECK(supertrace(graded_tensor(a, b)) == supertrace(a) * supertrace(b));
    }
}

TEST_CASE("invariant metric symmetry on the E-basis") {
    for (auto [m, n] : {std::pair{1, 1}, {2, 1}}) {
        GradedDim d(m, n);
        Parities sp = parities_of(d);
        int dim = d.dim();
        for (int a = 1; a <= dim; ++a)
            for (int b = 1; b <= dim; ++b)
                for (int c = 1; c <= dim; ++c)
                    for (int e = 1; e <= dim; ++e) {
                        int pab = (d.parity(a) + d.parity(b)) % 2;
                        int pce = (d.parity(c) + d.parity(e)) % 2;
                        Rat gab = supertrace(SuperMatrix::unit(sp, a, b) * SuperMatrix::unit(sp, c, e));
                        Rat gba = supertrace(SuperMatrix::unit(sp, c, e) * SuperMatrix::unit(sp, a, b));
                        if (pab != pce) CHECK(gab == Rat(0));
                        CHECK(gab == ((pab * pce) % 2 ? -gba : gba));
                    }
    }
}
