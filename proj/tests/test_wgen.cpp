#include "doctest.h"

#include "oracles.hpp"
#include "superw/bar_basis.hpp"
#include "superw/dirac.hpp"
#include "superw/polymatrix.hpp"
#include "superw/solder.hpp"

using namespace superw;

namespace {

struct WAlgebra {
    GradedDim d;
    int p;
    ClebschTable cg;
    SolderState state;
    BracketTable table;
    WAlgebra(int M, int N, int p_)
        : d(M, N), p(p_), cg(p_), state(solve_lambda(d, p_, cg)), table(solder_brackets(state)) {}
};

}  // namespace

TEST_CASE("lambda recursion basics at (1,1,2)") {
    WAlgebra w(1, 1, 2);
    CHECK(w.state.free_parameter_count() == 8);
    // base of the recursion: lambda_{k,-k} is the free parameter itself
    for (int k = 0; k < 2; ++k)
        for (int a = 1; a <= 2; ++a)
            for (int b = 1; b <= 2; ++b) {
                const Poly& lam = w.state.lambda(k, -k, a, b);
                REQUIRE(lam.terms().size() == 1);
                const auto& [mono, c] = *lam.terms().begin();
                CHECK(mono.factors().front().first.family == Family::Lambda);
                CHECK(c == Rat(k % 2 ? -1 : 1) / w.cg.eta(k));
            }
    // number of free parameters for (1,1,3) is 4*3
    GradedDim d(1, 1);
    ClebschTable cg3(3);
    SolderState st3 = solve_lambda(d, 3, cg3);
    CHECK(st3.free_parameter_count() == 12);
}

TEST_CASE("gauge transformation preserves the constrained current") {
    // independent matrix oracle: [lambda, J|g.f.] must have no components
    // below the highest weights, and its (j,j) components must reproduce
    // delta_lambda W_j
    for (auto [M, N, p] : {std::tuple{1, 1, 2}, {1, 1, 3}, {2, 1, 2}}) {
        GradedDim d(M, N);
        ClebschTable cg(p);
        SolderState st = solve_lambda(d, p, cg);
        int n = d.dim();
        int big = n * p;

        auto fund = [&](int j, int m, int a, int b) {
            return graded_tensor(cg.mjm().at(j, m), SuperMatrix::unit(parities_of(d), a, b));
        };
        auto add_scaled = [&](PolyMatrix& acc, const Poly& coeff, const SuperMatrix& mat) {
            for (const auto& [rc, v] : mat.entries()) acc.at(rc.first, rc.second) += v * coeff;
        };

        PolyMatrix lam(big), current(big);
        for (int j = 0; j < p; ++j)
            for (int m = -j; m <= j; ++m)
                for (int a = 1; a <= n; ++a)
                    for (int b = 1; b <= n; ++b)
                        add_scaled(lam, st.lambda(j, m, a, b), fund(j, m, a, b));
        // literal eps_- = e_- (x) 1 = -(1/2) M_{1,-1} (x) 1
        for (int a = 1; a <= n; ++a) add_scaled(current, Poly(Rat(-1, 2)), fund(1, -1, a, a));
        for (int j = 0; j < p; ++j)
            for (int a = 1; a <= n; ++a)
                for (int b = 1; b <= n; ++b)
                    add_scaled(current, Poly(st.w(j, a, b)), fund(j, j, a, b));

        PolyMatrix comm = lam * current - current * lam;

        // decompose through the supertrace pairing
        Parities composite = tensor_space(ungraded_space(p), parities_of(d));
        auto component = [&](int j, int m, int a, int b) {
            SuperMatrix dual = fund(j, -m, b, a);
            Poly tr;
            for (const auto& [rc, v] : dual.entries()) {
                Poly term = v * comm.at(rc.second, rc.first);
                tr += composite[rc.second - 1] ? -term : term;
            }
            Rat scale = Rat((m % 2 ? -1 : 1) * (d.parity(a) ? -1 : 1)) / cg.eta(j);
            return scale * tr;
        };

        for (int j = 0; j < p; ++j)
            for (int a = 1; a <= n; ++a)
                for (int b = 1; b <= n; ++b) {
                    for (int m = -j; m < j; ++m) CHECK(component(j, m, a, b).is_zero());
                    CHECK(component(j, j, a, b) == delta_w(st, j, a, b));
                }
    }
}

TEST_CASE("solder row 0 equals the closed form") {
    for (auto [M, N, p] : {std::tuple{1, 1, 2}, {2, 1, 2}, {1, 2, 2}, {1, 1, 3}}) {
        WAlgebra w(M, N, p);
        int n = w.d.dim();
        for (int k = 0; k < p; ++k)
            for (int a = 1; a <= n; ++a)
                for (int b = 1; b <= n; ++b)
                    for (int c = 1; c <= n; ++c)
                        for (int dd = 1; dd <= n; ++dd)
                            CHECK(w.table.bracket(w.state.w(0, a, b), w.state.w(k, c, dd)) ==
                                  oracles::pb_w0_rhs(w.d, p, k, a, b, c, dd));
    }
}

TEST_CASE("solder bracket example in W_2(1|1)") {
    WAlgebra w(1, 1, 2);
    Poly got = w.table.bracket(w.state.w(0, 1, 2), w.state.w(0, 2, 1));
    Poly expect = Rat(1, 2) * (Poly(w.state.w(0, 1, 1)) + Poly(w.state.w(0, 2, 2)));
    CHECK(got == expect);
}

TEST_CASE("solder row 1 equals the closed form") {
    for (auto [M, N, p] : {std::tuple{1, 1, 2}, {2, 1, 2}, {1, 2, 2}, {1, 1, 3}}) {
        WAlgebra w(M, N, p);
        int n = w.d.dim();
        for (int r = 0; r < p; ++r)
            for (int a = 1; a <= n; ++a)
                for (int b = 1; b <= n; ++b)
                    for (int c = 1; c <= n; ++c)
                        for (int dd = 1; dd <= n; ++dd)
                            CHECK(w.table.bracket(w.state.w(1, a, b), w.state.w(r, c, dd)) ==
                                  oracles::pb_w1_rhs(w.d, p, r, a, b, c, dd));
    }
}

TEST_CASE("solder table passes jacobi at (1,1,2)") {
    WAlgebra w(1, 1, 2);
    CHECK(check_jacobi(w.table).pass());
}

TEST_CASE("trace generator is central") {
    WAlgebra w(1, 1, 2);
    Poly w00;
    for (int a = 1; a <= 2; ++a) w00 += Poly(w.state.w(0, a, a));
    for (const auto& g : w.table.domain())
        CHECK(poisson_bracket(w00, Poly(g), w.table).is_zero());
}

TEST_CASE("dirac brackets reproduce the soldering table") {
    GradedDim d(1, 1);
    JBasisStructure st(d, 2);
    BracketTable dirac = dirac_brackets(st);
    WAlgebra w(1, 1, 2);
    CHECK(dirac.domain() == w.table.domain());
    for (const auto& [xy, poly] : w.table.entries())
        CHECK(dirac.bracket(xy.first, xy.second) == poly);
}

TEST_CASE("constraint matrix data") {
    GradedDim d(1, 1);
    JBasisStructure st(d, 2);
    DiracData data = build_dirac_data(st);
    CHECK(data.constraints.phi.size() == 8);  // (m<j) pairs x (M+N)^2 = 2*4
    CHECK(data.nilpotency_order <= 8);
    // the constant block comes from the eps_- shift and must be invertible
    CHECK(inverse(data.delta0).has_value());
}

TEST_CASE("bar basis closed forms") {
    for (auto [M, N, p] : {std::tuple{1, 1, 2}, {1, 1, 3}, {2, 1, 2}}) {
        WAlgebra w(M, N, p);
        int n = w.d.dim();
        BarBasis minus(-1, w.table, w.d, p);
        BarBasis plus(+1, w.table, w.d, p);

        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b)
                CHECK(minus.at(0, a, b) == Poly(w.state.w(0, a, b), Rat(p)));

        if (p == 2) {
            // -Wbar_1^{ab} = -W_1^{ab} + sum_e (-1)^{[e]} W_0^{ae} W_0^{eb}
            for (int a = 1; a <= n; ++a)
                for (int b = 1; b <= n; ++b) {
                    Poly expect(w.state.w(1, a, b), Rat(-1));
                    for (int e = 1; e <= n; ++e) {
                        Poly t = Poly(w.state.w(0, a, e)) * Poly(w.state.w(0, e, b));
                        expect += w.d.parity(e) ? -t : t;
                    }
                    CHECK(minus.at(1, a, b) == expect);
                }
        }

        // alpha closed forms for all j <= p-1
        for (int j = 0; j < p; ++j) {
            Rat lead = rat_factorial(j) * rat_factorial(j) * rat_binomial(p + j, 2 * j + 1);
            CHECK(plus.alpha(j, std::vector<int>{j}) == lead);
            CHECK(minus.alpha(j, std::vector<int>{j}) == (j % 2 ? -lead : lead));
            std::vector<int> zeros(static_cast<std::size_t>(j) + 1, 0);
            CHECK(minus.alpha(j, zeros) == rat_binomial(p, j + 1));
            CHECK(plus.alpha(j, zeros) == rat_binomial(p + j, j + 1));
        }

        CHECK(minus.minus_terminates());
        CHECK(change_bar_basis(plus, minus).empty());

        // trace brackets vanish for j <= 1 and are central for all computed j,k
        for (int j = 0; j < p; ++j)
            for (int k = 0; k < p; ++k) {
                Poly br = poisson_bracket(minus.trace_gen(j), minus.trace_gen(k), w.table);
                if (j <= 1 || k <= 1) CHECK(br.is_zero());
                for (const auto& g : w.table.domain())
                    CHECK(poisson_bracket(br, Poly(g), w.table).is_zero());
            }
    }
}
