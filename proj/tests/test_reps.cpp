#include "doctest.h"

#include "superw/reps.hpp"

using namespace superw;

TEST_CASE("fundamental representations") {
    GlRep r11 = fundamental_rep(GradedDim(1, 1));
    // anticommutator of the odd units closes on the diagonal
    SuperMatrix anti = graded_commutator(r11.at(1, 2), 1, r11.at(2, 1), 1);
    CHECK(anti == r11.at(1, 1) + r11.at(2, 2));
    // diagonal action and parity blocks
    CHECK(r11.at(1, 1).at(1, 1) == Rat(1));
    CHECK(r11.at(1, 2).at(1, 2) == Rat(1));  // odd unit maps odd -> even
    CHECK(fundamental_rep(GradedDim(2, 1)).verify());
}

TEST_CASE("evaluation representation of Y(1|1)") {
    RepAssignment ev = evaluation_rep(fundamental_rep(GradedDim(1, 1)));
    CHECK(ev.cutoff == 1);
    CHECK(ev.at(1, 2, 2).is_zero());  // T_(r) = 0 for r > 1
    CHECK(check_defining_relations(ev, 3).pass());

    HighestWeightData hw = highest_weight(ev);
    CHECK(hw.unique);
    CHECK(hw.diagonal_ok);
    CHECK(hw.vplus[0] == Rat(1));  // v+ = e_1
    CHECK(hw.vplus[1] == Rat(0));
    // lambda_1(u) = 1 + u^{-1}, lambda_2(u) = 1
    CHECK(hw.lambda.at({1, 1}) == Rat(1));
    CHECK(hw.lambda.count({2, 1}) == 0);
}

TEST_CASE("evaluation representation of Y(2|1)") {
    RepAssignment ev = evaluation_rep(fundamental_rep(GradedDim(2, 1)));
    CHECK(check_defining_relations(ev, 2).pass());
    HighestWeightData hw = highest_weight(ev);
    CHECK(hw.unique);
    CHECK(hw.vplus[0] == Rat(1));
    CHECK(hw.vplus[1] == Rat(0));
    CHECK(hw.vplus[2] == Rat(0));
}

TEST_CASE("injected defect fails the relation check") {
    RepAssignment ev = evaluation_rep(fundamental_rep(GradedDim(1, 1)));
    ev.op[{1, 2, 1}] = Rat(3) * SuperMatrix::unit(ev.carrier, 1, 1);  // not a representation
    CHECK(!check_defining_relations(ev, 2).pass());
}

TEST_CASE("tensor products of evaluation representations") {
    RepAssignment ev = evaluation_rep(fundamental_rep(GradedDim(1, 1)));

    RepAssignment single = tensor_eval({ev});
    CHECK(single.cutoff == 1);

    RepAssignment two = tensor_eval({ev, ev});
    CHECK(two.cutoff == 2);
    CHECK(two.level_nonzero(2));
    CHECK(!two.level_nonzero(3));
    CHECK(check_defining_relations(two, 3).pass());

    // T_(2)^{ab} = sum_e signed rho(E^{ae}) (x) rho(E^{eb})
    GradedDim d(1, 1);
    for (int a = 1; a <= 2; ++a)
        for (int b = 1; b <= 2; ++b) {
            SuperMatrix expect(two.carrier);
            for (int e = 1; e <= 2; ++e)
                expect += graded_tensor(ev.at(a, e, 1), ev.at(e, b, 1));
            CHECK(two.at(a, b, 2) == expect);
        }

    RepAssignment three = tensor_eval({ev, ev, ev});
    CHECK(three.level_nonzero(3));
    CHECK(!three.level_nonzero(4));
    CHECK(check_defining_relations(three, 4).pass());

    RepAssignment two21 = tensor_eval({evaluation_rep(fundamental_rep(GradedDim(2, 1))),
                                       evaluation_rep(fundamental_rep(GradedDim(2, 1)))});
    CHECK(check_defining_relations(two21, 3).pass());
    (void)d;
}

TEST_CASE("trivial assignment is flagged") {
    RepAssignment trivial;
    trivial.alg = GradedDim(1, 1);
    trivial.carrier = parities_of(trivial.alg);
    trivial.cutoff = 1;
    HighestWeightData hw = highest_weight(trivial);
    CHECK(hw.kernel_dim == 2);  // whole space: reducible-or-trivial
    CHECK(!hw.unique);
}

TEST_CASE("drinfeld criterion") {
    GradedDim d(1, 1);

    // all ratios trivial
    DrinfeldInput trivial{{{}, {}}};
    DrinfeldResult r0 = drinfeld_check(trivial, d);
    CHECK(r0.accepted);
    CHECK(r0.witness[1].empty());

    // Y(1|1) fundamental evaluation weights (1 + u^{-1}, 1): boundary witness
    DrinfeldInput fund{{{{Rat(-1), 1}}, {}}};
    DrinfeldResult r1 = drinfeld_check(fund, d);
    CHECK(r1.accepted);
    CHECK(r1.witness_tilde.size() == 1);
    CHECK(r1.witness_tilde[0] == Rat(-1));

    // (u + 1/2)/u posed away from the boundary cannot close a shift chain
    GradedDim d21(2, 1);
    DrinfeldInput bad{{{{Rat(-1, 2), 1}}, {}, {}}};
    DrinfeldResult r2 = drinfeld_check(bad, d21);
    CHECK(!r2.accepted);

    // genuine shift chain at a non-boundary position:
    // lambda_1/lambda_2 = (u-1)/(u-3) = P(u+1)/P(u) with P = (u-3)(u-2)
    DrinfeldInput chain{{{{Rat(1), 1}}, {{Rat(3), 1}}, {}}};
    DrinfeldResult r3 = drinfeld_check(chain, d21);
    CHECK(r3.accepted);
    CHECK(r3.witness[1] == std::vector<Rat>{Rat(3), Rat(2)});

    // reversed chain direction cannot be matched
    DrinfeldInput rev{{{{Rat(3), 1}}, {{Rat(1), 1}}, {}}};
    CHECK(!drinfeld_check(rev, d21).accepted);
}
