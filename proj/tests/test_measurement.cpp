#include "hnl/families.hpp"
#include "hnl/measurement.hpp"

#include <doctest.h>

using namespace hnl;

TEST_CASE("literal parsing and validation") {
    auto m = parse_measurement_literal("B:0-4;5-10");
    CHECK(m.party == "B");
    REQUIRE(m.outcomes.size() == 2);
    CHECK(m.outcomes[0] == std::vector<int>{0, 1, 2, 3, 4});
    m.validate(11);
    CHECK_THROWS(m.validate(12));  // incomplete
    CHECK(m.to_literal() == "B:0-4;5-10");

    auto lists = parse_measurement_literal("A:0,2-3;1");
    CHECK(lists.outcomes[0] == std::vector<int>{0, 2, 3});
    lists.validate(4);

    CHECK_THROWS(parse_measurement_literal("no-colon"));
    CHECK_THROWS(parse_measurement_literal("B:0-x"));
    CHECK_THROWS(parse_measurement_literal(":0-4"));
    auto overlap = parse_measurement_literal("B:0-4;4-10");
    CHECK_THROWS(overlap.validate(11));
}

TEST_CASE("measurement outcome cardinalities match the reference listings") {
    auto ex1 = type1_set(11);
    auto outs = measurement_outcomes(ex1, parse_measurement_literal("B:0-4;5-10"));
    REQUIRE(outs.size() == 2);
    CHECK(outs[0].states.states.size() == 20);
    CHECK(outs[1].states.states.size() == 20);
    CHECK(outs[0].dropped.empty());
    CHECK(outs[0].states.contains("~psi1"));
    // reference outcome-1 transfer: psi1 -> |1>|0-1>
    CHECK(outs[0].states.find("~psi1").factors[1].entries ==
          parse_ket("|0>-|1>", 11).entries);

    auto ex4 = type2_set_78();
    auto outs4 = measurement_outcomes(ex4, parse_measurement_literal("B:0-4;5-7"));
    CHECK(outs4[0].states.states.size() == 16);
    CHECK(outs4[1].states.states.size() == 10);
    CHECK(outs4[0].dropped.size() == 6);
    CHECK(outs4[1].dropped.size() == 12);
}

TEST_CASE("outcome pieces reassemble to the original factor") {
    auto set = type1_set(11);
    auto m = parse_measurement_literal("B:0-2;3-7;8-10");
    auto outs = measurement_outcomes(set, m);
    for (const auto& s : set.states) {
        std::vector<Cyclo> sum(11);
        for (const auto& o : outs) {
            if (!o.states.contains("~" + s.label)) continue;
            const auto& piece = o.states.find("~" + s.label).factors[1];
            for (int i = 0; i < 11; ++i) sum[i] += piece.entries[i];
        }
        CHECK(sum == s.factors[1].entries);
    }
}

TEST_CASE("joint measurements take a cartesian product of outcomes") {
    auto set = multiparty_type1({11, 11, 13});
    std::vector<LocalMeasurement> ms{parse_measurement_literal("B:0-4;5-10"),
                                     parse_measurement_literal("D:0-4;5-10"),
                                     parse_measurement_literal("F:0-5;6-12")};
    auto outs = measurement_outcomes(set, ms);
    REQUIRE(outs.size() == 8);
    CHECK(outs[0].outcome_id == "1,1,1");
    CHECK(outs[7].outcome_id == "2,2,2");
    for (const auto& o : outs) CHECK(o.states.states.size() == 64);
    // labels are tilde-marked once despite three projections
    CHECK(outs[0].states.contains("~b1.psi1"));
}

TEST_CASE("orthogonality-preserving check") {
    auto ex1 = type1_set(11);
    CHECK(is_orthogonality_preserving(ex1, parse_measurement_literal("B:0-4;5-10")).preserving);

    // control: two states orthogonal only through A, measured on A
    StateSet set;
    set.space = SpaceSpec::bipartite(2, 2);
    ProductState a{"a", {parse_ket("|0>+|1>", 2), parse_ket("|0>", 2)}};
    ProductState b{"b", {parse_ket("|0>-|1>", 2), parse_ket("|0>", 2)}};
    a.factors[0].party = b.factors[0].party = "A";
    a.factors[1].party = b.factors[1].party = "B";
    set.states = {a, b};
    auto check = is_orthogonality_preserving(set, parse_measurement_literal("A:0;1"));
    CHECK_FALSE(check.preserving);
    REQUIRE_FALSE(check.violations.empty());
    CHECK(check.violations[0].label_a == "~a");
}
