#include "hnl/certify.hpp"
#include "hnl/families.hpp"

#include "frozen_listings.hpp"

#include <doctest.h>

#include <map>

using namespace hnl;

namespace {

void check_listing(const hnl::StateSet& set, const hnl_test::Listing& expect, int d) {
    REQUIRE(set.states.size() == expect.size());
    for (const auto& [label, kets] : expect) {
        const auto& s = set.find(label);
        CHECK_MESSAGE(s.factors[0].entries == parse_ket(kets.first, d).entries, label);
        CHECK_MESSAGE(s.factors[1].entries == parse_ket(kets.second, d).entries, label);
    }
}

}  // namespace

TEST_CASE("d=11 and d=13 constructions match the frozen listings exactly") {
    check_listing(type1_set(11), hnl_test::listing_d11(), 11);
    check_listing(type1_set(13), hnl_test::listing_d13(), 13);
}

TEST_CASE("family cardinalities") {
    for (int d = 3; d <= 8; ++d) CHECK(yu_set(d).states.size() == 2 * d - 1);
    for (int d : {11, 13, 15, 17}) CHECK(type1_set(d).states.size() == 2 * d - 2);
    CHECK(strong_type1_set().states.size() == 20);
    CHECK(type2_set_78().states.size() == 22);
    CHECK(multiparty_type1({11, 11, 13}).states.size() == 64);
    CHECK(multiparty_type1({11, 13}).states.size() == 44);
}

TEST_CASE("every shipped family is exactly orthogonal") {
    for (int d = 3; d <= 8; ++d) CHECK(check_orthogonality(yu_set(d)).orthogonal);
    for (int d : {11, 13, 15}) CHECK(check_orthogonality(type1_set(d)).orthogonal);
    CHECK(check_orthogonality(strong_type1_set()).orthogonal);
    CHECK(check_orthogonality(type2_set_78()).orthogonal);
    CHECK(check_orthogonality(multiparty_type1({11, 11, 13})).orthogonal);
}

TEST_CASE("family preconditions") {
    CHECK_THROWS(yu_set(2));
    CHECK_THROWS(type1_set(10));  // even
    CHECK_THROWS(type1_set(9));   // too small
    CHECK_THROWS(multiparty_type1({11, 12}));
    CHECK_THROWS(construct_family(FamilyId::parse("type1:10")));
}

TEST_CASE("family id parsing") {
    CHECK(FamilyId::parse("yu:5").to_string() == "yu:5");
    CHECK(FamilyId::parse("type1:11").kind == FamilyKind::TypeI);
    CHECK(FamilyId::parse("strong11").kind == FamilyKind::StrongTypeI11);
    CHECK(FamilyId::parse("type2-78").kind == FamilyKind::TypeII78);
    CHECK(FamilyId::parse("multi:11,11,13").params == std::vector<int>{11, 11, 13});
    CHECK_THROWS(FamilyId::parse("nope"));
}

TEST_CASE("fillers validate against their own family") {
    for (int d : {11, 13, 15}) {
        auto fam = type1_set(d);
        auto fill = filler_state(d);
        CHECK(filler_is_valid(d, fill, fam));
    }
}

TEST_CASE("row-straddling rectangles fail the measured-piece property") {
    // the halved column difference hits the full-sum states with weight 1,
    // so any filler with rows in both halves is rejected
    auto fam = type1_set(11);
    auto bad = ProductState{"bad",
                            {parse_ket("|3>-|9>", 11), parse_ket("|2>-|8>", 11)}};
    bad.factors[0].party = "A";
    bad.factors[1].party = "B";
    CHECK_FALSE(filler_is_valid(11, bad, fam));
}

TEST_CASE("strong set adds the bridging and full-sum states") {
    auto set = strong_type1_set();
    CHECK(set.contains("S"));
    CHECK(set.contains("M"));
    const auto& m = set.find("M");
    CHECK(m.factors[0].entries == parse_ket("|1>-|6>", 11).entries);
    CHECK(m.factors[1].entries == parse_ket("|0>-|9>", 11).entries);
}

TEST_CASE("multiparty block structure") {
    auto set = multiparty_type1({11, 13});
    REQUIRE(set.space.arity() == 4);
    CHECK(set.space.parties[0].label == "A");
    CHECK(set.space.parties[3].label == "D");
    CHECK(set.space.parties[2].dim == 13);
    CHECK(set.contains("b1.psi1"));
    CHECK(set.contains("b2.phi13"));
    // block-2 states carry the block-1 filler on parties A,B
    auto fill = filler_state(11);
    const auto& s = set.find("b2.psi1");
    CHECK(s.factors[0].entries == fill.factors[0].entries);
    CHECK(s.factors[1].entries == fill.factors[1].entries);
}
