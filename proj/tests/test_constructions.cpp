#include <doctest.h>

#include "bflab/constructions.hpp"
#include "bflab/rational.hpp"

using namespace bflab;

TEST_CASE("g0 certificates expand the three clauses") {
    Construction c2 = g0(2);
    REQUIRE(c2.certificates.size() == 2);
    CHECK(c2.certificates[0].str() == "1100");
    CHECK(c2.certificates[1].str() == "0011");

    Construction c3 = g0(3);
    REQUIRE(c3.certificates.size() == 3);
    CHECK(c3.certificates[0].str() == "11000*");
    CHECK(c3.certificates[1].str() == "0*1100");
    CHECK(c3.certificates[2].str() == "000*11");
    for (const Certificate& c : c3.certificates) CHECK(c.length() == 5);

    CHECK_THROWS_AS(g0(1), std::invalid_argument);
    CHECK_THROWS_AS(g0(13), std::invalid_argument);
}

TEST_CASE("g0 is the disjunction of its certificates") {
    Construction c2 = g0(2);
    CHECK(c2.fn.evaluate(InputWord::parse("1100")) == true);
    CHECK(c2.fn.evaluate(InputWord::parse("0011")) == true);
    CHECK(c2.fn.evaluate(InputWord::parse("0000")) == false);
    CHECK(c2.fn.evaluate(InputWord::parse("1111")) == false);

    // g0(k=2) restricted by x1:=1, x2:=1, x3:=0 is NOT(x4)
    auto [g, kept] = restrict_function(c2.fn, Certificate::parse("110*"));
    CHECK(kept == std::vector<int>{4});
    CHECK(g.to_hex() == "1");
}

TEST_CASE("claimed profiles follow the closed forms") {
    CHECK(claimed_profile({Family::G0, 4, 1, 4, 8}).c1 == 7);
    CHECK(claimed_profile({Family::G0, 5, 1, 5, 10}).c1 == 8);
    MeasureProfile comp = claimed_profile({Family::OrComposedG0, 4, 2, 2, 8});
    CHECK(comp.s0 == 2);
    CHECK(comp.bs0 == 4);
    CHECK(comp.c1 == 4);
}

TEST_CASE("measured profiles match the claims for small parameters") {
    for (int k = 2; k <= 4; ++k) {
        Construction c = g0(k);
        CHECK(matches_claims(profile(c.fn), c.claimed));
    }
    Construction comp = or_compose_g0(2, 2);
    CHECK(matches_claims(profile(comp.fn), comp.claimed));
}

TEST_CASE("every defining certificate is a minimal 1-certificate") {
    for (int k = 2; k <= 5; ++k) {
        Construction c = g0(k);
        for (const Certificate& cert : c.certificates) {
            CHECK(is_one_certificate(c.fn, cert));
            CHECK(is_minimal_certificate(c.fn, cert));
        }
    }
}

TEST_CASE("composing one branch is g0 itself") {
    CHECK(or_compose_g0(1, 4).fn == g0(4).fn);
}

TEST_CASE("odd r achieves the tight equality, even r the floor formula") {
    // C1 = (3/2) bs0/s0 + 1/2 exactly when r is odd
    for (auto [m, r] : {std::pair{1, 3}, std::pair{2, 3}}) {
        Construction c = or_compose_g0(m, r);
        MeasureProfile p = profile(c.fn);
        Rational lhs(*p.c1);
        Rational rhs = Rational(3 * *p.bs0, 2 * *p.s0) + Rational(1, 2);
        CHECK(lhs == rhs);
    }
    for (auto [m, r] : {std::pair{2, 2}, std::pair{3, 2}}) {
        Construction c = or_compose_g0(m, r);
        CHECK(*profile(c.fn).c1 == 3 * r / 2 + 1);
    }
}

TEST_CASE("named baselines") {
    CHECK(named(Family::Or, 2).fn.to_hex() == "e");
    CHECK(named(Family::And, 2).fn.to_hex() == "8");
    CHECK(named(Family::Const0, 2).fn.to_hex() == "0");
    CHECK(matches_claims(profile(named(Family::Or, 3).fn), named(Family::Or, 3).claimed));
    CHECK(matches_claims(profile(named(Family::And, 3).fn), named(Family::And, 3).claimed));
}
