#include <doctest.h>

#include "bflab/boolfun.hpp"
#include "bflab/prng.hpp"
#include "oracles.hpp"

using namespace bflab;

TEST_CASE("hex serialization matches the fixed bit order") {
    // OR_2: table 0,1,1,1 packed LSB-first
    BooleanFunction or2 = BooleanFunction::from_hex("e", 2);
    CHECK(or2.to_hex() == "e");
    CHECK(or2.bit(0) == false);
    CHECK(or2.bit(1) == true);

    CHECK(BooleanFunction::from_hex("8", 2).to_hex() == "8");
    CHECK(BooleanFunction(3).to_hex() == "00");
    CHECK(BooleanFunction::from_hex("E", 2).to_hex() == "e");  // case-insensitive parse
}

TEST_CASE("hex parse rejects malformed tables") {
    CHECK_THROWS_AS(BooleanFunction::from_hex("ee", 2), std::invalid_argument);  // wrong length
    CHECK_THROWS_AS(BooleanFunction::from_hex("g", 2), std::invalid_argument);   // non-hex
    CHECK_THROWS_AS(BooleanFunction::from_hex("4", 1), std::invalid_argument);   // bit beyond 2^n
    CHECK_THROWS_AS(BooleanFunction::from_hex("e", 30), std::invalid_argument);
}

TEST_CASE("serialize/parse round-trips on random functions") {
    SplitMix64 rng(2024);
    for (int n = 1; n <= 10; ++n) {
        for (int trial = 0; trial < 1000; ++trial) {
            BooleanFunction f = oracles::random_function(n, rng);
            CHECK(BooleanFunction::from_hex(f.to_hex(), n) == f);
        }
    }
}

TEST_CASE("evaluate uses position 1 as the least significant bit") {
    BooleanFunction or2 = BooleanFunction::from_hex("e", 2);
    CHECK(or2.evaluate(InputWord::parse("00")) == false);
    CHECK(or2.evaluate(InputWord::parse("10")) == true);
    CHECK_THROWS_AS(or2.evaluate(InputWord::parse("100")), std::invalid_argument);
}

TEST_CASE("flip complements exactly the block and is an involution") {
    InputWord x = InputWord::parse("0000");
    CHECK(flip(x, Block(0b0011)).str() == "1100");
    CHECK(flip(InputWord::parse("1010"), Block(0)).str() == "1010");
    CHECK(flip(InputWord::parse("1010"), Block(0b1111)).str() == "0101");
    CHECK_THROWS_AS(flip(InputWord::parse("10"), Block(0b100)), std::invalid_argument);

    SplitMix64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rng.next() % 12);
        InputWord y(n, static_cast<Word>(rng.next()) & full_mask(n));
        Block s(static_cast<Word>(rng.next()) & full_mask(n));
        CHECK(flip(flip(y, s), s) == y);
    }
}

TEST_CASE("certificate text form uses position 1 leftmost") {
    Certificate c = Certificate::parse("0*1100");
    CHECK(c.n == 6);
    CHECK(c.assigns(1));
    CHECK_FALSE(c.assigns(2));
    CHECK(c.value_at(3));
    CHECK(c.str() == "0*1100");
    CHECK_THROWS_AS(Certificate::parse("01x"), std::invalid_argument);
}

TEST_CASE("satisfies checks every assigned position") {
    CHECK(satisfies(InputWord::parse("1100"), Certificate::parse("11**")));
    CHECK_FALSE(satisfies(InputWord::parse("1000"), Certificate::parse("11**")));
    CHECK(satisfies(InputWord::parse("0011"), Certificate::parse("0*11")));
}

TEST_CASE("restrict renumbers the surviving positions in order") {
    BooleanFunction or2 = BooleanFunction::from_hex("e", 2);
    auto [f0, kept0] = restrict_function(or2, Certificate::parse("0*"));
    CHECK(f0.to_hex() == "2");  // identity on the remaining variable
    CHECK(kept0 == std::vector<int>{2});

    auto [f1, kept1] = restrict_function(or2, Certificate::parse("1*"));
    CHECK(f1.to_hex() == "3");  // constant 1

    // restricting by nothing is the identity
    auto [same, kept] = restrict_function(or2, Certificate(2, 0, 0));
    CHECK(same == or2);
    CHECK(kept == std::vector<int>{1, 2});
}

TEST_CASE("is_one_certificate on OR and on g0's defining certificates") {
    BooleanFunction or2 = BooleanFunction::from_hex("e", 2);
    CHECK(is_one_certificate(or2, Certificate::parse("1*")));
    CHECK_FALSE(is_one_certificate(or2, Certificate::parse("0*")));
}

TEST_CASE("minimize_certificate drops the highest removable position first") {
    // x1 and x2 on three variables: x3 is irrelevant
    BooleanFunction f(3);
    f.set_bit(0b011, true);
    f.set_bit(0b111, true);
    CHECK(minimize_certificate(f, Certificate::parse("110")).str() == "11*");
    CHECK(minimize_certificate(f, Certificate::parse("11*")).str() == "11*");
    CHECK_THROWS_AS(minimize_certificate(f, Certificate::parse("0**")), std::invalid_argument);
}

TEST_CASE("full-assignment certificates minimize to minimal ones") {
    SplitMix64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 1 + static_cast<int>(rng.next() % 5);
        BooleanFunction f = oracles::random_function(n, rng);
        for (Word x = 0; x < f.table_size(); ++x) {
            if (!f.bit(x)) continue;
            Certificate full(n, full_mask(n), x);
            REQUIRE(is_one_certificate(f, full));
            Certificate min = minimize_certificate(f, full);
            CHECK(is_one_certificate(f, min));
            CHECK(is_minimal_certificate(f, min));
            break;  // one 1-input per function is plenty
        }
    }
}
