#include <doctest.h>

#include "bflab/constructions.hpp"
#include "bflab/measures.hpp"
#include "oracles.hpp"

using namespace bflab;

namespace {

const BooleanFunction& or2() {
    static BooleanFunction f = BooleanFunction::from_hex("e", 2);
    return f;
}

}  // namespace

TEST_CASE("sensitivity_at") {
    CHECK(sensitivity_at(or2(), InputWord::parse("00")) == 2);
    BooleanFunction const0(3);
    for (Word x = 0; x < 8; ++x) CHECK(sensitivity_at(const0, InputWord(3, x)) == 0);
    // g0(k=2) at 1000: only flipping x2 reaches the 1-input 1100
    CHECK(sensitivity_at(g0(2).fn, InputWord::parse("1000")) == 1);
}

TEST_CASE("minimal_sensitive_blocks ordering and content") {
    auto blocks = minimal_sensitive_blocks(g0(2).fn, InputWord::parse("0000"));
    REQUIRE(blocks.size() == 2);
    CHECK(blocks[0].mask == 0b0011);  // {1,2}
    CHECK(blocks[1].mask == 0b1100);  // {3,4}

    auto or_blocks = minimal_sensitive_blocks(or2(), InputWord::parse("00"));
    REQUIRE(or_blocks.size() == 2);
    CHECK(or_blocks[0].mask == 0b01);
    CHECK(or_blocks[1].mask == 0b10);

    BooleanFunction const1 = named(Family::Const1, 2).fn;
    CHECK(minimal_sensitive_blocks(const1, InputWord::parse("11")).empty());
}

TEST_CASE("block_sensitivity_at") {
    CHECK(block_sensitivity_at(or2(), InputWord::parse("00")) == 2);
    CHECK(block_sensitivity_at(g0(3).fn, InputWord::parse("000000")) == 3);  // bs_0(g_0) = k
    BooleanFunction and2 = BooleanFunction::from_hex("8", 2);
    CHECK(block_sensitivity_at(and2, InputWord::parse("10")) == 1);
}

TEST_CASE("certificate_at returns the canonical minimum certificate") {
    BooleanFunction or3 = named(Family::Or, 3).fn;
    CHECK(certificate_at(or3, InputWord::parse("100")).str() == "1**");
    BooleanFunction and3 = named(Family::And, 3).fn;
    CHECK(certificate_at(and3, InputWord::parse("111")).str() == "111");
    CHECK(certificate_at(g0(3).fn, InputWord::parse("110000")).str() == "11000*");
}

TEST_CASE("profile on small named functions") {
    MeasureProfile p = profile(or2());
    CHECK(p.s0 == 2);
    CHECK(p.s1 == 1);
    CHECK(p.bs0 == 2);
    CHECK(p.bs1 == 1);
    CHECK(p.c0 == 2);
    CHECK(p.c1 == 1);
    CHECK(p.s() == 2);

    MeasureProfile g = profile(g0(3).fn);
    CHECK(g.s0 == 1);
    CHECK(g.s1 == 5);
    CHECK(g.bs0 == 3);
    CHECK(g.c1 == 5);

    MeasureProfile c1 = profile(named(Family::Const1, 2).fn);
    CHECK_FALSE(c1.s0.has_value());
    CHECK_FALSE(c1.bs0.has_value());
    CHECK_FALSE(c1.c0.has_value());
    CHECK(c1.s1 == 0);
    CHECK(c1.bs1 == 0);
    CHECK(c1.c1 == 0);
}

TEST_CASE("capacity limits raise instead of approximating") {
    BooleanFunction big(13);
    CHECK_THROWS_AS(profile(big), capacity_error);
    BooleanFunction huge(17);
    CHECK_THROWS_AS(certificate_at(huge, InputWord(17, 0)), capacity_error);
}

TEST_CASE("measure chain s <= bs <= C at every input") {
    // exhaustive over every function with n <= 3
    for (int n = 1; n <= 3; ++n) {
        std::uint64_t total = std::uint64_t{1} << (std::uint64_t{1} << n);
        for (std::uint64_t t = 0; t < total; ++t) {
            BooleanFunction f = BooleanFunction::from_table_bits(n, t);
            for (Word x = 0; x < f.table_size(); ++x) {
                InputWord in(n, x);
                int s = sensitivity_at(f, in);
                int bs = block_sensitivity_at(f, in);
                int c = certificate_at(f, in).length();
                REQUIRE(s <= bs);
                REQUIRE(bs <= c);
            }
        }
    }
    // seeded random functions at n = 4..6
    SplitMix64 rng(501);
    for (int n = 4; n <= 6; ++n) {
        for (int trial = 0; trial < 1000; ++trial) {
            BooleanFunction f = oracles::random_function(n, rng);
            Word x = static_cast<Word>(rng.next()) & full_mask(n);
            InputWord in(n, x);
            int s = sensitivity_at(f, in);
            int bs = block_sensitivity_at(f, in);
            int c = certificate_at(f, in).length();
            REQUIRE(s <= bs);
            REQUIRE(bs <= c);
        }
    }
}

TEST_CASE("packing over minimal blocks equals brute force over all sensitive blocks") {
    for (int n = 1; n <= 4; ++n) {
        std::uint64_t total = std::uint64_t{1} << (std::uint64_t{1} << n);
        for (std::uint64_t t = 0; t < total; ++t) {
            BooleanFunction f = BooleanFunction::from_table_bits(n, t);
            for (Word x = 0; x < f.table_size(); ++x) {
                REQUIRE(block_sensitivity_at(f, InputWord(n, x)) ==
                        oracles::oracle_block_sensitivity(f, x));
            }
        }
    }
}

TEST_CASE("certificate_at length equals the brute-force minimum subcube") {
    for (int n = 1; n <= 3; ++n) {
        std::uint64_t total = std::uint64_t{1} << (std::uint64_t{1} << n);
        for (std::uint64_t t = 0; t < total; ++t) {
            BooleanFunction f = BooleanFunction::from_table_bits(n, t);
            for (Word x = 0; x < f.table_size(); ++x) {
                Certificate c = certificate_at(f, InputWord(n, x));
                REQUIRE(c.length() == oracles::oracle_certificate_complexity(f, x));
                bool v;
                REQUIRE(subcube_constant(f, c, v));
                REQUIRE(is_minimal_certificate(f, c));
            }
        }
    }
}

TEST_CASE("negating the output swaps the 0- and 1-sided measures") {
    SplitMix64 rng(77);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + static_cast<int>(rng.next() % 5);
        BooleanFunction f = oracles::random_function(n, rng);
        MeasureProfile p = profile(f);
        MeasureProfile q = profile(f.negated());
        CHECK(p.s0 == q.s1);
        CHECK(p.s1 == q.s0);
        CHECK(p.bs0 == q.bs1);
        CHECK(p.bs1 == q.bs0);
        CHECK(p.c0 == q.c1);
        CHECK(p.c1 == q.c0);
    }
}
