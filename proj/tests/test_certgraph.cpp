#include <doctest.h>

#include "bflab/certgraph.hpp"
#include "bflab/constructions.hpp"

using namespace bflab;

namespace {

BooleanFunction or_of(int n, const std::vector<Certificate>& certs) {
    BooleanFunction f(n);
    for (Word x = 0; x < f.table_size(); ++x)
        for (const Certificate& c : certs)
            if ((x & c.assigned) == c.values) {
                f.set_bit(x, true);
                break;
            }
    return f;
}

}  // namespace

TEST_CASE("contradiction and overlap counting") {
    CHECK(contradictions(Certificate::parse("0010**"), Certificate::parse("100***")) == 2);
    Certificate c = Certificate::parse("01*");
    CHECK(contradictions(c, c) == 0);
    CHECK(overlaps(Certificate::parse("001***"), Certificate::parse("*0000*")) == 1);
    CHECK(overlaps(Certificate::parse("11**"), Certificate::parse("**11")) == 0);

    Construction g3 = g0(3);
    CHECK(contradictions(g3.certificates[0], g3.certificates[1]) == 3);
    CHECK(overlaps(g3.certificates[0], g3.certificates[1]) == 1);
}

TEST_CASE("build_zero_instance recovers the g0 structure") {
    Construction g3 = g0(3);
    ZeroInputInstance inst = build_zero_instance(g3.fn);
    CHECK(inst.shift == 0);
    REQUIRE(inst.blocks.size() == 3);
    CHECK(inst.blocks[0].mask == 0b000011);
    CHECK(inst.blocks[1].mask == 0b001100);
    CHECK(inst.blocks[2].mask == 0b110000);
    REQUIRE(inst.certs.size() == 3);
    for (size_t i = 0; i < 3; ++i) CHECK(inst.certs[i] == g3.certificates[i]);
}

TEST_CASE("build_zero_instance on OR2 and AND2") {
    ZeroInputInstance or_inst = build_zero_instance(named(Family::Or, 2).fn);
    REQUIRE(or_inst.certs.size() == 2);
    CHECK(or_inst.certs[0].str() == "1*");
    CHECK(or_inst.certs[1].str() == "*1");

    ZeroInputInstance and_inst = build_zero_instance(named(Family::And, 2).fn);
    REQUIRE(and_inst.certs.size() == 1);
    CHECK(and_inst.certs[0].str() == "11");

    CHECK_THROWS_AS(build_zero_instance(named(Family::Const0, 2).fn), std::invalid_argument);
    CHECK_THROWS_AS(build_zero_instance(named(Family::Const1, 2).fn), std::invalid_argument);
}

TEST_CASE("instance moves the best 0-input to the origin") {
    // g0(2) translated by 0001 still has its bs0 at the translated origin
    BooleanFunction f = g0(2).fn.shifted(0b0001);
    REQUIRE(f.bit(0) == false);  // 0000 is a 0-input of the translated function
    ZeroInputInstance inst = build_zero_instance(f);
    CHECK(inst.shift == 0b0001);
    REQUIRE(inst.certs.size() == 2);
    CHECK(inst.certs[0].str() == "1100");
    CHECK(inst.certs[1].str() == "0011");
}

TEST_CASE("graph weights on g0") {
    ZeroInputInstance inst = build_zero_instance(g0(3).fn);
    ContradictionGraph g = build_graph(inst);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(g.edge(i, j) == (i == j ? 0 : 3));
    CHECK(g.total_weight() == 9);

    ContradictionGraph g2 = build_graph(build_zero_instance(g0(2).fn));
    CHECK(g2.edge(0, 1) == 4);  // "1100" vs "0011" disagree everywhere

    ContradictionGraph or_g = build_graph(build_zero_instance(named(Family::Or, 2).fn));
    CHECK(or_g.edge(0, 1) == 0);
}

TEST_CASE("weight lemma on g0(3): the full graph is tight") {
    ZeroInputInstance inst = build_zero_instance(g0(3).fn);
    WeightLemmaReport rep = verify_weight_lemma(build_graph(inst), 1, SubgraphMode::AllSubgraphs);
    CHECK(rep.pass);
    CHECK(rep.subsets_checked == 7);
    CHECK(rep.min_slack == Rational(0));
    CHECK(rep.min_subset == 0b111);  // weight 9 vs bound 9
}

TEST_CASE("weight lemma base case: m <= s0 always passes") {
    ContradictionGraph g;
    g.order = 3;
    g.weight.assign(3, std::vector<int>(3, 0));
    WeightLemmaReport rep = verify_weight_lemma(g, 3, SubgraphMode::AllSubgraphs);
    CHECK(rep.pass);  // bound <= 0 for every subset
}

TEST_CASE("weight lemma on the composed construction") {
    ZeroInputInstance inst = build_zero_instance(or_compose_g0(2, 2).fn);
    ContradictionGraph g = build_graph(inst);
    int s0 = profile(inst.fn).s0.value();
    CHECK(s0 == 2);
    CHECK(g.total_weight() >= 6);  // bound (3/2)*16/2 - (3/2)*4 = 6
    CHECK(verify_weight_lemma(g, s0, SubgraphMode::AllSubgraphs).pass);
}

TEST_CASE("weight lemma holds on every n <= 3 instance") {
    for (int n = 1; n <= 3; ++n) {
        std::uint64_t total = std::uint64_t{1} << (std::uint64_t{1} << n);
        for (std::uint64_t t = 0; t < total; ++t) {
            BooleanFunction f = BooleanFunction::from_table_bits(n, t);
            if (f.bit(0) || f.is_constant()) continue;
            ZeroInputInstance inst = build_zero_instance(f);
            int s0 = profile(inst.fn).s0.value();
            WeightLemmaReport rep =
                verify_weight_lemma(build_graph(inst), s0, SubgraphMode::AllSubgraphs);
            REQUIRE(rep.pass);
        }
    }
}

TEST_CASE("sampled mode is available for large graphs") {
    ZeroInputInstance inst = build_zero_instance(g0(4).fn);
    WeightLemmaReport rep =
        verify_weight_lemma(build_graph(inst), 1, SubgraphMode::Sampled, 200, 42);
    CHECK(rep.pass);
    CHECK(rep.subsets_checked == 200);
}

TEST_CASE("adjacency lemma on g0 instances") {
    for (int k : {3, 5}) {
        ZeroInputInstance inst = build_zero_instance(g0(k).fn);
        AdjacencyLemmaReport rep = verify_adjacency_lemma(build_graph(inst), 1);
        CHECK(rep.pass);
        CHECK_FALSE(rep.vacuous);
        CHECK(rep.h_vertices == std::vector<int>{0});  // ties resolve to the smallest set
        CHECK(rep.h_weight == 0);
    }
    // k <= s0 is vacuous
    AdjacencyLemmaReport rep = verify_adjacency_lemma(build_graph(build_zero_instance(g0(2).fn)), 2);
    CHECK(rep.pass);
    CHECK(rep.vacuous);
}

TEST_CASE("pigeonhole counts") {
    PigeonholeReport p3 = pigeonhole_bound(build_zero_instance(g0(3).fn));
    CHECK(p3.max_zeros == 3);
    CHECK(p3.implied_c1_lower_bound == 4);
    CHECK(p3.total_weight == p3.total_zeros);
    CHECK(p3.invariants_ok);

    PigeonholeReport por = pigeonhole_bound(build_zero_instance(named(Family::Or, 2).fn));
    CHECK(por.max_zeros == 0);
    CHECK(por.implied_c1_lower_bound == 1);

    PigeonholeReport p5 = pigeonhole_bound(build_zero_instance(g0(5).fn));
    CHECK(p5.max_zeros == 6);
    CHECK(p5.implied_c1_lower_bound == 7);
}

TEST_CASE("main theorem check") {
    MainTheoremReport g3 = verify_main_theorem(g0(3).fn);
    CHECK(g3.main_pass);
    CHECK(g3.main_slack == Rational(1));  // C1=5 against bound 4
    CHECK(g3.kk_pass);

    MainTheoremReport comp = verify_main_theorem(or_compose_g0(2, 3).fn);
    CHECK(comp.main_pass);
    CHECK(comp.main_slack == Rational(1));  // C1=5 against (3/2)(6/2)-1/2 = 4

    MainTheoremReport orr = verify_main_theorem(named(Family::Or, 2).fn);
    CHECK(orr.main_pass);
    CHECK(orr.main_slack == Rational(0));  // C1=1 meets the bound exactly

    CHECK_THROWS_AS(verify_main_theorem(named(Family::Const1, 3).fn), std::invalid_argument);
}

TEST_CASE("component classification") {
    std::vector<Certificate> path = {Certificate::parse("110****"), Certificate::parse("**110**"),
                                     Certificate::parse("****111")};
    auto comps = classify_components(ContradictionGraph::from_certificates(path), path);
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].kind == ComponentKind::Path);
    CHECK(comps[0].vertices == std::vector<int>{0, 1, 2});

    std::vector<Certificate> cycle = {Certificate::parse("110*****"), Certificate::parse("**10****"),
                                      Certificate::parse("***111**"), Certificate::parse("*****00*"),
                                      Certificate::parse("0*****11")};
    auto cycle_comps = classify_components(ContradictionGraph::from_certificates(cycle), cycle);
    REQUIRE(cycle_comps.size() == 1);
    CHECK(cycle_comps[0].kind == ComponentKind::Cycle);
    CHECK(cycle_comps[0].edges.size() == 5);

    Construction g3 = g0(3);
    auto other = classify_components(ContradictionGraph::from_certificates(g3.certificates),
                                     g3.certificates);
    REQUIRE(other.size() == 1);
    CHECK(other[0].kind == ComponentKind::Other);

    std::vector<Certificate> pair = {Certificate::parse("1110*"), Certificate::parse("**011")};
    auto pair_comps = classify_components(ContradictionGraph::from_certificates(pair), pair);
    REQUIRE(pair_comps.size() == 1);
    CHECK(pair_comps[0].kind == ComponentKind::Pair2);

    std::vector<Certificate> lone = {Certificate::parse("11*")};
    CHECK(classify_components(ContradictionGraph::from_certificates(lone), lone)[0].kind ==
          ComponentKind::Singleton);
}

TEST_CASE("instance invariants: unique 1-owner and weight equals zero count") {
    for (int k = 2; k <= 5; ++k) {
        ZeroInputInstance inst = build_zero_instance(g0(k).fn);
        ContradictionGraph g = build_graph(inst);
        int zeros = 0;
        for (const Certificate& c : inst.certs) zeros += c.length() - Block(c.ones()).size();
        CHECK(g.total_weight() == zeros);
    }
    BooleanFunction comp = or_compose_g0(2, 2).fn;
    PigeonholeReport rep = pigeonhole_bound(build_zero_instance(comp));
    CHECK(rep.invariants_ok);
}
