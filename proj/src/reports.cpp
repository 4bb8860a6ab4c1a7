#include "bflab/reports.hpp"

#include <bit>
#include <nlohmann/json.hpp>

namespace bflab::reports {

using nlohmann::ordered_json;

namespace {

ordered_json rational_json(const Rational& r) {
    return ordered_json{{"num", r.num}, {"den", r.den}, {"text", r.str()}};
}

ordered_json optional_int(const std::optional<int>& v) {
    if (v) return *v;
    return nullptr;
}

ordered_json input_json(const InputWord& x) {
    return ordered_json{{"index", x.bits}, {"bits", x.str()}};
}

ordered_json positions_json(Word mask) {
    ordered_json a = ordered_json::array();
    for (Word m = mask; m; m &= m - 1) a.push_back(std::countr_zero(m) + 1);
    return a;
}

ordered_json trace_json(const std::vector<TraceStep>& trace) {
    ordered_json a = ordered_json::array();
    for (const TraceStep& s : trace) {
        a.push_back(ordered_json{{"kind", step_kind_name(s.kind)},
                                 {"certificates", s.certificates},
                                 {"fixed", s.fixed.str()},
                                 {"earned", s.earned}});
    }
    return a;
}

}  // namespace

GraphAnalysis analyze_graph(const BooleanFunction& f) {
    GraphAnalysis a;
    a.prof = profile(f);
    a.main_theorem = verify_main_theorem(f);

    // the instance builder wants a 0 at the origin; if f(all-0) = 1, move the
    // smallest 0-input there first and fold that shift into the instance
    BooleanFunction base = f;
    Word pre_shift = 0;
    if (f.bit(0)) {
        while (f.bit(pre_shift)) ++pre_shift;
        base = f.shifted(pre_shift);
    }
    a.instance = build_zero_instance(base);
    a.instance.shift ^= pre_shift;

    MeasureProfile inst_prof = profile(a.instance.fn);
    a.instance_s0 = inst_prof.s0.value();
    a.instance_c1 = inst_prof.c1;
    a.graph = build_graph(a.instance);
    a.components = classify_components(a.graph, a.instance.certs);
    a.weight_lemma = verify_weight_lemma(a.graph, a.instance_s0, SubgraphMode::AllSubgraphs);
    a.adjacency_lemma = verify_adjacency_lemma(a.graph, a.instance_s0);
    a.pigeonhole = pigeonhole_bound(a.instance);
    a.pigeonhole_pass = a.pigeonhole.invariants_ok && a.instance_c1 &&
                        a.pigeonhole.implied_c1_lower_bound <= *a.instance_c1;
    a.pass = a.main_theorem.pass() && a.weight_lemma.pass && a.adjacency_lemma.pass &&
             a.pigeonhole_pass;
    return a;
}

WitnessOutcome run_witness(const BooleanFunction& f, const std::vector<Certificate>& certs) {
    WitnessOutcome o;
    o.k = static_cast<int>(certs.size());
    bool has_overlap = false;
    for (size_t i = 0; i < certs.size() && !has_overlap; ++i)
        for (size_t j = i + 1; j < certs.size() && !has_overlap; ++j)
            if (overlaps(certs[i], certs[j]) > 0) has_overlap = true;

    if (has_overlap) {
        o.route = "overlap_reduction";
        Lemma3Report rep = verify_lemma3(f, certs);
        o.overlap_earned = rep.overlap_earned;
        o.result = rep.result;
        o.measured_s0 = rep.measured_s0;
        o.pass = rep.pass;
    } else {
        o.route = "direct";
        o.result = witness_sensitive_input(f, certs);
        o.pass = static_cast<int>(o.result.sensitive_bits.size()) >= o.k;
        if (f.n() <= kMaxProfile) {
            o.measured_s0 = profile(f).s0;
            if (!o.measured_s0 || *o.measured_s0 < o.k) o.pass = false;
        }
    }
    return o;
}

ordered_json profile_json(const MeasureProfile& p) {
    return ordered_json{{"s0", optional_int(p.s0)},   {"s1", optional_int(p.s1)},
                        {"bs0", optional_int(p.bs0)}, {"bs1", optional_int(p.bs1)},
                        {"C0", optional_int(p.c0)},   {"C1", optional_int(p.c1)},
                        {"s", p.s()},                 {"bs", p.bs()},
                        {"C", p.C()}};
}

ordered_json measure_report(const BooleanFunction& f, bool per_input) {
    ordered_json j{{"schema_version", kSchemaVersion},
                   {"command", "measure"},
                   {"n", f.n()},
                   {"tt_hex", f.to_hex()},
                   {"profile", profile_json(profile(f))}};
    if (per_input) {
        ordered_json rows = ordered_json::array();
        for (Word i = 0; i < f.table_size(); ++i) {
            InputWord x(f.n(), i);
            Certificate cert = certificate_at(f, x);
            rows.push_back(ordered_json{{"input", input_json(x)},
                                        {"value", f.bit(i) ? 1 : 0},
                                        {"s", sensitivity_at(f, x)},
                                        {"bs", block_sensitivity_at(f, x)},
                                        {"C", cert.length()},
                                        {"certificate", cert.str()}});
        }
        j["per_input"] = std::move(rows);
    }
    return j;
}

ordered_json construct_report(const Construction& c) {
    ordered_json j{{"schema_version", kSchemaVersion}, {"command", "construct"}};
    switch (c.spec.family) {
        case Family::G0:
            j["family"] = "g0";
            j["k"] = c.spec.k;
            break;
        case Family::OrComposedG0:
            j["family"] = "or-g0";
            j["m"] = c.spec.m;
            j["r"] = c.spec.r;
            j["k"] = c.spec.k;
            break;
        case Family::Or: j["family"] = "or"; break;
        case Family::And: j["family"] = "and"; break;
        case Family::Const0: j["family"] = "const0"; break;
        case Family::Const1: j["family"] = "const1"; break;
    }
    j["n"] = c.spec.n;
    j["tt_hex"] = c.fn.to_hex();
    ordered_json certs = ordered_json::array();
    for (const Certificate& cert : c.certificates) certs.push_back(cert.str());
    j["certificates"] = std::move(certs);
    j["claimed_profile"] =
        ordered_json{{"s0", optional_int(c.claimed.s0)},   {"s1", optional_int(c.claimed.s1)},
                     {"bs0", optional_int(c.claimed.bs0)}, {"bs1", optional_int(c.claimed.bs1)},
                     {"C0", optional_int(c.claimed.c0)},   {"C1", optional_int(c.claimed.c1)}};
    return j;
}

ordered_json graph_report(const GraphAnalysis& a, const BooleanFunction& f) {
    ordered_json j{{"schema_version", kSchemaVersion},
                   {"command", "graph"},
                   {"n", f.n()},
                   {"tt_hex", f.to_hex()},
                   {"profile", profile_json(a.prof)}};

    j["main_theorem"] = ordered_json{{"main_slack", rational_json(a.main_theorem.main_slack)},
                                     {"main_pass", a.main_theorem.main_pass},
                                     {"kk_slack", rational_json(a.main_theorem.kk_slack)},
                                     {"kk_pass", a.main_theorem.kk_pass}};

    ordered_json blocks = ordered_json::array();
    for (const Block& b : a.instance.blocks) blocks.push_back(positions_json(b.mask));
    ordered_json certs = ordered_json::array();
    for (const Certificate& c : a.instance.certs) certs.push_back(c.str());
    j["instance"] = ordered_json{{"n", a.instance.fn.n()},
                                 {"tt_hex", a.instance.fn.to_hex()},
                                 {"shift", InputWord(a.instance.original_n, a.instance.shift).str()},
                                 {"kept_positions", a.instance.kept_positions},
                                 {"blocks", std::move(blocks)},
                                 {"certificates", std::move(certs)},
                                 {"s0", a.instance_s0},
                                 {"C1", optional_int(a.instance_c1)}};

    j["weights"] = a.graph.weight;

    ordered_json comps = ordered_json::array();
    for (const Component& c : a.components) {
        ordered_json edges = ordered_json::array();
        for (const auto& e : c.edges)
            edges.push_back(ordered_json{{"u", e[0]}, {"v", e[1]}, {"weight", e[2]}});
        comps.push_back(ordered_json{{"kind", component_kind_name(c.kind)},
                                     {"vertices", c.vertices},
                                     {"edges", std::move(edges)}});
    }
    j["components"] = std::move(comps);

    ordered_json violations = ordered_json::array();
    for (std::uint32_t subset : a.weight_lemma.violations) violations.push_back(positions_json(subset));
    j["weight_lemma"] = ordered_json{
        {"mode", a.weight_lemma.mode == SubgraphMode::AllSubgraphs ? "all_subgraphs" : "sampled"},
        {"subsets_checked", a.weight_lemma.subsets_checked},
        {"min_slack", rational_json(a.weight_lemma.min_slack)},
        {"min_subset_vertices", positions_json(a.weight_lemma.min_subset)},
        {"violations", std::move(violations)},
        {"pass", a.weight_lemma.pass}};

    ordered_json adj_violations = ordered_json::array();
    for (auto [v, w] : a.adjacency_lemma.violations)
        adj_violations.push_back(ordered_json{{"vertex", v}, {"weight_to_h", w}});
    j["adjacency_lemma"] = ordered_json{{"vacuous", a.adjacency_lemma.vacuous},
                                        {"h_vertices", a.adjacency_lemma.h_vertices},
                                        {"h_weight", a.adjacency_lemma.h_weight},
                                        {"violations", std::move(adj_violations)},
                                        {"pass", a.adjacency_lemma.pass}};

    j["pigeonhole"] = ordered_json{{"max_zeros", a.pigeonhole.max_zeros},
                                   {"implied_c1_lower_bound", a.pigeonhole.implied_c1_lower_bound},
                                   {"total_zeros", a.pigeonhole.total_zeros},
                                   {"total_weight", a.pigeonhole.total_weight},
                                   {"invariants_ok", a.pigeonhole.invariants_ok},
                                   {"pass", a.pigeonhole_pass}};

    j["pass"] = a.pass;
    return j;
}

ordered_json witness_report(const WitnessOutcome& o, const BooleanFunction& f,
                            const std::vector<Certificate>& certs) {
    ordered_json cert_list = ordered_json::array();
    for (const Certificate& c : certs) cert_list.push_back(c.str());
    return ordered_json{{"schema_version", kSchemaVersion},
                        {"command", "witness"},
                        {"n", f.n()},
                        {"tt_hex", f.to_hex()},
                        {"certificates", std::move(cert_list)},
                        {"route", o.route},
                        {"k", o.k},
                        {"overlap_earned", o.overlap_earned},
                        {"input", input_json(o.result.input)},
                        {"sensitive_bits", o.result.sensitive_bits},
                        {"sensitive_count", o.result.sensitive_bits.size()},
                        {"measured_s0", optional_int(o.measured_s0)},
                        {"trace", trace_json(o.result.trace)},
                        {"pass", o.pass}};
}

ordered_json sweep_report(const SweepReport& r) {
    ordered_json mode;
    if (r.mode.kind == SweepMode::Exhaustive) {
        mode = ordered_json{{"kind", "exhaustive"}};
    } else {
        mode = ordered_json{{"kind", "random"},
                            {"samples", r.mode.samples},
                            {"seed", r.mode.seed},
                            {"rng", "splitmix64"}};
    }

    auto violations = [](const std::vector<SweepViolation>& vs) {
        ordered_json a = ordered_json::array();
        for (const SweepViolation& v : vs)
            a.push_back(ordered_json{{"tt_hex", v.tt_hex},
                                     {"index", v.index},
                                     {"s0", v.s0},
                                     {"s1", v.s1},
                                     {"bs0", v.bs0},
                                     {"C1", v.c1}});
        return a;
    };

    ordered_json frontier = ordered_json::array();
    for (const auto& [key, cell] : r.frontier)
        frontier.push_back(ordered_json{{"s0", key.first},
                                        {"bs0", key.second},
                                        {"min_C1", cell.min_c1},
                                        {"example_tt_hex", cell.example_hex}});

    ordered_json ratio = nullptr;
    if (r.ratio_defined) {
        ratio = rational_json(r.max_conjecture_ratio);
        ratio["witness_tt_hex"] = r.ratio_witness_hex;
    }

    return ordered_json{{"schema_version", kSchemaVersion},
                        {"command", "sweep"},
                        {"n", r.n},
                        {"mode", std::move(mode)},
                        {"functions_checked", r.functions_checked},
                        {"violations",
                         ordered_json{{"main_theorem", violations(r.main_violations)},
                                      {"kenyon_kutin", violations(r.kk_violations)},
                                      {"sandwich", violations(r.sandwich_violations)}}},
                        {"frontier", std::move(frontier)},
                        {"max_conjecture_ratio", std::move(ratio)},
                        {"pass", r.all_pass()}};
}

ordered_json search_report(int n, const ExtremalQuery& q, const ExtremalResult& r) {
    return ordered_json{{"schema_version", kSchemaVersion},
                        {"command", "search"},
                        {"n", n},
                        {"constraints",
                         ordered_json{{"s0", optional_int(q.s0)},
                                      {"bs0", optional_int(q.bs0)},
                                      {"s1", optional_int(q.s1)},
                                      {"C1", optional_int(q.c1)}}},
                        {"min_C1", r.min_c1},
                        {"matching_functions", r.matching_functions},
                        {"achieving_functions", r.achieving_functions},
                        {"canonical_examples", r.canonical_hex}};
}

ordered_json conjecture_json(const ConjectureReport& r) {
    return ordered_json{{"schema_version", kSchemaVersion},
                        {"command", "conjecture"},
                        {"n", r.n},
                        {"max_ratio", rational_json(r.max_ratio)},
                        {"witness_tt_hex", r.witness_hex},
                        {"functions_considered", r.functions_considered},
                        {"reference_constant", rational_json(Rational(2, 3))}};
}

std::string dump(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace bflab::reports
