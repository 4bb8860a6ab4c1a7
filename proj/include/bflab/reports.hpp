#pragma once

#include <nlohmann/json_fwd.hpp>
#include <optional>
#include <string>

#include "bflab/certgraph.hpp"
#include "bflab/constructions.hpp"
#include "bflab/search.hpp"
#include "bflab/witness.hpp"

// JSON report builders used by both the CLI and the python module.  Field
// names are pinned in docs/schema.md; every report carries schema_version.

namespace bflab::reports {

constexpr int kSchemaVersion = 1;

/// Full lemma/theorem verification of one function via its zero-input
/// instance.
struct GraphAnalysis {
    MeasureProfile prof;            // of the original function
    MainTheoremReport main_theorem;
    ZeroInputInstance instance;
    int instance_s0 = 0;
    std::optional<int> instance_c1;
    ContradictionGraph graph;
    std::vector<Component> components;
    WeightLemmaReport weight_lemma;
    AdjacencyLemmaReport adjacency_lemma;
    PigeonholeReport pigeonhole;
    bool pigeonhole_pass = false;
    bool pass = false;
};
GraphAnalysis analyze_graph(const BooleanFunction& f);

/// Witness run with automatic routing: families with overlaps go through
/// the overlap reduction, non-overlapping ones straight to the walk.
struct WitnessOutcome {
    std::string route;  // "direct" or "overlap_reduction"
    int k = 0;
    int overlap_earned = 0;
    WitnessResult result;
    std::optional<int> measured_s0;
    bool pass = false;
};
WitnessOutcome run_witness(const BooleanFunction& f, const std::vector<Certificate>& certs);

nlohmann::ordered_json profile_json(const MeasureProfile& p);
nlohmann::ordered_json measure_report(const BooleanFunction& f, bool per_input);
nlohmann::ordered_json construct_report(const Construction& c);
nlohmann::ordered_json graph_report(const GraphAnalysis& a, const BooleanFunction& f);
nlohmann::ordered_json witness_report(const WitnessOutcome& o, const BooleanFunction& f,
                                      const std::vector<Certificate>& certs);
nlohmann::ordered_json sweep_report(const SweepReport& r);
nlohmann::ordered_json search_report(int n, const ExtremalQuery& q, const ExtremalResult& r);
nlohmann::ordered_json conjecture_json(const ConjectureReport& r);

std::string dump(const nlohmann::ordered_json& j);

}  // namespace bflab::reports
