#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "bflab/boolfun.hpp"
#include "bflab/measures.hpp"
#include "bflab/rational.hpp"

namespace bflab {

/// The normalized setting of the main theorem's proof: block sensitivity of
/// the all-0 input is the function's bs0, the chosen disjoint minimal blocks
/// cover every position, and cert i is the minimum certificate of the input
/// that flips block i.  Invariants established by build_zero_instance:
///   - fn(all-0) = 0, every position belongs to exactly one block
///   - cert i assigns 1 exactly on block i and only 0s elsewhere
///   - each position is assigned 1 by exactly one certificate
///   - each 0 of a certificate contradicts exactly one other certificate
struct ZeroInputInstance {
    BooleanFunction fn;
    std::vector<Block> blocks;
    std::vector<Certificate> certs;

    // normalization applied to the original function
    int original_n = 0;
    Word shift = 0;                  // xor applied so bs0 is achieved at all-0
    std::vector<int> kept_positions; // new position (1-based) -> original position
};

/// Positions where one certificate assigns 1 and the other 0.
int contradictions(const Certificate& c, const Certificate& d);
/// Positions where both assign the same value.
int overlaps(const Certificate& c, const Certificate& d);

/// Requires f(all-0) = 0 and f non-constant (shift the input first
/// otherwise) and n <= 12.  Both the shift to the best 0-input and the
/// block packing are tie-broken deterministically: smallest input index,
/// then the lexicographically smallest sorted block-mask sequence.
ZeroInputInstance build_zero_instance(const BooleanFunction& f);

/// Complete weighted graph on certificates, weight = contradiction count.
struct ContradictionGraph {
    int order = 0;
    std::vector<std::vector<int>> weight;

    static ContradictionGraph from_certificates(const std::vector<Certificate>& certs);

    int edge(int i, int j) const { return weight[i][j]; }
    /// Sum of edge weights inside the vertex subset (bitmask over vertices).
    int induced_weight(std::uint32_t subset) const;
    int total_weight() const;
    /// Weighted degree of v within the whole graph.
    int degree(int v) const;
};

ContradictionGraph build_graph(const ZeroInputInstance& inst);

enum class SubgraphMode { AllSubgraphs, Sampled };

/// Checks w >= (3/2) m^2 / s0 - (3/2) m over induced subgraphs of every
/// order m (all of them, or a seeded sample).  Violations are report
/// content, not errors.
struct WeightLemmaReport {
    bool pass = true;
    SubgraphMode mode = SubgraphMode::AllSubgraphs;
    std::uint64_t subsets_checked = 0;
    Rational min_slack;
    std::uint32_t min_subset = 0;
    std::vector<std::uint32_t> violations;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
};
WeightLemmaReport verify_weight_lemma(const ContradictionGraph& g, int s0, SubgraphMode mode,
                                      std::uint64_t samples = 0, std::uint64_t seed = 1);

/// Finds the minimum-weight induced subgraph H of order s0 (exhaustive,
/// ties by lexicographically smallest vertex set) and checks that every
/// outside vertex connects to H with total weight >= 3.
struct AdjacencyLemmaReport {
    bool pass = true;
    bool vacuous = false;  // order <= s0: no outside vertices
    std::vector<int> h_vertices;
    int h_weight = 0;
    std::vector<std::pair<int, int>> violations;  // (vertex, weight to H)
};
AdjacencyLemmaReport verify_adjacency_lemma(const ContradictionGraph& g, int s0,
                                            std::uint64_t budget = 2000000);

/// Zero counting behind the pigeonhole step.  Each 0 of a certificate
/// participates in exactly one contradiction, so the total graph weight
/// equals the total zero count; the certificate with the most zeros plus
/// its at-least-one 1 bounds C1 from below.
struct PigeonholeReport {
    int max_zeros = 0;
    int implied_c1_lower_bound = 0;
    int total_zeros = 0;
    int total_weight = 0;
    bool invariants_ok = true;
};
PigeonholeReport pigeonhole_bound(const ZeroInputInstance& inst);

/// Profile-based check of C1 >= (3/2) bs0/s0 - 1/2 and of the earlier
/// C1 >= bs0/(2 s0) bound, with exact rational slacks.
struct MainTheoremReport {
    MeasureProfile prof;
    Rational main_slack;
    Rational kk_slack;
    bool main_pass = false;
    bool kk_pass = false;
    bool pass() const { return main_pass && kk_pass; }
};
MainTheoremReport verify_main_theorem(const BooleanFunction& f);

/// Components of the positive-weight edge graph.  Under the at-most-2-
/// contradictions hypothesis only the first four kinds occur; Other flags
/// that the hypothesis fails for this certificate family.
enum class ComponentKind { Singleton, Pair2, Path, Cycle, Other };

struct Component {
    ComponentKind kind = ComponentKind::Singleton;
    std::vector<int> vertices;                          // ascending
    std::vector<std::array<int, 3>> edges;              // (u, v, weight), u < v
};

std::vector<Component> classify_components(const ContradictionGraph& g,
                                           const std::vector<Certificate>& certs);

const char* component_kind_name(ComponentKind kind);

}  // namespace bflab
