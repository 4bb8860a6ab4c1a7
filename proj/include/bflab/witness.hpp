#pragma once

#include <optional>
#include <vector>

#include "bflab/boolfun.hpp"
#include "bflab/certgraph.hpp"

namespace bflab {

enum class StepKind { OverlapFix, Singleton, PathHead, Pair, Cycle };

const char* step_kind_name(StepKind kind);

/// One reduction step: which certificates it consumed, the positions it
/// fixed (original coordinates) and the sensitive bits it earned.
struct TraceStep {
    StepKind kind;
    std::vector<int> certificates;
    Certificate fixed;
    std::vector<int> earned;
};

/// An explicit 0-input together with positions verified sensitive at it.
/// Every recorded bit flips the function's value; the bit count is at
/// least the number of certificates the procedure consumed.
struct WitnessResult {
    InputWord input;
    std::vector<int> sensitive_bits;  // ascending
    std::vector<TraceStep> trace;
};

/// Among the assignments of `free` whose restriction is not identically 1,
/// the one with the most positions set to preferred_value; ties go to the
/// numerically smallest assignment word.  Throws hypothesis_error when all
/// restrictions are identically 1.
Certificate largest_nonconstant_subfunction(const BooleanFunction& f, Block free,
                                            bool preferred_value);

/// The overlap-elimination phase: fixes every overlap position to 0,
/// harvests one sensitive bit from each certificate that assigned 1 there
/// (the set D), and re-minimizes the survivors.  Requires f(all-0) = 0,
/// every certificate a valid 1-certificate with at most 2 contradictions
/// in total, and every position assigned 1 by exactly one certificate.
struct OverlapReduction {
    BooleanFunction reduced;             // restricted function, renumbered
    std::vector<int> kept_positions;     // new position -> original position
    std::vector<Certificate> certs;      // survivors in reduced coordinates
    std::vector<int> surviving_indices;  // original indices of survivors
    Certificate fixed;                   // original-coordinate assignment
    int earned_count = 0;                // t = |D|
    std::vector<int> earned_positions;   // one per member of D
    std::vector<TraceStep> trace;
};
OverlapReduction reduce_overlaps(const BooleanFunction& f, const std::vector<Certificate>& certs);

/// The component walk: processes singletons, path heads, weight-2 pairs and
/// cycles in deterministic order, then completes the partial assignment to a
/// 0-input and verifies every earned bit by evaluation.  Requires f not
/// identically 1 and the certificates minimal, pairwise non-overlapping,
/// with at most 2 contradictions each (run reduce_overlaps first if they
/// overlap).
WitnessResult witness_sensitive_input(const BooleanFunction& f,
                                      const std::vector<Certificate>& certs);

/// Full pipeline for certificate families with overlaps: reduce, then walk,
/// then cross-check against the measured s0 when the function is small
/// enough to profile.
struct Lemma3Report {
    int k = 0;
    int overlap_earned = 0;
    WitnessResult result;
    std::optional<int> measured_s0;
    bool pass = false;
};
Lemma3Report verify_lemma3(const BooleanFunction& f, const std::vector<Certificate>& certs);

}  // namespace bflab
