#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bflab/boolfun.hpp"
#include "bflab/measures.hpp"
#include "bflab/rational.hpp"

namespace bflab {

struct SweepMode {
    enum Kind { Exhaustive, Random } kind = Exhaustive;
    std::uint64_t samples = 0;
    std::uint64_t seed = 1;

    static SweepMode exhaustive() { return {}; }
    static SweepMode random(std::uint64_t samples, std::uint64_t seed) {
        return {Random, samples, seed};
    }
};

/// One function that broke a checked inequality (expected never to occur).
struct SweepViolation {
    std::string tt_hex;
    std::uint64_t index = 0;
    int s0 = 0, s1 = 0, bs0 = 0, c1 = 0;
};

struct FrontierCell {
    int min_c1 = 0;
    std::uint64_t index = 0;  // first function achieving it
    std::string example_hex;
};

/// Per-function CSV row, kept verbatim so parallel runs can emit
/// byte-identical files in enumeration order.
struct SweepReport {
    int n = 0;
    SweepMode mode;
    std::uint64_t functions_checked = 0;
    std::vector<SweepViolation> main_violations;      // C1 >= (3/2) bs0/s0 - 1/2
    std::vector<SweepViolation> kk_violations;        // C1 >= bs0 / (2 s0)
    std::vector<SweepViolation> sandwich_violations;  // s1 <= C1 <= 2^(s0-1) s1
    std::map<std::pair<int, int>, FrontierCell> frontier;
    Rational max_conjecture_ratio;  // max bs0 / (s0 * s1)
    std::uint64_t ratio_index = 0;
    std::string ratio_witness_hex;
    bool ratio_defined = false;
    std::string csv;

    bool all_pass() const {
        return main_violations.empty() && kk_violations.empty() && sandwich_violations.empty();
    }
};

/// Checks the two certificate lower bounds and the sandwich band on every
/// (or every sampled) function of n inputs.  Work is split into fixed
/// chunks merged in enumeration order, so `jobs` never changes the report.
/// Exhaustive mode requires n <= 4, random mode n <= 12.
SweepReport sweep(int n, const SweepMode& mode, int jobs = 1, bool with_csv = false);

struct ExtremalQuery {
    std::optional<int> s0, bs0, s1, c1;
};

struct ExtremalResult {
    int min_c1 = 0;
    std::uint64_t matching_functions = 0;   // functions meeting the constraints
    std::uint64_t achieving_functions = 0;  // of those, achieving min_c1
    std::vector<std::string> canonical_hex; // dedup up to permutation + input complement
};

/// Exhaustive minimum-C1 search among functions matching the constraints,
/// deduplicated up to input permutation and input complementation (output
/// complement is excluded: it swaps the 0- and 1-sided measures).  Throws
/// std::invalid_argument when nothing matches.
ExtremalResult extremal_search(int n, const ExtremalQuery& query);

struct ConjectureReport {
    int n = 0;
    Rational max_ratio;
    std::uint64_t witness_index = 0;
    std::string witness_hex;
    std::uint64_t functions_considered = 0;
};

/// Exact maximum of bs0 / (s0 * s1) over all non-constant functions of n
/// inputs; informational only (the reference constant is 2/3 + o(1)).
ConjectureReport conjecture_report(int n);

}  // namespace bflab
