#pragma once

#include <optional>
#include <vector>

#include "bflab/boolfun.hpp"

namespace bflab {

/// All six one-sided measures of a function plus their maxima.  A field is
/// empty exactly when the function has no inputs of that value (constant
/// functions), because a maximum over an empty input set is undefined.
struct MeasureProfile {
    std::optional<int> s0, s1, bs0, bs1, c0, c1;

    int s() const;
    int bs() const;
    int C() const;

    friend bool operator==(const MeasureProfile&, const MeasureProfile&) = default;
};

/// Exact per-input operations are limited to n <= 16 and whole-function
/// profiles to n <= 12; beyond that they raise capacity_error instead of
/// approximating.
constexpr int kMaxPerInput = 16;
constexpr int kMaxProfile = 12;

/// |{ i : f(x) != f(x^{i}) }|
int sensitivity_at(const BooleanFunction& f, const InputWord& x);

/// All inclusion-minimal nonempty blocks B with f(x^B) != f(x), ordered by
/// ascending size, then ascending mask value.
std::vector<Block> minimal_sensitive_blocks(const BooleanFunction& f, const InputWord& x);

/// Size of a maximum pairwise-disjoint family of sensitive blocks.
/// Computed by exact branch and bound over the minimal blocks; any family
/// of sensitive blocks can be shrunk memberwise to minimal ones, so
/// restricting to them loses nothing.
int block_sensitivity_at(const BooleanFunction& f, const InputWord& x);

/// A minimum-length certificate satisfied by x, ties broken by the
/// numerically smallest assigned-position mask.
Certificate certificate_at(const BooleanFunction& f, const InputWord& x);

int certificate_complexity_at(const BooleanFunction& f, const InputWord& x);

MeasureProfile profile(const BooleanFunction& f);

/// True when every claimed (present) field of `claim` equals the measured
/// value; fields the claim leaves empty are not compared.
bool matches_claims(const MeasureProfile& measured, const MeasureProfile& claim);

}  // namespace bflab
