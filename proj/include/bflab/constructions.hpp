#pragma once

#include <vector>

#include "bflab/boolfun.hpp"
#include "bflab/measures.hpp"

namespace bflab {

enum class Family { G0, OrComposedG0, Or, And, Const0, Const1 };

struct ConstructionSpec {
    Family family = Family::G0;
    int k = 0;  // G0 block-sensitivity parameter
    int m = 0;  // OR branches
    int r = 0;  // per-branch parameter, k = m*r
    int n = 0;  // Or / And / Const width
};

/// A generated function together with its defining certificates (when the
/// family has them) and the closed-form profile it is claimed to achieve.
struct Construction {
    ConstructionSpec spec;
    BooleanFunction fn;
    std::vector<Certificate> certificates;
    MeasureProfile claimed;
};

/// The 2k-variable function whose 1-inputs are exactly the satisfying
/// assignments of k certificates c_0..c_{k-1}; c_i sets x_{2i+1} = x_{2i+2} = 1,
/// x_{2j+1} = 0 for j != i, and x_{2j+2} = 0 for the floor(k/2) successors
/// j = i+1..i+floor(k/2) taken mod k (residues 0..k-1).  Each certificate
/// has length floor(3k/2)+1.  Requires 2 <= k <= 12.
Construction g0(int k);

/// OR of m independent copies of g0(r) on disjoint position blocks; branch i
/// occupies positions (i-1)*2r+1 .. i*2r.  Requires m >= 1, r >= 2, 2mr <= 24.
Construction or_compose_g0(int m, int r);

/// Baseline functions (OR_n, AND_n, constants) with their exact profiles.
Construction named(Family family, int n);

/// The closed-form profile the construction is claimed to achieve; only the
/// claimed fields are present.
MeasureProfile claimed_profile(const ConstructionSpec& spec);

}  // namespace bflab
