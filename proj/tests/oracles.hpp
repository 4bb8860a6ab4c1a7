#pragma once

// Brute-force reference implementations, kept deliberately independent of
// the library's algorithms: the packing oracle enumerates families of
// arbitrary sensitive blocks (no minimality reduction, no bounding), and
// the certificate oracle scans every subset as a candidate subcube.

#include <bit>
#include <vector>

#include "bflab/boolfun.hpp"
#include "bflab/prng.hpp"

namespace oracles {

using bflab::BooleanFunction;
using bflab::Word;

inline int oracle_sensitivity(const BooleanFunction& f, Word x) {
    int count = 0;
    for (int i = 0; i < f.n(); ++i)
        if (f.bit(x ^ (Word{1} << i)) != f.bit(x)) ++count;
    return count;
}

inline int oracle_block_sensitivity(const BooleanFunction& f, Word x) {
    std::vector<Word> sensitive;
    for (Word b = 1; b < f.table_size(); ++b)
        if (f.bit(x ^ b) != f.bit(x)) sensitive.push_back(b);
    int best = 0;
    auto rec = [&](auto&& self, size_t i, Word used, int count) -> void {
        if (count > best) best = count;
        for (size_t j = i; j < sensitive.size(); ++j)
            if ((sensitive[j] & used) == 0) self(self, j + 1, used | sensitive[j], count + 1);
    };
    rec(rec, 0, 0, 0);
    return best;
}

inline int oracle_certificate_complexity(const BooleanFunction& f, Word x) {
    int best = f.n();
    for (Word assigned = 0; assigned < f.table_size(); ++assigned) {
        if (std::popcount(assigned) >= best) continue;
        Word values = x & assigned;
        Word free = bflab::full_mask(f.n()) & ~assigned;
        bool constant = true;
        bool v = f.bit(values);
        for (Word sub = 0;;) {
            if (f.bit(values | sub) != v) {
                constant = false;
                break;
            }
            if (sub == free) break;
            sub = (sub - free) & free;
        }
        if (constant) best = std::popcount(assigned);
    }
    return best;
}

inline BooleanFunction random_function(int n, bflab::SplitMix64& rng) {
    BooleanFunction f(n);
    for (Word i = 0; i < f.table_size(); i += 64) {
        std::uint64_t word = rng.next();
        for (int b = 0; b < 64 && i + b < f.table_size(); ++b)
            if ((word >> b) & 1) f.set_bit(i + b, true);
    }
    return f;
}

}  // namespace oracles
