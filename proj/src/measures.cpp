#include "bflab/measures.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

namespace bflab {

namespace {

void check_per_input(const BooleanFunction& f, const InputWord& x, const char* op) {
    if (x.n != f.n()) throw std::invalid_argument("input dimension mismatch");
    if (f.n() > kMaxPerInput)
        throw capacity_error(std::string(op) + " is exact-only and limited to n <= 16");
}

/// Next mask of the same popcount (Gosper); masks of one size are visited
/// in ascending numeric order.
Word next_same_size(Word v) {
    Word c = v & -v;
    Word r = v + c;
    return (((r ^ v) >> 2) / c) | r;
}

struct PackingContext {
    const std::vector<Block>& blocks;
    int best = 0;

    void dfs(size_t start, Word used, int count) {
        // candidates still disjoint from `used`
        int candidates = 0;
        for (size_t i = start; i < blocks.size(); ++i)
            if ((blocks[i].mask & used) == 0) ++candidates;
        if (count + candidates <= best) return;
        for (size_t i = start; i < blocks.size(); ++i) {
            if (blocks[i].mask & used) continue;
            int c = count + 1;
            best = std::max(best, c);
            dfs(i + 1, used | blocks[i].mask, c);
        }
    }
};

/// Memo for "is f constant on the subcube (assigned, values)" keyed by the
/// packed pair; shared across the inputs of one profile() call.
struct ConstancyMemo {
    std::unordered_map<std::uint64_t, bool> map;

    bool constant(const BooleanFunction& f, Word assigned, Word values) {
        std::uint64_t key = (static_cast<std::uint64_t>(assigned) << kMaxPositions) | values;
        auto it = map.find(key);
        if (it != map.end()) return it->second;
        bool v;
        bool ok = subcube_constant(f, Certificate(f.n(), assigned, values), v);
        map.emplace(key, ok);
        return ok;
    }
};

Certificate certificate_at_impl(const BooleanFunction& f, const InputWord& x, ConstancyMemo* memo) {
    // Sizes ascend; within a size, assigned masks ascend numerically, so the
    // first constant subcube found is the canonical minimum certificate.
    for (int size = 0; size <= f.n(); ++size) {
        if (size == 0) {
            if (f.is_constant()) return Certificate(f.n(), 0, 0);
            continue;
        }
        Word last = full_mask(f.n()) & ~(full_mask(f.n()) >> size);
        for (Word s = full_mask(size);; s = next_same_size(s)) {
            Word values = x.bits & s;
            bool ok;
            if (memo) {
                ok = memo->constant(f, s, values);
            } else {
                bool v;
                ok = subcube_constant(f, Certificate(f.n(), s, values), v);
            }
            if (ok) return Certificate(f.n(), s, values);
            if (s == last) break;
        }
    }
    throw std::logic_error("certificate_at: no certificate found");  // unreachable
}

MeasureProfile profile_impl(const BooleanFunction& f) {
    MeasureProfile p;
    ConstancyMemo memo;
    for (Word i = 0; i < f.table_size(); ++i) {
        InputWord x(f.n(), i);
        bool z = f.bit(i);
        int s = sensitivity_at(f, x);
        int bs = block_sensitivity_at(f, x);
        int c = certificate_at_impl(f, x, &memo).length();
        auto& ps = z ? p.s1 : p.s0;
        auto& pbs = z ? p.bs1 : p.bs0;
        auto& pc = z ? p.c1 : p.c0;
        ps = std::max(ps.value_or(0), s);
        pbs = std::max(pbs.value_or(0), bs);
        pc = std::max(pc.value_or(0), c);
    }
    return p;
}

int max_present(const std::optional<int>& a, const std::optional<int>& b) {
    if (a && b) return std::max(*a, *b);
    if (a) return *a;
    if (b) return *b;
    throw std::logic_error("profile has neither side present");
}

}  // namespace

int MeasureProfile::s() const { return max_present(s0, s1); }
int MeasureProfile::bs() const { return max_present(bs0, bs1); }
int MeasureProfile::C() const { return max_present(c0, c1); }

int sensitivity_at(const BooleanFunction& f, const InputWord& x) {
    check_per_input(f, x, "sensitivity_at");
    bool v = f.bit(x.bits);
    int count = 0;
    for (int pos = 1; pos <= f.n(); ++pos)
        if (f.bit(x.bits ^ position_bit(pos)) != v) ++count;
    return count;
}

std::vector<Block> minimal_sensitive_blocks(const BooleanFunction& f, const InputWord& x) {
    check_per_input(f, x, "minimal_sensitive_blocks");
    bool v = f.bit(x.bits);
    std::vector<Block> minima;
    if (f.n() == 0) return minima;
    for (int size = 1; size <= f.n(); ++size) {
        Word last = full_mask(f.n()) & ~(full_mask(f.n()) >> size);
        for (Word b = full_mask(size);; b = next_same_size(b)) {
            if (f.bit(x.bits ^ b) != v) {
                bool has_smaller = false;
                for (const Block& m : minima)
                    if ((m.mask & b) == m.mask) {
                        has_smaller = true;
                        break;
                    }
                if (!has_smaller) minima.push_back(Block(b));
            }
            if (b == last) break;
        }
    }
    return minima;
}

int block_sensitivity_at(const BooleanFunction& f, const InputWord& x) {
    std::vector<Block> blocks = minimal_sensitive_blocks(f, x);
    PackingContext ctx{blocks};
    ctx.dfs(0, 0, 0);
    return ctx.best;
}

Certificate certificate_at(const BooleanFunction& f, const InputWord& x) {
    check_per_input(f, x, "certificate_at");
    return certificate_at_impl(f, x, nullptr);
}

int certificate_complexity_at(const BooleanFunction& f, const InputWord& x) {
    return certificate_at(f, x).length();
}

MeasureProfile profile(const BooleanFunction& f) {
    if (f.n() > kMaxProfile) throw capacity_error("profile is exact-only and limited to n <= 12");
    return profile_impl(f);
}

bool matches_claims(const MeasureProfile& measured, const MeasureProfile& claim) {
    auto ok = [](const std::optional<int>& got, const std::optional<int>& want) {
        return !want || (got && *got == *want);
    };
    return ok(measured.s0, claim.s0) && ok(measured.s1, claim.s1) && ok(measured.bs0, claim.bs0) &&
           ok(measured.bs1, claim.bs1) && ok(measured.c0, claim.c0) && ok(measured.c1, claim.c1);
}

}  // namespace bflab
