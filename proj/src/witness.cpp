#include "bflab/witness.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace bflab {

namespace {

bool subcube_all_one(const BooleanFunction& f, const Certificate& assignment) {
    bool v;
    return subcube_constant(f, assignment, v) && v;
}

int lowest_position(Word mask) { return std::countr_zero(mask) + 1; }

/// Values for `free_mask` whose subfunction (under `context`) is not
/// identically 1, maximizing agreement with `preferred`; ascending
/// enumeration makes the numerically smallest word win ties.
Word lns_values(const BooleanFunction& f, const Certificate& context, Word free_mask,
                Word preferred) {
    std::vector<int> free_pos;
    for (Word m = free_mask; m; m &= m - 1) free_pos.push_back(std::countr_zero(m) + 1);
    int count = static_cast<int>(free_pos.size());
    int best_agree = -1;
    Word best = 0;
    for (Word counter = 0; counter < (Word{1} << count); ++counter) {
        Word v = 0;
        for (int j = 0; j < count; ++j)
            if ((counter >> j) & 1) v |= position_bit(free_pos[j]);
        if (subcube_all_one(f, context.merged(Certificate(f.n(), free_mask, v)))) continue;
        int agree = std::popcount(~(v ^ preferred) & free_mask);
        if (agree > best_agree) {
            best_agree = agree;
            best = v;
        }
    }
    if (best_agree < 0)
        throw hypothesis_error("every assignment of the free positions leaves an identically-1 subfunction");
    return best;
}

/// Drops removable positions, highest index first, until the certificate is
/// minimal with respect to f under `context`.
Certificate minimize_in_context(const BooleanFunction& f, const Certificate& context,
                                Certificate cert) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (int pos = f.n(); pos >= 1; --pos) {
            if (!cert.assigns(pos)) continue;
            if (subcube_all_one(f, context.merged(cert.without(pos)))) {
                cert = cert.without(pos);
                changed = true;
                break;
            }
        }
    }
    return cert;
}

int weighted_degree(const std::vector<Certificate>& certs, size_t i) {
    int d = 0;
    for (size_t j = 0; j < certs.size(); ++j)
        if (j != i) d += contradictions(certs[i], certs[j]);
    return d;
}

void validate_lemma4(const BooleanFunction& f, const std::vector<Certificate>& certs) {
    if (f.is_constant() && f.constant_value())
        throw hypothesis_error("function is identically 1");
    for (size_t i = 0; i < certs.size(); ++i) {
        if (!is_one_certificate(f, certs[i]))
            throw hypothesis_error("certificate " + std::to_string(i) + " is not a 1-certificate");
        if (!is_minimal_certificate(f, certs[i]))
            throw hypothesis_error("certificate " + std::to_string(i) + " is not minimal");
    }
    for (size_t i = 0; i < certs.size(); ++i)
        for (size_t j = i + 1; j < certs.size(); ++j)
            if (overlaps(certs[i], certs[j]) > 0)
                throw hypothesis_error("certificates " + std::to_string(i) + " and " +
                                       std::to_string(j) + " overlap");
    for (size_t i = 0; i < certs.size(); ++i) {
        int d = weighted_degree(certs, i);
        if (d > 2)
            throw hypothesis_error("certificate " + std::to_string(i) + " has " +
                                   std::to_string(d) + " contradictions, more than 2");
    }
}

void validate_lemma3(const BooleanFunction& f, const std::vector<Certificate>& certs) {
    if (f.bit(0))
        throw hypothesis_error("f(all-0) must be 0");
    for (size_t i = 0; i < certs.size(); ++i)
        if (!is_one_certificate(f, certs[i]))
            throw hypothesis_error("certificate " + std::to_string(i) + " is not a 1-certificate");
    for (size_t i = 0; i < certs.size(); ++i) {
        int d = weighted_degree(certs, i);
        if (d > 2)
            throw hypothesis_error("certificate " + std::to_string(i) + " has " +
                                   std::to_string(d) + " contradictions, more than 2");
    }
    for (int pos = 1; pos <= f.n(); ++pos) {
        int owners = 0;
        for (const Certificate& c : certs)
            if (c.assigns(pos) && c.value_at(pos)) ++owners;
        if (owners != 1)
            throw hypothesis_error("position " + std::to_string(pos) + " is assigned 1 by " +
                                   std::to_string(owners) + " certificates, expected exactly one");
    }
}

struct AliveCert {
    int index;  // original certificate index
    Certificate cert;
};

struct ReductionCore {
    Certificate context;
    std::vector<AliveCert> survivors;
    std::vector<int> earned;
    std::vector<TraceStep> trace;
};

/// The overlap-elimination procedure in original coordinates.
ReductionCore reduce_overlaps_core(const BooleanFunction& f, const std::vector<Certificate>& certs) {
    validate_lemma3(f, certs);
    ReductionCore core;
    core.context = Certificate(f.n(), 0, 0);

    // an overlap position has two certificates assigning 0 and one assigning 1
    Word overlap_mask = 0;
    std::vector<std::pair<int, int>> d_members;  // (certificate index, its overlap position)
    for (int pos = 1; pos <= f.n(); ++pos) {
        int zeros = 0;
        int owner = -1;
        for (size_t i = 0; i < certs.size(); ++i) {
            if (!certs[i].assigns(pos)) continue;
            if (certs[i].value_at(pos))
                owner = static_cast<int>(i);
            else
                ++zeros;
        }
        if (zeros >= 2) {
            overlap_mask |= position_bit(pos);
            d_members.emplace_back(owner, pos);
        }
    }
    std::sort(d_members.begin(), d_members.end());
    for (size_t a = 1; a < d_members.size(); ++a)
        if (d_members[a].first == d_members[a - 1].first)
            throw std::logic_error("one certificate owns two overlap positions");

    if (overlap_mask) {
        core.context = Certificate(f.n(), overlap_mask, 0);
        core.trace.push_back({StepKind::OverlapFix, {}, core.context, {}});
    }

    std::set<int> in_d;
    for (auto [idx, pos] : d_members) in_d.insert(idx);

    for (auto [idx, overlap_pos] : d_members) {
        const Certificate& c = certs[idx];
        if (c.zeros() != 0)
            throw std::logic_error("invalidated certificate assigns a 0");
        Word rest = c.assigned & ~position_bit(overlap_pos);
        if (rest & core.context.assigned)
            throw std::logic_error("invalidated certificate touches an already fixed position");

        TraceStep step{StepKind::OverlapFix, {idx}, Certificate(f.n(), 0, 0), {}};
        if (rest == 0) {
            // single-position certificate: flipping the overlap position
            // lands inside c
            step.earned.push_back(overlap_pos);
        } else {
            Word v = lns_values(f, core.context, rest, c.values & rest);
            step.fixed = Certificate(f.n(), rest, v);
            core.context = core.context.merged(step.fixed);
            if (v == (c.values & rest)) {
                step.earned.push_back(overlap_pos);
            } else {
                step.earned.push_back(lowest_position((v ^ c.values) & rest));
            }
        }
        core.earned.push_back(step.earned.front());
        core.trace.push_back(std::move(step));
    }

    for (size_t i = 0; i < certs.size(); ++i) {
        if (in_d.count(static_cast<int>(i))) continue;
        if (!core.context.compatible(certs[i]))
            throw std::logic_error("surviving certificate contradicts the overlap fixing");
        Certificate minimized = minimize_in_context(f, core.context, certs[i]);
        if (minimized.empty())
            throw std::logic_error("surviving certificate vanished; function became constant 1");
        core.survivors.push_back({static_cast<int>(i), minimized});
    }
    return core;
}

/// The component walk of the no-overlap case, resumable after an overlap
/// reduction via a prefilled context.
class WitnessEngine {
public:
    WitnessEngine(const BooleanFunction& f, ReductionCore core)
        : f_(f), context_(std::move(core.context)), alive_(std::move(core.survivors)),
          earned_(std::move(core.earned)), trace_(std::move(core.trace)) {}

    WitnessResult run() {
        while (!alive_.empty()) {
            std::vector<Certificate> current;
            current.reserve(alive_.size());
            for (const AliveCert& a : alive_) current.push_back(a.cert);
            ContradictionGraph graph = ContradictionGraph::from_certificates(current);
            Component comp = classify_components(graph, current).front();

            std::vector<int> consumed;
            switch (comp.kind) {
                case ComponentKind::Singleton:
                    consumed = process_singleton(comp.vertices[0]);
                    break;
                case ComponentKind::Path:
                    consumed = process_path_head(graph, comp);
                    break;
                case ComponentKind::Pair2:
                    consumed = process_pair(comp);
                    break;
                case ComponentKind::Cycle:
                    consumed = process_cycle(graph, comp);
                    break;
                case ComponentKind::Other:
                    throw hypothesis_error("certificate component is not a singleton, pair, path or cycle");
            }

            std::vector<AliveCert> next;
            for (int v = 0; v < static_cast<int>(alive_.size()); ++v)
                if (std::find(consumed.begin(), consumed.end(), v) == consumed.end())
                    next.push_back(alive_[v]);
            alive_ = std::move(next);
            for (AliveCert& a : alive_) {
                if (!context_.compatible(a.cert) || !subcube_all_one(f_, context_.merged(a.cert)))
                    throw std::logic_error("remaining certificate invalidated by the reduction");
                a.cert = minimize_in_context(f_, context_, a.cert);
                if (a.cert.empty())
                    throw std::logic_error("certificate vanished; function became constant 1");
            }
        }
        return finish();
    }

private:
    void fix(int pos, bool value, Certificate& step_fixed) {
        if (context_.assigns(pos)) throw std::logic_error("position fixed twice");
        context_ = context_.with(pos, value);
        step_fixed = step_fixed.with(pos, value);
    }

    void fix_word(Word mask, Word values, Certificate& step_fixed) {
        for (Word m = mask; m; m &= m - 1) {
            int pos = std::countr_zero(m) + 1;
            fix(pos, (values >> (pos - 1)) & 1, step_fixed);
        }
    }

    /// Fix all of S except one position per the certificate, the chosen
    /// position opposite; flipping it then lands inside the certificate.
    std::vector<int> process_singleton(int v) {
        const Certificate& c = alive_[v].cert;
        int last = 32 - std::countl_zero(c.assigned);  // highest assigned position
        TraceStep step{StepKind::Singleton, {alive_[v].index}, Certificate(f_.n(), 0, 0), {}};
        fix_word(c.assigned & ~position_bit(last), c.values, step.fixed);
        fix(last, !c.value_at(last), step.fixed);
        step.earned.push_back(last);
        earned_.push_back(last);
        trace_.push_back(std::move(step));
        return {v};
    }

    std::vector<int> process_path_head(const ContradictionGraph& graph, const Component& comp) {
        int head = -1;
        std::vector<int> deg(alive_.size(), 0);
        for (const auto& e : comp.edges) {
            ++deg[e[0]];
            ++deg[e[1]];
        }
        for (int v : comp.vertices)
            if (deg[v] == 1) {
                head = v;
                break;  // vertices ascend, so this is the lower-indexed endpoint
            }
        int neighbor = -1;
        for (int u : comp.vertices)
            if (u != head && graph.edge(head, u) > 0) neighbor = u;

        const Certificate& c = alive_[head].cert;
        const Certificate& d = alive_[neighbor].cert;
        Word diff = c.assigned & d.assigned & (c.values ^ d.values);
        if (std::popcount(diff) != 1) throw std::logic_error("path edge without a unique contradiction");
        int j = lowest_position(diff);

        TraceStep step{StepKind::PathHead, {alive_[head].index, alive_[neighbor].index},
                       Certificate(f_.n(), 0, 0), {}};
        fix_word(c.assigned & ~position_bit(j), c.values, step.fixed);
        fix(j, d.value_at(j), step.fixed);
        step.earned.push_back(j);
        earned_.push_back(j);
        trace_.push_back(std::move(step));
        return {head};
    }

    std::vector<int> process_pair(const Component& comp) {
        int a = comp.vertices[0], b = comp.vertices[1];
        const Certificate& c = alive_[a].cert;
        const Certificate& d = alive_[b].cert;
        Word diff = c.assigned & d.assigned & (c.values ^ d.values);
        if (std::popcount(diff) != 2) throw std::logic_error("pair without exactly two contradictions");
        int i = lowest_position(diff);
        int j = 32 - std::countl_zero(diff);

        TraceStep step{StepKind::Pair, {alive_[a].index, alive_[b].index},
                       Certificate(f_.n(), 0, 0), {}};
        fix_word(c.assigned & ~position_bit(j), c.values, step.fixed);
        fix(j, d.value_at(j), step.fixed);
        step.earned.push_back(j);
        earned_.push_back(j);

        Word t_rest = d.assigned & ~c.assigned;
        if (t_rest == 0) {
            step.earned.push_back(i);
            earned_.push_back(i);
        } else {
            Word v = lns_values(f_, context_, t_rest, d.values & t_rest);
            fix_word(t_rest, v, step.fixed);
            int got;
            if (v == (d.values & t_rest))
                got = i;
            else
                got = lowest_position((v ^ d.values) & t_rest);
            step.earned.push_back(got);
            earned_.push_back(got);
        }
        trace_.push_back(std::move(step));
        return {a, b};
    }

    std::vector<int> process_cycle(const ContradictionGraph& graph, const Component& comp) {
        int m = static_cast<int>(comp.vertices.size());
        // cyclic order: start at the smallest vertex, then its smaller neighbor
        std::vector<int> order{comp.vertices[0]};
        std::vector<bool> used(alive_.size(), false);
        used[order[0]] = true;
        {
            std::vector<int> nbrs;
            for (int u : comp.vertices)
                if (u != order[0] && graph.edge(order[0], u) > 0) nbrs.push_back(u);
            order.push_back(std::min(nbrs[0], nbrs[1]));
            used[order[1]] = true;
        }
        while (static_cast<int>(order.size()) < m) {
            int cur = order.back();
            for (int u : comp.vertices)
                if (!used[u] && graph.edge(cur, u) > 0) {
                    order.push_back(u);
                    used[u] = true;
                    break;
                }
        }

        std::vector<Certificate> walk;  // working copies, re-minimized as we go
        walk.reserve(m);
        for (int v : order) walk.push_back(alive_[v].cert);

        Word j12_mask = walk[0].assigned & walk[1].assigned & (walk[0].values ^ walk[1].values);
        if (std::popcount(j12_mask) != 1) throw std::logic_error("cycle edge without a unique contradiction");
        int j12 = lowest_position(j12_mask);

        for (int step_i = 1; step_i < m; ++step_i) {
            const Certificate& cur = walk[step_i];
            const Certificate& nxt = walk[(step_i + 1) % m];
            Word unfixed = cur.assigned & ~context_.assigned;
            Word diff = cur.assigned & nxt.assigned & (cur.values ^ nxt.values);
            TraceStep step{StepKind::Cycle, {alive_[order[step_i]].index},
                           Certificate(f_.n(), 0, 0), {}};
            if (diff) {
                if (std::popcount(diff) != 1)
                    throw std::logic_error("cycle edge with more than one contradiction");
                int j = lowest_position(diff);
                if (!(unfixed & position_bit(j)))
                    throw std::logic_error("cycle contradiction position already fixed");
                fix(j, nxt.value_at(j), step.fixed);
                fix_word(unfixed & ~position_bit(j), cur.values, step.fixed);
                step.earned.push_back(j);
            } else {
                // the contradiction vanished during re-minimization: any
                // position flipped against cur still certifies it
                if (!unfixed) throw std::logic_error("cycle certificate fully fixed");
                int p = lowest_position(unfixed);
                fix(p, !cur.value_at(p), step.fixed);
                fix_word(unfixed & ~position_bit(p), cur.values, step.fixed);
                step.earned.push_back(p);
            }
            earned_.push_back(step.earned.front());
            trace_.push_back(std::move(step));

            for (int t = step_i + 1; t < m; ++t) {
                if (!context_.compatible(walk[t]) || !subcube_all_one(f_, context_.merged(walk[t])))
                    throw std::logic_error("cycle certificate invalidated mid-walk");
                walk[t] = minimize_in_context(f_, context_, walk[t]);
                if (walk[t].empty())
                    throw std::logic_error("cycle certificate vanished mid-walk");
            }
        }

        // closing the cycle on c_1
        const Certificate& c1 = walk[0];
        Word t_mask = c1.assigned & ~context_.assigned;
        TraceStep step{StepKind::Cycle, {alive_[order[0]].index}, Certificate(f_.n(), 0, 0), {}};
        if (t_mask == 0) {
            step.earned.push_back(j12);
        } else {
            Word v = lns_values(f_, context_, t_mask, c1.values & t_mask);
            fix_word(t_mask, v, step.fixed);
            if (v == (c1.values & t_mask))
                step.earned.push_back(j12);
            else
                step.earned.push_back(lowest_position((v ^ c1.values) & t_mask));
        }
        earned_.push_back(step.earned.front());
        trace_.push_back(std::move(step));
        return order;
    }

    WitnessResult finish() {
        Word free = full_mask(f_.n()) & ~context_.assigned;
        Word input = context_.values;  // all-0 completion
        if (f_.bit(input)) {
            bool found = false;
            for (Word sub = 0;;) {
                if (!f_.bit(context_.values | sub)) {
                    input = context_.values | sub;
                    found = true;
                    break;
                }
                if (sub == free) break;
                sub = (sub - free) & free;
            }
            if (!found) throw std::logic_error("no 0-input consistent with the reduction");
        }

        WitnessResult result;
        result.input = InputWord(f_.n(), input);
        result.trace = std::move(trace_);

        std::set<int> bits;
        for (int b : earned_) {
            if (!bits.insert(b).second) throw std::logic_error("sensitive bit earned twice");
            if (!f_.bit(input ^ position_bit(b)))
                throw std::logic_error("recorded bit " + std::to_string(b) +
                                       " is not sensitive at the witness input");
        }
        result.sensitive_bits.assign(bits.begin(), bits.end());
        return result;
    }

    const BooleanFunction& f_;
    Certificate context_;
    std::vector<AliveCert> alive_;
    std::vector<int> earned_;
    std::vector<TraceStep> trace_;
};

}  // namespace

const char* step_kind_name(StepKind kind) {
    switch (kind) {
        case StepKind::OverlapFix: return "OVERLAP_FIX";
        case StepKind::Singleton: return "SINGLETON";
        case StepKind::PathHead: return "PATH_HEAD";
        case StepKind::Pair: return "PAIR";
        case StepKind::Cycle: return "CYCLE";
    }
    return "?";
}

Certificate largest_nonconstant_subfunction(const BooleanFunction& f, Block free,
                                            bool preferred_value) {
    if (free.mask & ~full_mask(f.n()))
        throw std::invalid_argument("free positions outside the function's inputs");
    Word v = lns_values(f, Certificate(f.n(), 0, 0), free.mask,
                        preferred_value ? free.mask : 0);
    return Certificate(f.n(), free.mask, v);
}

OverlapReduction reduce_overlaps(const BooleanFunction& f, const std::vector<Certificate>& certs) {
    ReductionCore core = reduce_overlaps_core(f, certs);

    OverlapReduction out;
    out.fixed = core.context;
    out.earned_count = static_cast<int>(core.earned.size());
    out.earned_positions = core.earned;
    out.trace = core.trace;

    auto [reduced, kept] = restrict_function(f, core.context);
    out.reduced = reduced;
    out.kept_positions = kept;
    for (const AliveCert& a : core.survivors) {
        out.surviving_indices.push_back(a.index);
        Certificate projected(reduced.n(), 0, 0);
        for (size_t j = 0; j < kept.size(); ++j)
            if (a.cert.assigns(kept[j]))
                projected = projected.with(static_cast<int>(j) + 1, a.cert.value_at(kept[j]));
        out.certs.push_back(projected);
    }
    return out;
}

WitnessResult witness_sensitive_input(const BooleanFunction& f,
                                      const std::vector<Certificate>& certs) {
    validate_lemma4(f, certs);
    ReductionCore core;
    core.context = Certificate(f.n(), 0, 0);
    for (size_t i = 0; i < certs.size(); ++i)
        core.survivors.push_back({static_cast<int>(i), certs[i]});
    return WitnessEngine(f, std::move(core)).run();
}

Lemma3Report verify_lemma3(const BooleanFunction& f, const std::vector<Certificate>& certs) {
    Lemma3Report report;
    report.k = static_cast<int>(certs.size());
    ReductionCore core = reduce_overlaps_core(f, certs);
    report.overlap_earned = static_cast<int>(core.earned.size());
    report.result = WitnessEngine(f, std::move(core)).run();
    report.pass = static_cast<int>(report.result.sensitive_bits.size()) >= report.k;
    if (f.n() <= kMaxProfile) {
        report.measured_s0 = profile(f).s0;
        if (!report.measured_s0 || *report.measured_s0 < report.k) report.pass = false;
    }
    return report;
}

}  // namespace bflab
