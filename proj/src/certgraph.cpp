#include "bflab/certgraph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "bflab/prng.hpp"

namespace bflab {

namespace {

/// True iff `need` pairwise-disjoint blocks can be picked from
/// candidates[start..], all disjoint from `used`.
bool can_pack(const std::vector<Block>& candidates, size_t start, Word used, int need) {
    if (need == 0) return true;
    int avail = 0;
    for (size_t i = start; i < candidates.size(); ++i)
        if ((candidates[i].mask & used) == 0) ++avail;
    if (avail < need) return false;
    for (size_t i = start; i < candidates.size(); ++i) {
        if (candidates[i].mask & used) continue;
        if (can_pack(candidates, i + 1, used | candidates[i].mask, need - 1)) return true;
    }
    return false;
}

/// The maximum disjoint family whose sorted mask sequence is
/// lexicographically smallest: pick the smallest-mask block that still
/// extends to a maximum packing, then recurse to its right.
std::vector<Block> lexicographic_max_packing(std::vector<Block> candidates, int k) {
    std::sort(candidates.begin(), candidates.end(),
              [](const Block& a, const Block& b) { return a.mask < b.mask; });
    std::vector<Block> chosen;
    Word used = 0;
    size_t from = 0;
    while (static_cast<int>(chosen.size()) < k) {
        bool advanced = false;
        for (size_t i = from; i < candidates.size(); ++i) {
            if (candidates[i].mask & used) continue;
            int remaining = k - static_cast<int>(chosen.size()) - 1;
            if (can_pack(candidates, i + 1, used | candidates[i].mask, remaining)) {
                chosen.push_back(candidates[i]);
                used |= candidates[i].mask;
                from = i + 1;
                advanced = true;
                break;
            }
        }
        if (!advanced) throw std::logic_error("packing extension failed");
    }
    return chosen;
}

Rational weight_lemma_slack(int w, int m, int s0) {
    // w - ((3/2) m^2 / s0 - (3/2) m)
    return Rational(2LL * s0 * w - 3LL * m * m + 3LL * m * s0, 2LL * s0);
}

}  // namespace

int contradictions(const Certificate& c, const Certificate& d) {
    if (c.n != d.n) throw std::invalid_argument("certificate dimension mismatch");
    return std::popcount(c.assigned & d.assigned & (c.values ^ d.values));
}

int overlaps(const Certificate& c, const Certificate& d) {
    if (c.n != d.n) throw std::invalid_argument("certificate dimension mismatch");
    return std::popcount(c.assigned & d.assigned & ~(c.values ^ d.values));
}

ZeroInputInstance build_zero_instance(const BooleanFunction& f) {
    if (f.is_constant()) throw std::invalid_argument("build_zero_instance: function is constant");
    if (f.bit(0)) throw std::invalid_argument("build_zero_instance: f(all-0) must be 0; shift the input first");
    if (f.n() > kMaxProfile) throw capacity_error("build_zero_instance limited to n <= 12");

    // the w.l.o.g. step: move the 0-input with the highest block sensitivity
    // to the origin (smallest index wins ties)
    Word shift = 0;
    int best_bs = -1;
    for (Word y = 0; y < f.table_size(); ++y) {
        if (f.bit(y)) continue;
        int bs = block_sensitivity_at(f, InputWord(f.n(), y));
        if (bs > best_bs) {
            best_bs = bs;
            shift = y;
        }
    }
    BooleanFunction g = shift == 0 ? f : f.shifted(shift);

    std::vector<Block> minimal = minimal_sensitive_blocks(g, InputWord(g.n(), 0));
    std::vector<Block> packing = lexicographic_max_packing(minimal, best_bs);

    Word covered = 0;
    for (const Block& b : packing) covered |= b.mask;

    // fix uncovered positions to 0; this can only shrink s0 and C1
    ZeroInputInstance inst;
    inst.original_n = f.n();
    inst.shift = shift;
    if (covered != full_mask(g.n())) {
        Certificate fix(g.n(), full_mask(g.n()) & ~covered, 0);
        auto [restricted, kept] = restrict_function(g, fix);
        inst.fn = restricted;
        inst.kept_positions = kept;
        for (Block& b : packing) {
            Word remapped = 0;
            for (size_t j = 0; j < kept.size(); ++j)
                if (b.mask & position_bit(kept[j])) remapped |= Word{1} << j;
            b.mask = remapped;
        }
    } else {
        inst.fn = g;
        inst.kept_positions.resize(g.n());
        for (int pos = 1; pos <= g.n(); ++pos) inst.kept_positions[pos - 1] = pos;
    }
    inst.blocks = std::move(packing);

    if (block_sensitivity_at(inst.fn, InputWord(inst.fn.n(), 0)) != best_bs)
        throw std::logic_error("restriction changed the block sensitivity of the origin");

    for (const Block& b : inst.blocks) {
        Certificate cert = certificate_at(inst.fn, InputWord(inst.fn.n(), b.mask));
        if (cert.ones() != b.mask)
            throw std::logic_error("minimum certificate does not place its 1s exactly on the block");
        inst.certs.push_back(cert);
    }

    // each position is assigned 1 by exactly one certificate, and each 0
    // meets exactly one 1 across the family
    for (int pos = 1; pos <= inst.fn.n(); ++pos) {
        int owners = 0;
        for (const Certificate& c : inst.certs)
            if (c.assigns(pos) && c.value_at(pos)) ++owners;
        if (owners != 1) throw std::logic_error("position lacks a unique 1-owner");
    }
    for (size_t i = 0; i < inst.certs.size(); ++i) {
        for (int pos = 1; pos <= inst.fn.n(); ++pos) {
            if (!inst.certs[i].assigns(pos) || inst.certs[i].value_at(pos)) continue;
            int partners = 0;
            for (size_t j = 0; j < inst.certs.size(); ++j)
                if (j != i && inst.certs[j].assigns(pos) && inst.certs[j].value_at(pos)) ++partners;
            if (partners != 1) throw std::logic_error("certificate 0 without a unique contradiction");
        }
    }
    return inst;
}

ContradictionGraph ContradictionGraph::from_certificates(const std::vector<Certificate>& certs) {
    ContradictionGraph g;
    g.order = static_cast<int>(certs.size());
    g.weight.assign(g.order, std::vector<int>(g.order, 0));
    for (int i = 0; i < g.order; ++i)
        for (int j = i + 1; j < g.order; ++j)
            g.weight[i][j] = g.weight[j][i] = contradictions(certs[i], certs[j]);
    return g;
}

int ContradictionGraph::induced_weight(std::uint32_t subset) const {
    int w = 0;
    for (std::uint32_t rest = subset; rest; rest &= rest - 1) {
        int i = std::countr_zero(rest);
        for (std::uint32_t rest2 = rest & (rest - 1); rest2; rest2 &= rest2 - 1)
            w += weight[i][std::countr_zero(rest2)];
    }
    return w;
}

int ContradictionGraph::total_weight() const {
    return induced_weight((std::uint32_t{1} << order) - 1);
}

int ContradictionGraph::degree(int v) const {
    int d = 0;
    for (int u = 0; u < order; ++u) d += weight[v][u];
    return d;
}

ContradictionGraph build_graph(const ZeroInputInstance& inst) {
    return ContradictionGraph::from_certificates(inst.certs);
}

WeightLemmaReport verify_weight_lemma(const ContradictionGraph& g, int s0, SubgraphMode mode,
                                      std::uint64_t samples, std::uint64_t seed) {
    if (s0 < 1) throw std::invalid_argument("verify_weight_lemma requires s0 >= 1");
    WeightLemmaReport report;
    report.mode = mode;
    bool have_min = false;

    auto check = [&](std::uint32_t subset) {
        int m = std::popcount(subset);
        Rational slack = weight_lemma_slack(g.induced_weight(subset), m, s0);
        ++report.subsets_checked;
        if (!have_min || slack < report.min_slack) {
            have_min = true;
            report.min_slack = slack;
            report.min_subset = subset;
        }
        if (slack < Rational(0)) {
            report.pass = false;
            report.violations.push_back(subset);
        }
    };

    if (mode == SubgraphMode::AllSubgraphs) {
        if (g.order > 20) throw capacity_error("ALL_SUBGRAPHS mode limited to order <= 20");
        std::uint32_t all = (std::uint32_t{1} << g.order) - 1;
        for (std::uint32_t subset = 1; subset <= all; ++subset) check(subset);
    } else {
        report.samples = samples;
        report.seed = seed;
        std::uint32_t all =
            g.order >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << g.order) - 1;
        SplitMix64 rng(seed);
        for (std::uint64_t i = 0; i < samples; ++i) {
            std::uint32_t subset = static_cast<std::uint32_t>(rng.next()) & all;
            if (subset == 0) subset = 1;
            check(subset);
        }
    }
    return report;
}

AdjacencyLemmaReport verify_adjacency_lemma(const ContradictionGraph& g, int s0,
                                            std::uint64_t budget) {
    AdjacencyLemmaReport report;
    if (g.order <= s0) {
        report.vacuous = true;
        return report;
    }
    // C(order, s0) subsets within the configured budget
    std::uint64_t count = 1;
    for (int i = 0; i < s0; ++i) count = count * (g.order - i) / (i + 1);
    if (count > budget) throw capacity_error("adjacency lemma subset enumeration exceeds budget");

    std::uint32_t subset = (std::uint32_t{1} << s0) - 1;
    std::uint32_t best = subset;
    int best_weight = g.induced_weight(subset);
    std::uint32_t limit = (std::uint32_t{1} << g.order);
    while (true) {
        // Gosper: next subset of the same size, ascending, so ties keep the
        // lexicographically smallest vertex set
        std::uint32_t c = subset & -subset;
        std::uint32_t r = subset + c;
        subset = (((r ^ subset) >> 2) / c) | r;
        if (subset >= limit) break;
        int w = g.induced_weight(subset);
        if (w < best_weight) {
            best_weight = w;
            best = subset;
        }
    }

    report.h_weight = best_weight;
    for (std::uint32_t rest = best; rest; rest &= rest - 1)
        report.h_vertices.push_back(std::countr_zero(rest));

    for (int v = 0; v < g.order; ++v) {
        if (best & (std::uint32_t{1} << v)) continue;
        int w = 0;
        for (int h : report.h_vertices) w += g.edge(v, h);
        if (w < 3) {
            report.pass = false;
            report.violations.emplace_back(v, w);
        }
    }
    return report;
}

PigeonholeReport pigeonhole_bound(const ZeroInputInstance& inst) {
    PigeonholeReport report;
    ContradictionGraph g = build_graph(inst);
    report.total_weight = g.total_weight();
    for (size_t i = 0; i < inst.certs.size(); ++i) {
        int zeros = std::popcount(inst.certs[i].zeros());
        report.total_zeros += zeros;
        report.max_zeros = std::max(report.max_zeros, zeros);
        // each 0 must contradict exactly one certificate
        for (int pos = 1; pos <= inst.fn.n(); ++pos) {
            if (!inst.certs[i].assigns(pos) || inst.certs[i].value_at(pos)) continue;
            int partners = 0;
            for (size_t j = 0; j < inst.certs.size(); ++j)
                if (j != i && inst.certs[j].assigns(pos) && inst.certs[j].value_at(pos)) ++partners;
            if (partners != 1) report.invariants_ok = false;
        }
    }
    if (report.total_weight != report.total_zeros) report.invariants_ok = false;
    report.implied_c1_lower_bound = report.max_zeros + 1;
    return report;
}

MainTheoremReport verify_main_theorem(const BooleanFunction& f) {
    MainTheoremReport report;
    report.prof = profile(f);
    if (!report.prof.s0 || !report.prof.bs0 || !report.prof.c1)
        throw std::invalid_argument("verify_main_theorem requires both 0- and 1-inputs");
    std::int64_t s0 = *report.prof.s0;
    std::int64_t bs0 = *report.prof.bs0;
    std::int64_t c1 = *report.prof.c1;
    report.main_slack = Rational(2 * s0 * c1 - 3 * bs0 + s0, 2 * s0);
    report.kk_slack = Rational(2 * s0 * c1 - bs0, 2 * s0);
    report.main_pass = report.main_slack >= Rational(0);
    report.kk_pass = report.kk_slack >= Rational(0);
    return report;
}

std::vector<Component> classify_components(const ContradictionGraph& g,
                                           const std::vector<Certificate>& certs) {
    if (static_cast<int>(certs.size()) != g.order)
        throw std::invalid_argument("certificate list does not match graph order");
    std::vector<Component> out;
    std::vector<bool> seen(g.order, false);
    for (int start = 0; start < g.order; ++start) {
        if (seen[start]) continue;
        Component comp;
        std::vector<int> stack{start};
        seen[start] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.vertices.push_back(v);
            for (int u = 0; u < g.order; ++u) {
                if (!seen[u] && g.edge(v, u) > 0) {
                    seen[u] = true;
                    stack.push_back(u);
                }
            }
        }
        std::sort(comp.vertices.begin(), comp.vertices.end());
        for (size_t a = 0; a < comp.vertices.size(); ++a)
            for (size_t b = a + 1; b < comp.vertices.size(); ++b) {
                int w = g.edge(comp.vertices[a], comp.vertices[b]);
                if (w > 0) comp.edges.push_back({comp.vertices[a], comp.vertices[b], w});
            }

        size_t size = comp.vertices.size();
        bool all_weight_one = std::all_of(comp.edges.begin(), comp.edges.end(),
                                          [](const std::array<int, 3>& e) { return e[2] == 1; });
        std::vector<int> deg(g.order, 0);
        for (const auto& e : comp.edges) {
            ++deg[e[0]];
            ++deg[e[1]];
        }
        int deg1 = 0, deg2 = 0;
        for (int v : comp.vertices) {
            if (deg[v] == 1) ++deg1;
            if (deg[v] == 2) ++deg2;
        }

        if (size == 1) {
            comp.kind = ComponentKind::Singleton;
        } else if (size == 2 && comp.edges.size() == 1 && comp.edges[0][2] == 2) {
            comp.kind = ComponentKind::Pair2;
        } else if (all_weight_one && comp.edges.size() == size - 1 && deg1 == 2 &&
                   deg2 == static_cast<int>(size) - 2) {
            comp.kind = ComponentKind::Path;
        } else if (size >= 3 && all_weight_one && comp.edges.size() == size &&
                   deg2 == static_cast<int>(size)) {
            comp.kind = ComponentKind::Cycle;
        } else {
            comp.kind = ComponentKind::Other;
        }
        out.push_back(std::move(comp));
    }
    return out;
}

const char* component_kind_name(ComponentKind kind) {
    switch (kind) {
        case ComponentKind::Singleton: return "SINGLETON";
        case ComponentKind::Pair2: return "PAIR2";
        case ComponentKind::Path: return "PATH";
        case ComponentKind::Cycle: return "CYCLE";
        case ComponentKind::Other: return "OTHER";
    }
    return "?";
}

}  // namespace bflab
