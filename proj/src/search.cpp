#include "bflab/search.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "bflab/prng.hpp"

namespace bflab {

namespace {

constexpr std::uint64_t kChunk = 2048;

struct Partial {
    std::vector<SweepViolation> main_violations, kk_violations, sandwich_violations;
    std::map<std::pair<int, int>, FrontierCell> frontier;
    Rational ratio;
    std::uint64_t ratio_index = 0;
    std::string ratio_hex;
    bool ratio_defined = false;
    std::string csv;
};

std::string csv_row(const std::string& hex, int n, const MeasureProfile& p) {
    auto cell = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string(); };
    std::string row = hex + "," + std::to_string(n) + "," + cell(p.s0) + "," + cell(p.s1) + "," +
                      cell(p.bs0) + "," + cell(p.bs1) + "," + cell(p.c0) + "," + cell(p.c1);
    if (p.s0 && p.bs0 && p.c1) {
        std::int64_t s0 = *p.s0, bs0 = *p.bs0, c1 = *p.c1;
        row += "," + Rational(2 * s0 * c1 - 3 * bs0 + s0, 2 * s0).str();
        row += "," + Rational(2 * s0 * c1 - bs0, 2 * s0).str();
    } else {
        row += ",,";
    }
    return row + "\n";
}

void sweep_one(Partial& part, const BooleanFunction& f, std::uint64_t index, bool with_csv) {
    MeasureProfile p = profile(f);
    std::string hex = f.to_hex();
    if (with_csv) part.csv += csv_row(hex, f.n(), p);
    if (!p.s0 || !p.bs0 || !p.c1 || !p.s1) return;  // constant function: nothing to check

    std::int64_t s0 = *p.s0, s1 = *p.s1, bs0 = *p.bs0, c1 = *p.c1;
    SweepViolation v{hex, index, static_cast<int>(s0), static_cast<int>(s1),
                     static_cast<int>(bs0), static_cast<int>(c1)};
    if (Rational(2 * s0 * c1 - 3 * bs0 + s0, 2 * s0) < Rational(0)) part.main_violations.push_back(v);
    if (Rational(2 * s0 * c1 - bs0, 2 * s0) < Rational(0)) part.kk_violations.push_back(v);
    if (c1 < s1 || Rational(c1) > Rational((std::int64_t{1} << (s0 - 1)) * s1))
        part.sandwich_violations.push_back(v);

    auto key = std::make_pair(static_cast<int>(s0), static_cast<int>(bs0));
    auto it = part.frontier.find(key);
    if (it == part.frontier.end() || c1 < it->second.min_c1)
        part.frontier[key] = FrontierCell{static_cast<int>(c1), index, hex};

    Rational ratio(bs0, s0 * s1);
    if (!part.ratio_defined || part.ratio < ratio) {
        part.ratio_defined = true;
        part.ratio = ratio;
        part.ratio_index = index;
        part.ratio_hex = hex;
    }
}

void merge(SweepReport& report, Partial& part) {
    auto append = [](std::vector<SweepViolation>& into, std::vector<SweepViolation>& from) {
        into.insert(into.end(), from.begin(), from.end());
    };
    append(report.main_violations, part.main_violations);
    append(report.kk_violations, part.kk_violations);
    append(report.sandwich_violations, part.sandwich_violations);
    for (const auto& [key, cell] : part.frontier) {
        auto it = report.frontier.find(key);
        if (it == report.frontier.end() || cell.min_c1 < it->second.min_c1 ||
            (cell.min_c1 == it->second.min_c1 && cell.index < it->second.index))
            report.frontier[key] = cell;
    }
    if (part.ratio_defined &&
        (!report.ratio_defined || report.max_conjecture_ratio < part.ratio ||
         (report.max_conjecture_ratio == part.ratio && part.ratio_index < report.ratio_index))) {
        report.ratio_defined = true;
        report.max_conjecture_ratio = part.ratio;
        report.ratio_index = part.ratio_index;
        report.ratio_witness_hex = part.ratio_hex;
    }
    report.csv += part.csv;
}

BooleanFunction random_function(int n, std::uint64_t seed, std::uint64_t index) {
    SplitMix64 rng = SplitMix64::for_sample(seed, index);
    BooleanFunction f(n);
    for (Word i = 0; i < f.table_size(); i += 64) {
        std::uint64_t word = rng.next();
        for (int b = 0; b < 64 && i + b < f.table_size(); ++b)
            if ((word >> b) & 1) f.set_bit(i + b, true);
    }
    return f;
}

/// f transformed by an input permutation and complement mask:
/// g(x) = f(perm(x) ^ flips).
std::uint64_t transform_table(std::uint64_t table, int n, const std::vector<int>& perm, Word flips) {
    std::uint64_t out = 0;
    for (Word x = 0; x < (Word{1} << n); ++x) {
        Word mapped = 0;
        for (int j = 0; j < n; ++j)
            if ((x >> j) & 1) mapped |= Word{1} << perm[j];
        if ((table >> (mapped ^ flips)) & 1) out |= std::uint64_t{1} << x;
    }
    return out;
}

std::uint64_t canonical_form(std::uint64_t table, int n) {
    std::vector<int> perm(n);
    for (int j = 0; j < n; ++j) perm[j] = j;
    std::uint64_t best = ~std::uint64_t{0};
    do {
        for (Word flips = 0; flips < (Word{1} << n); ++flips)
            best = std::min(best, transform_table(table, n, perm, flips));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace

SweepReport sweep(int n, const SweepMode& mode, int jobs, bool with_csv) {
    SweepReport report;
    report.n = n;
    report.mode = mode;
    if (mode.kind == SweepMode::Exhaustive) {
        if (n < 1 || n > 4)
            throw capacity_error("exhaustive sweep enumerates 2^(2^n) functions; n must be <= 4");
        report.functions_checked = std::uint64_t{1} << (std::uint64_t{1} << n);
    } else {
        if (n < 1 || n > kMaxProfile)
            throw capacity_error("random sweep profiles each sample; n must be <= 12");
        report.functions_checked = mode.samples;
    }

    std::uint64_t total = report.functions_checked;
    std::uint64_t chunks = (total + kChunk - 1) / kChunk;
    std::vector<Partial> parts(chunks);

    auto run_chunk = [&](std::uint64_t c) {
        std::uint64_t begin = c * kChunk;
        std::uint64_t end = std::min(total, begin + kChunk);
        for (std::uint64_t i = begin; i < end; ++i) {
            BooleanFunction f = mode.kind == SweepMode::Exhaustive
                                    ? BooleanFunction::from_table_bits(n, i)
                                    : random_function(n, mode.seed, i);
            sweep_one(parts[c], f, i, with_csv);
        }
    };

    if (jobs <= 1 || chunks <= 1) {
        for (std::uint64_t c = 0; c < chunks; ++c) run_chunk(c);
    } else {
        std::atomic<std::uint64_t> next{0};
        auto worker = [&] {
            for (std::uint64_t c = next.fetch_add(1); c < chunks; c = next.fetch_add(1))
                run_chunk(c);
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }

    if (with_csv) report.csv = "tt_hex,n,s0,s1,bs0,bs1,C0,C1,thm3_slack,kk_slack\n";
    for (Partial& part : parts) merge(report, part);  // chunk order keeps output deterministic
    return report;
}

ExtremalResult extremal_search(int n, const ExtremalQuery& query) {
    if (n < 1 || n > 4) throw capacity_error("extremal search is exhaustive; n must be <= 4");
    ExtremalResult result;
    std::vector<std::uint64_t> achievers;
    std::uint64_t total = std::uint64_t{1} << (std::uint64_t{1} << n);
    for (std::uint64_t i = 0; i < total; ++i) {
        BooleanFunction f = BooleanFunction::from_table_bits(n, i);
        MeasureProfile p = profile(f);
        auto meets = [](const std::optional<int>& measured, const std::optional<int>& wanted) {
            return !wanted || (measured && *measured == *wanted);
        };
        if (!meets(p.s0, query.s0) || !meets(p.bs0, query.bs0) || !meets(p.s1, query.s1) ||
            !meets(p.c1, query.c1))
            continue;
        if (!p.c1) continue;  // no 1-inputs: C1 undefined
        ++result.matching_functions;
        if (achievers.empty() || *p.c1 < result.min_c1) {
            result.min_c1 = *p.c1;
            achievers.clear();
        }
        if (*p.c1 == result.min_c1) achievers.push_back(i);
    }
    if (result.matching_functions == 0)
        throw std::invalid_argument("no function meets the constraints");

    result.achieving_functions = achievers.size();
    std::vector<std::uint64_t> canon;
    for (std::uint64_t table : achievers) canon.push_back(canonical_form(table, n));
    std::sort(canon.begin(), canon.end());
    canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
    for (std::uint64_t table : canon)
        result.canonical_hex.push_back(BooleanFunction::from_table_bits(n, table).to_hex());
    return result;
}

ConjectureReport conjecture_report(int n) {
    if (n < 1 || n > 4) throw capacity_error("conjecture report is exhaustive; n must be <= 4");
    ConjectureReport report;
    report.n = n;
    std::uint64_t total = std::uint64_t{1} << (std::uint64_t{1} << n);
    bool defined = false;
    for (std::uint64_t i = 0; i < total; ++i) {
        BooleanFunction f = BooleanFunction::from_table_bits(n, i);
        MeasureProfile p = profile(f);
        if (!p.s0 || !p.s1 || !p.bs0) continue;
        ++report.functions_considered;
        Rational ratio(*p.bs0, static_cast<std::int64_t>(*p.s0) * *p.s1);
        if (!defined || report.max_ratio < ratio) {
            defined = true;
            report.max_ratio = ratio;
            report.witness_index = i;
            report.witness_hex = f.to_hex();
        }
    }
    return report;
}

}  // namespace bflab
