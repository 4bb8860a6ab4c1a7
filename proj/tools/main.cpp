#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>

#include "bflab/reports.hpp"

using namespace bflab;

namespace {

// exit codes: 0 success, 1 a checked inequality or verification failed,
// 2 usage or capacity error
constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kUsageError = 2;

std::vector<Certificate> read_certificates(const std::string& path, int n) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open certificate file: " + path);
    std::vector<Certificate> certs;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        Certificate c = Certificate::parse(line);
        if (c.n != n)
            throw std::invalid_argument("certificate '" + line + "' has " + std::to_string(c.n) +
                                        " positions, expected " + std::to_string(n));
        certs.push_back(c);
    }
    return certs;
}

void write_output(const nlohmann::ordered_json& report, const std::string& out_path,
                  const std::string& csv) {
    std::cout << reports::dump(report);
    if (out_path.empty()) return;
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
    if (out_path.size() >= 4 && out_path.substr(out_path.size() - 4) == ".csv")
        out << csv;
    else
        out << reports::dump(report);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"boolean function sensitivity / block sensitivity / certificate complexity lab"};
    app.require_subcommand(1);

    std::string tt_hex, certs_path, out_path, family = "g0", mode = "exhaustive";
    int n = 0, k = 0, m = 0, r = 0, jobs = 1;
    int q_s0 = -1, q_bs0 = -1, q_s1 = -1, q_c1 = -1;
    std::uint64_t samples = 100000, seed = 1;
    bool per_input = false;

    CLI::App* measure = app.add_subcommand("measure", "profile a truth table");
    measure->add_option("--tt", tt_hex, "truth table, hex")->required();
    measure->add_option("--n", n, "number of inputs")->required();
    measure->add_flag("--per-input", per_input, "include per-input measures");

    CLI::App* construct = app.add_subcommand("construct", "generate a named construction");
    construct->add_option("--family", family, "g0 or or-g0")->required();
    construct->add_option("--k", k, "g0 parameter");
    construct->add_option("--m", m, "number of OR branches");
    construct->add_option("--r", r, "per-branch parameter");

    CLI::App* graph = app.add_subcommand("graph", "contradiction graph and lemma checks");
    graph->add_option("--tt", tt_hex, "truth table, hex")->required();
    graph->add_option("--n", n, "number of inputs")->required();

    CLI::App* witness = app.add_subcommand("witness", "extract a sensitive 0-input");
    witness->add_option("--tt", tt_hex, "truth table, hex")->required();
    witness->add_option("--n", n, "number of inputs")->required();
    witness->add_option("--certs", certs_path, "file with one {0,1,*} certificate per line")
        ->required();

    CLI::App* sweep_cmd = app.add_subcommand("sweep", "verify the bounds over function space");
    sweep_cmd->add_option("--n", n, "number of inputs")->required();
    sweep_cmd->add_option("--mode", mode, "exhaustive or random");
    sweep_cmd->add_option("--samples", samples, "sample count for random mode");
    sweep_cmd->add_option("--seed", seed, "prng seed for random mode");
    sweep_cmd->add_option("--out", out_path, "write report here (.csv for per-function rows)");
    sweep_cmd->add_option("--jobs", jobs, "worker threads (never changes output)");

    CLI::App* search_cmd = app.add_subcommand("search", "extremal functions under constraints");
    search_cmd->add_option("--n", n, "number of inputs")->required();
    search_cmd->add_option("--s0", q_s0, "required s0");
    search_cmd->add_option("--bs0", q_bs0, "required bs0");
    search_cmd->add_option("--s1", q_s1, "required s1");
    search_cmd->add_option("--c1", q_c1, "required C1");

    CLI::App* conjecture = app.add_subcommand("conjecture", "max bs0/(s0*s1) ratio");
    conjecture->add_option("--n", n, "number of inputs")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsageError;
    }

    try {
        if (measure->parsed()) {
            BooleanFunction f = BooleanFunction::from_hex(tt_hex, n);
            std::cout << reports::dump(reports::measure_report(f, per_input));
            return kOk;
        }
        if (construct->parsed()) {
            Construction c = [&] {
                if (family == "g0") {
                    if (k == 0) throw std::invalid_argument("construct --family g0 requires --k");
                    return g0(k);
                }
                if (family == "or-g0") {
                    if (m == 0 || r == 0)
                        throw std::invalid_argument("construct --family or-g0 requires --m and --r");
                    return or_compose_g0(m, r);
                }
                throw std::invalid_argument("unknown family: " + family);
            }();
            std::cout << reports::dump(reports::construct_report(c));
            return kOk;
        }
        if (graph->parsed()) {
            BooleanFunction f = BooleanFunction::from_hex(tt_hex, n);
            reports::GraphAnalysis a = reports::analyze_graph(f);
            std::cout << reports::dump(reports::graph_report(a, f));
            return a.pass ? kOk : kVerificationFailed;
        }
        if (witness->parsed()) {
            BooleanFunction f = BooleanFunction::from_hex(tt_hex, n);
            std::vector<Certificate> certs = read_certificates(certs_path, n);
            reports::WitnessOutcome o = reports::run_witness(f, certs);
            std::cout << reports::dump(reports::witness_report(o, f, certs));
            return o.pass ? kOk : kVerificationFailed;
        }
        if (sweep_cmd->parsed()) {
            SweepMode sm;
            if (mode == "exhaustive")
                sm = SweepMode::exhaustive();
            else if (mode == "random")
                sm = SweepMode::random(samples, seed);
            else
                throw std::invalid_argument("mode must be exhaustive or random");
            bool csv = out_path.size() >= 4 && out_path.substr(out_path.size() - 4) == ".csv";
            SweepReport report = bflab::sweep(n, sm, jobs, csv);
            write_output(reports::sweep_report(report), out_path, report.csv);
            return report.all_pass() ? kOk : kVerificationFailed;
        }
        if (search_cmd->parsed()) {
            ExtremalQuery q;
            if (q_s0 >= 0) q.s0 = q_s0;
            if (q_bs0 >= 0) q.bs0 = q_bs0;
            if (q_s1 >= 0) q.s1 = q_s1;
            if (q_c1 >= 0) q.c1 = q_c1;
            ExtremalResult result = extremal_search(n, q);
            std::cout << reports::dump(reports::search_report(n, q, result));
            return kOk;
        }
        if (conjecture->parsed()) {
            std::cout << reports::dump(reports::conjecture_json(conjecture_report(n)));
            return kOk;
        }
    } catch (const hypothesis_error& e) {
        std::cerr << "hypothesis violation: " << e.what() << "\n";
        return kUsageError;
    } catch (const capacity_error& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::logic_error& e) {
        std::cerr << "internal check failed: " << e.what() << "\n";
        return kVerificationFailed;
    }
    return kUsageError;
}
