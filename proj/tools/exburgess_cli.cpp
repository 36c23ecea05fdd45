// Command-line front end: bound evaluation, verification sweeps, table
// reproduction, certification runs and report emission.
//
// Exit codes: 0 = all checks pass, 1 = at least one check failed,
// 2 = usage or configuration error.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "exburgess/runner.hpp"

using exburgess::RunConfig;
using exburgess::RunResult;

namespace {

void apply_config_file(RunConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("config: cannot open " + path);
    nlohmann::json j;
    in >> j;
    if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("workers")) cfg.workers = j["workers"].get<unsigned>();
    if (j.contains("format")) cfg.format = j["format"].get<std::string>();
    if (j.contains("output")) cfg.output = j["output"].get<std::string>();
    if (j.contains("q_max")) cfg.q_max = j["q_max"].get<std::uint64_t>();
    if (j.contains("envelope_N_max")) cfg.envelope_N_max = j["envelope_N_max"].get<std::uint32_t>();
    if (j.contains("va_trials")) cfg.va_trials = j["va_trials"].get<unsigned>();
    if (j.contains("lemma22_trials")) cfg.lemma22_trials = j["lemma22_trials"].get<unsigned>();
}

int emit(const RunConfig& cfg, const RunResult& result) {
    std::string text = exburgess::render(cfg, result);
    if (cfg.output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(cfg.output, std::ios::binary);
        if (!out) {
            std::cerr << "cannot write " << cfg.output << "\n";
            return 2;
        }
        out << text;
    }
    return result.exit_code;
}

void add_common(CLI::App* cmd, RunConfig& cfg, std::string& config_path) {
    cmd->add_option("--seed", cfg.seed, "random seed recorded in every report");
    cmd->add_option("--workers", cfg.workers, "worker threads (0 = hardware)");
    cmd->add_option("--format", cfg.format, "json | csv | text")->capture_default_str();
    cmd->add_option("--output", cfg.output, "output path (default stdout)");
    cmd->add_flag("--timings", cfg.timings, "record wall-clock runtimes (breaks byte-identical reruns)");
    cmd->add_option("--config", config_path, "JSON file with defaults; flags win");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"explicit Burgess bound toolkit"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string config_path;
    std::string r_list = "2,3", b_list = "2,2.5,3,5,10";

    // config file supplies defaults before flag parsing, so flags win
    for (int i = 1; i + 1 < argc; ++i) {
        if (std::string(argv[i]) == "--config") {
            try {
                apply_config_file(cfg, argv[i + 1]);
            } catch (const std::exception& e) {
                std::cerr << "error: " << e.what() << "\n";
                return 2;
            }
        }
    }

    auto* bound = app.add_subcommand("bound", "evaluate the character-sum bound");
    bound->add_option("--q", cfg.q, "modulus (exact mode)");
    bound->add_option("--log10-q", cfg.log10_q, "log10 of q (surrogate mode)");
    bound->add_option("--r", cfg.r, "moment parameter r >= 2")->capture_default_str();
    bound->add_option("--theta", cfg.theta, "N = q^theta");
    bound->add_option("--N", cfg.N, "explicit N");
    bound->add_option("--variant", cfg.variant, "thm1 | thm2")->capture_default_str();
    bound->add_flag("--surrogate", cfg.surrogate, "force surrogate mode");
    add_common(bound, cfg, config_path);

    auto* weil = app.add_subcommand("verify-weil", "moment-inequality sweep over primitive characters");
    weil->add_option("--q-max", cfg.q_max, "sweep q from 1 to this")->capture_default_str();
    weil->add_option("--r", r_list, "comma list of r values")->capture_default_str();
    weil->add_option("--B", b_list, "comma list of B values")->capture_default_str();
    add_common(weil, cfg, config_path);

    auto* lemmas = app.add_subcommand("verify-lemmas",
                                      "shift-tuple gcd sums, complete-sum bound, envelope sweeps");
    lemmas->add_option("--sq-q-max", cfg.sq_q_max_r2, "q range for the r=2 gcd-sum sweep")
        ->capture_default_str();
    lemmas->add_option("--sq-q-max-r3", cfg.sq_q_max_r3, "q range for the cubefree r=3 sweep")
        ->capture_default_str();
    lemmas->add_option("--n-max", cfg.envelope_N_max, "envelope sweep upper limit")->capture_default_str();
    lemmas->add_option("--va-trials", cfg.va_trials, "random counting-lemma instances")
        ->capture_default_str();
    lemmas->add_option("--lemma22-trials", cfg.lemma22_trials, "random complete-sum instances")
        ->capture_default_str();
    add_common(lemmas, cfg, config_path);

    auto* table = app.add_subcommand("table1", "reproduce the C(r)/D(r) constant table");
    add_common(table, cfg, config_path);

    auto* certify = app.add_subcommand("certify", "interval certification of the numerical claims");
    add_common(certify, cfg, config_path);

    auto* charsum = app.add_subcommand("charsum", "partial character sum S_chi(M, N)");
    charsum->add_option("--q", cfg.q, "modulus")->required();
    charsum->add_option("--char-index", cfg.char_index, "index in the lexicographic enumeration")
        ->capture_default_str();
    charsum->add_flag("--all-characters", cfg.all_characters,
                      "index the full enumeration instead of primitive-only");
    charsum->add_option("--M", cfg.M, "sum over M < n <= M+N")->capture_default_str();
    charsum->add_option("--N", cfg.N, "length of the sum")->required();
    add_common(charsum, cfg, config_path);

    auto* explore = app.add_subcommand("explore",
                                       "report |S_chi|/bound at small q (no pass/fail semantics)");
    explore->add_option("--q", cfg.q, "modulus")->required();
    explore->add_option("--r", cfg.r, "moment parameter")->capture_default_str();
    explore->add_option("--N", cfg.N, "length of the sum")->required();
    explore->add_option("--M", cfg.M, "sum start")->capture_default_str();
    explore->add_option("--variant", cfg.variant, "thm1 | thm2")->capture_default_str();
    add_common(explore, cfg, config_path);

    auto* all = app.add_subcommand("verify-all", "table1 + certify + verify-lemmas + verify-weil");
    all->add_option("--q-max", cfg.q_max, "weil sweep limit")->capture_default_str();
    all->add_option("--n-max", cfg.envelope_N_max, "envelope sweep limit")->capture_default_str();
    all->add_option("--va-trials", cfg.va_trials, "counting-lemma instances")->capture_default_str();
    add_common(all, cfg, config_path);

    CLI11_PARSE(app, argc, argv);

    try {
        auto parse_list_u = [](const std::string& s) {
            std::vector<unsigned> out;
            std::size_t pos = 0;
            while (pos < s.size()) {
                std::size_t next = s.find(',', pos);
                if (next == std::string::npos) next = s.size();
                out.push_back(static_cast<unsigned>(std::stoul(s.substr(pos, next - pos))));
                pos = next + 1;
            }
            return out;
        };
        auto parse_list_d = [](const std::string& s) {
            std::vector<double> out;
            std::size_t pos = 0;
            while (pos < s.size()) {
                std::size_t next = s.find(',', pos);
                if (next == std::string::npos) next = s.size();
                out.push_back(std::stod(s.substr(pos, next - pos)));
                pos = next + 1;
            }
            return out;
        };
        cfg.r_set = parse_list_u(r_list);
        cfg.B_set = parse_list_d(b_list);

        RunResult result;
        if (*bound) result = exburgess::run_bound(cfg);
        else if (*weil) result = exburgess::run_verify_weil(cfg);
        else if (*lemmas) result = exburgess::run_verify_lemmas(cfg);
        else if (*table) result = exburgess::run_table1(cfg);
        else if (*certify) result = exburgess::run_certify(cfg);
        else if (*charsum) result = exburgess::run_charsum(cfg);
        else if (*explore) result = exburgess::run_explore(cfg);
        else if (*all) result = exburgess::run_full(cfg);
        return emit(cfg, result);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
