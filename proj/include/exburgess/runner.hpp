#pragma once

// Command implementations shared by the CLI and the test suites.  Each
// run_* function produces a deterministic report stream (or a JSON object
// for the single-value commands); the CLI is a thin flag parser over these.

#include <cstdint>
#include <string>
#include <vector>

#include "exburgess/report.hpp"

namespace exburgess {

struct RunConfig {
    // shared
    std::uint64_t seed = 1;
    unsigned workers = 0;  // 0 = hardware concurrency
    bool timings = false;
    std::string format = "json";  // json | csv | text
    std::string output;           // empty = stdout

    // bound / explore
    double q = 0;           // exact q (0 = unset)
    double log10_q = 0;     // surrogate log10 q (0 = unset)
    unsigned r = 2;
    double theta = 0;       // N = q^theta (0 = unset)
    double N = 0;           // explicit N (0 = unset)
    std::int64_t M = 0;
    std::string variant = "thm2";  // thm1 | thm2
    bool surrogate = false;

    // verify-weil
    std::uint64_t q_max = 300;
    std::vector<unsigned> r_set{2, 3};
    std::vector<double> B_set{2.0, 2.5, 3.0, 5.0, 10.0};

    // verify-lemmas
    std::uint64_t sq_q_max_r2 = 200;
    std::uint64_t sq_q_max_r3 = 100;
    std::uint32_t envelope_N_max = 10000;
    unsigned va_trials = 200;
    unsigned lemma22_trials = 500;
    std::uint64_t lemma22_q_max = 150;

    // charsum
    unsigned char_index = 0;
    bool all_characters = false;
};

struct RunResult {
    ReportHeader header;
    std::vector<VerificationReport> rows;
    std::string payload;  // non-report JSON for bound/charsum; empty otherwise
    int exit_code = 0;
};

RunResult run_bound(const RunConfig& cfg);
RunResult run_verify_weil(const RunConfig& cfg);
RunResult run_verify_lemmas(const RunConfig& cfg);
RunResult run_table1(const RunConfig& cfg);
RunResult run_certify(const RunConfig& cfg);
RunResult run_charsum(const RunConfig& cfg);
RunResult run_explore(const RunConfig& cfg);
// table1 + certify + lemmas + weil in one stream (sizes from cfg).
RunResult run_full(const RunConfig& cfg);

// Renders rows (or payload) in cfg.format.
std::string render(const RunConfig& cfg, const RunResult& result);

unsigned effective_workers(const RunConfig& cfg);

}  // namespace exburgess
