#pragma once

// VerificationReport rows and their deterministic JSON/CSV/text emission.
// Floats are formatted to 12 significant digits; rows are sorted before
// emission; runtime_ms is null unless timing capture was requested, so two
// runs with the same config and seed emit byte-identical output.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace exburgess {

enum class Status { pass, fail, inconclusive };

const char* status_name(Status s);

struct VerificationReport {
    std::string claim_id;
    std::string module;
    std::vector<std::pair<std::string, std::string>> params;  // ordered key/value
    Status status = Status::inconclusive;
    double margin_lo = 0.0;
    double margin_hi = 0.0;
    std::string mode;  // "exact", "surrogate", "interval", "float64", ...
    std::string notes;
    std::int64_t runtime_ms = -1;  // -1 emits null
    std::uint64_t seed = 0;
};

struct ReportHeader {
    std::string tool = "exburgess";
    std::string version = "0.1.0";
    std::string command;
    std::uint64_t seed = 0;
    unsigned workers = 1;
    std::vector<std::pair<std::string, std::string>> config;  // echoed settings
};

std::string format_sig12(double x);

std::string to_json(const ReportHeader& h, const std::vector<VerificationReport>& rows);
std::string to_csv(const ReportHeader& h, const std::vector<VerificationReport>& rows);
std::string to_text(const ReportHeader& h, const std::vector<VerificationReport>& rows);

// Stable key order used before emission.
void sort_reports(std::vector<VerificationReport>& rows);

// 0 if all rows pass, 1 otherwise.
int exit_code_for(const std::vector<VerificationReport>& rows);

}  // namespace exburgess
