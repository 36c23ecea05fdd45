#include "exburgess/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace exburgess {

const char* status_name(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        default: return "inconclusive";
    }
}

std::string format_sig12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

namespace {

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 8);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

void append_kv_json(std::string& out, const std::vector<std::pair<std::string, std::string>>& kv) {
    out += "{";
    bool first = true;
    for (const auto& [k, v] : kv) {
        if (!first) out += ",";
        first = false;
        out += "\"" + json_escape(k) + "\":\"" + json_escape(v) + "\"";
    }
    out += "}";
}

std::string params_flat(const std::vector<std::pair<std::string, std::string>>& kv) {
    std::string out;
    bool first = true;
    for (const auto& [k, v] : kv) {
        if (!first) out += ";";
        first = false;
        out += k + "=" + v;
    }
    return out;
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

}  // namespace

void sort_reports(std::vector<VerificationReport>& rows) {
    std::stable_sort(rows.begin(), rows.end(), [](const VerificationReport& a, const VerificationReport& b) {
        if (a.module != b.module) return a.module < b.module;
        if (a.claim_id != b.claim_id) return a.claim_id < b.claim_id;
        return params_flat(a.params) < params_flat(b.params);
    });
}

int exit_code_for(const std::vector<VerificationReport>& rows) {
    for (const auto& r : rows)
        if (r.status != Status::pass) return 1;
    return 0;
}

std::string to_json(const ReportHeader& h, const std::vector<VerificationReport>& rows) {
    std::string out = "{\"header\":{";
    out += "\"tool\":\"" + json_escape(h.tool) + "\",";
    out += "\"version\":\"" + json_escape(h.version) + "\",";
    out += "\"command\":\"" + json_escape(h.command) + "\",";
    out += "\"seed\":" + std::to_string(h.seed) + ",";
    out += "\"workers\":" + std::to_string(h.workers) + ",";
    out += "\"config\":";
    append_kv_json(out, h.config);
    out += "},\"rows\":[";
    bool first = true;
    for (const auto& r : rows) {
        if (!first) out += ",";
        first = false;
        out += "{\"claim_id\":\"" + json_escape(r.claim_id) + "\",";
        out += "\"module\":\"" + json_escape(r.module) + "\",";
        out += "\"params\":";
        append_kv_json(out, r.params);
        out += ",\"status\":\"" + std::string(status_name(r.status)) + "\",";
        out += "\"margin_lo\":" + format_sig12(r.margin_lo) + ",";
        out += "\"margin_hi\":" + format_sig12(r.margin_hi) + ",";
        out += "\"mode\":\"" + json_escape(r.mode) + "\",";
        out += "\"notes\":\"" + json_escape(r.notes) + "\",";
        out += "\"runtime_ms\":" + (r.runtime_ms < 0 ? std::string("null") : std::to_string(r.runtime_ms)) + ",";
        out += "\"seed\":" + std::to_string(r.seed) + "}";
    }
    out += "]}\n";
    return out;
}

std::string to_csv(const ReportHeader& h, const std::vector<VerificationReport>& rows) {
    std::string out = "# tool=" + h.tool + " version=" + h.version + " command=" + h.command +
                      " seed=" + std::to_string(h.seed) + " workers=" + std::to_string(h.workers) + "\n";
    out += "claim_id,module,params,status,margin_lo,margin_hi,mode,notes,runtime_ms,seed\n";
    for (const auto& r : rows) {
        out += csv_quote(r.claim_id) + "," + csv_quote(r.module) + "," + csv_quote(params_flat(r.params)) +
               "," + status_name(r.status) + "," + format_sig12(r.margin_lo) + "," +
               format_sig12(r.margin_hi) + "," + csv_quote(r.mode) + "," + csv_quote(r.notes) + "," +
               (r.runtime_ms < 0 ? std::string("") : std::to_string(r.runtime_ms)) + "," +
               std::to_string(r.seed) + "\n";
    }
    return out;
}

std::string to_text(const ReportHeader& h, const std::vector<VerificationReport>& rows) {
    std::ostringstream os;
    os << h.tool << " " << h.version << " | " << h.command << " | seed=" << h.seed
       << " workers=" << h.workers << "\n";
    std::size_t pass = 0, fail = 0, inc = 0;
    for (const auto& r : rows) {
        if (r.status == Status::pass) ++pass;
        else if (r.status == Status::fail) ++fail;
        else ++inc;
    }
    os << rows.size() << " checks: " << pass << " pass, " << fail << " fail, " << inc
       << " inconclusive\n";
    for (const auto& r : rows) {
        os << "[" << status_name(r.status) << "] " << r.module << "/" << r.claim_id;
        if (!r.params.empty()) os << " (" << params_flat(r.params) << ")";
        os << " margin=[" << format_sig12(r.margin_lo) << ", " << format_sig12(r.margin_hi) << "]"
           << " mode=" << r.mode;
        if (!r.notes.empty()) os << " -- " << r.notes;
        os << "\n";
    }
    return os.str();
}

}  // namespace exburgess
