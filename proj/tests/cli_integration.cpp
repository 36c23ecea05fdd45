// End-to-end checks of the installed binary: exit codes, output formats,
// flag validation.  Exit code contract: 0 all pass, 1 any fail, 2 usage.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

namespace {

int failures = 0;

struct RunOutput {
    int code;
    std::string out;
};

RunOutput run(const std::string& args) {
    std::string cmd = std::string(EXBURGESS_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return {-1, ""};
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    int status = pclose(p);
    return {WEXITSTATUS(status), out};
}

void expect(bool cond, const std::string& what) {
    if (!cond) {
        std::cerr << "[FAIL] " << what << "\n";
        ++failures;
    }
}

}  // namespace

int main() {
    auto table = run("table1");
    expect(table.code == 0, "table1 exits 0");
    expect(table.out.find("\"status\":\"pass\"") != std::string::npos, "table1 rows pass");

    auto csv = run("table1 --format csv");
    expect(csv.code == 0, "table1 csv exits 0");
    expect(csv.out.find("claim_id,module,params") != std::string::npos, "csv header present");

    auto usage = run("bound --no-such-flag 3");
    expect(usage.code == 2, "unknown flag exits 2");

    auto missing = run("bound --r 2");
    expect(missing.code == 2, "bound without q or log10-q exits 2");

    auto badfmt = run("table1 --format yaml");
    expect(badfmt.code == 2, "unknown format exits 2");

    auto bound = run("bound --log10-q 3000 --r 2 --theta 0.55 --variant thm2 --surrogate");
    expect(bound.code == 0, "surrogate bound exits 0");
    expect(bound.out.find("\"applicable\":true") != std::string::npos, "surrogate bound applicable");

    auto below = run("bound --q 1000003 --r 3 --theta 0.5");
    expect(below.code == 0, "below-threshold bound still exits 0");
    expect(below.out.find("\"applicable\":false") != std::string::npos, "below threshold flagged");
    expect(below.out.find("threshold") != std::string::npos, "threshold reason listed");

    auto cubefree = run("bound --q 24 --r 3 --theta 0.5 --variant thm1");
    expect(cubefree.out.find("cubefree") != std::string::npos, "cubefree violation reason listed");

    auto charsum = run("charsum --q 5 --char-index 1 --M 0 --N 2");
    expect(charsum.code == 0, "charsum exits 0");
    expect(charsum.out.find("\"sum_re\":0,") != std::string::npos, "quadratic partial sum vanishes");

    auto weil = run("verify-weil --q-max 40 --r 2 --B 2,3");
    expect(weil.code == 0, "weil sweep passes");

    auto weil_text = run("verify-weil --q-max 20 --r 2 --B 2 --format text");
    expect(weil_text.out.find("0 fail") != std::string::npos, "text format summarizes");

    auto explore = run("explore --q 101 --r 2 --N 50");
    expect(explore.code == 0, "explore exits 0");
    expect(explore.out.find("exploratory") != std::string::npos, "explore marked exploratory");

    // determinism across process invocations with a fixed seed
    auto run1 = run("verify-lemmas --n-max 300 --va-trials 10 --lemma22-trials 10 --seed 9");
    auto run2 = run("verify-lemmas --n-max 300 --va-trials 10 --lemma22-trials 10 --seed 9");
    expect(run1.code == 0, "lemma sweep passes");
    expect(run1.out == run2.out, "byte-identical reports across runs");

    // config file supplies defaults, flags win
    {
        FILE* f = fopen("cli_test_config.json", "w");
        fputs("{\"q_max\": 15, \"format\": \"text\"}", f);
        fclose(f);
        auto cfged = run("verify-weil --config cli_test_config.json --r 2 --B 2");
        expect(cfged.out.find("exburgess") == 0, "config file format applied");
        auto overridden = run("verify-weil --config cli_test_config.json --r 2 --B 2 --format json");
        expect(overridden.out.find("{\"header\"") == 0, "flag wins over config");
        remove("cli_test_config.json");
    }

    if (failures) {
        std::cerr << failures << " CLI checks failed\n";
        return 1;
    }
    std::puts("all CLI checks passed");
    return 0;
}
