// Acceptance suite: runs every verification criterion at its pinned range
// and prints one pass/fail line per criterion.  Exit status is nonzero if
// any criterion fails.

#include <cstdio>
#include <string>

#include "sw/verify.hpp"

using namespace sw;

namespace {

int g_failures = 0;

void line(int id, const char* name, bool pass, const std::string& extra) {
    std::printf("[%s] criterion %2d: %s%s%s\n", pass ? "PASS" : "FAIL", id, name,
                extra.empty() ? "" : " -- ", extra.c_str());
    if (!pass) ++g_failures;
}

std::string summary(const Report& rep) {
    std::string s = std::to_string(rep.cases_done) + " cases, " +
                    std::to_string(rep.violations.size()) + " violations, " +
                    std::to_string(rep.wall_seconds).substr(0, 5) + "s";
    for (std::size_t i = 0; i < rep.violations.size() && i < 3; ++i)
        s += "; " + rep.violations[i].params + ": " + rep.violations[i].detail;
    return s;
}

void run(int id, const char* name, const char* suite, const std::vector<std::int64_t>& ps,
         const std::vector<int>& rs, double budget_seconds) {
    const Report rep = run_suite(suite, ps, rs, {});
    const bool in_budget = rep.wall_seconds < budget_seconds;
    line(id, name, rep.ok() && !rep.truncated && in_budget,
         summary(rep) + (in_budget ? "" : " (over time budget)"));
}

}  // namespace

int main() {
    run(1, "principal-series JH uniqueness (typeswts)", "typeswts", {5, 7, 11, 13}, {1, 2, 3},
        60);
    run(2, "cuspidal JH uniqueness (typeswts2)", "typeswts2", {5, 7, 11, 13}, {1, 2, 3}, 60);
    run(3, "cuspidal type identity (tau-identity)", "tau-identity", {5, 7, 11, 13}, {1, 2, 3},
        30);
    run(4, "integer quantities, properties (1)-(12)", "fl-properties", {5, 7, 13}, {1, 2, 3},
        30);
    run(5, "rank-one fibre oracle equivalence", "rank1-oracle", {5, 7}, {1, 2, 3}, 120);
    run(6, "rank-one witness validity", "jhcompat-witness", {5, 7}, {1, 2, 3}, 120);
    run(7, "lift-implies-model uniqueness", "lift-model", {5, 7}, {1, 2, 3}, 120);
    run(8, "weight compatibility implication", "lemma-compat", {5, 7}, {1, 2}, 300);
    run(9, "weak regularity of JH factors", "weak-regularity", {5, 7, 13}, {1, 2, 3}, 60);
    run(10, "dimension bookkeeping", "dimension", {5, 7, 11, 13}, {1, 2, 3}, 60);

    {
        VerifyOptions one;
        one.jobs = 1;
        VerifyOptions four;
        four.jobs = 4;
        bool same = true;
        for (const char* suite : {"typeswts", "rank1-oracle", "fl-properties"}) {
            const std::string a = report_to_json(run_suite(suite, {5}, {1, 2}, one));
            const std::string b = report_to_json(run_suite(suite, {5}, {1, 2}, four));
            if (a != b) same = false;
        }
        line(11, "determinism across --jobs", same, "");
    }

    if (g_failures) std::printf("%d criterion(s) failed\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
