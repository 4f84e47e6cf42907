#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sw/breuil.hpp"

namespace sw {

struct Violation {
    std::string params;
    std::string detail;
    friend bool operator==(const Violation&, const Violation&) = default;
    friend auto operator<=>(const Violation&, const Violation&) = default;
};

struct Report {
    std::string suite;
    std::string params;
    std::int64_t cases_done = 0;   // cases actually checked
    bool truncated = false;        // stopped early on --max-seconds
    std::vector<Violation> violations;
    double wall_seconds = 0.0;

    bool ok() const { return violations.empty(); }
};

/// Canonical JSON body of a report: deterministic for fixed inputs (sorted
/// violations, no timing data).
std::string report_to_json(const Report& rep);

struct VerifyOptions {
    int jobs = 0;            // 0 = hardware concurrency
    double max_seconds = 0;  // 0 = unlimited
};

/// Known suites: typeswts, typeswts2, tau-identity, fl-properties,
/// rank1-oracle, jhcompat-witness, lift-model, lemma-compat,
/// weak-regularity, dimension.
bool is_known_suite(const std::string& name);
std::vector<std::string> known_suites();

/// Runs one verification suite over the product of the given p and r
/// values.  (p, r) combinations a suite does not cover are skipped.
Report run_suite(const std::string& name, const std::vector<std::int64_t>& ps,
                 const std::vector<int>& rs, const VerifyOptions& opt = {});

}  // namespace sw
