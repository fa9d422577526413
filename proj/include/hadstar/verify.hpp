#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hadstar/groebner.hpp"
#include "hadstar/io_json.hpp"

namespace hadstar {

enum class CheckStatus { Pass, Fail, DiscrepancyNoted };

const char* check_status_name(CheckStatus s);

/// One entry of the verification battery.  `inputs` embeds the sub-seed and
/// every sampled fixture, so any run can be replayed; `reference` holds the
/// expected figures, `computed` what this run produced.  Wall-clock seconds
/// stay out of the JSON so reports for one seed are byte-identical.
struct CheckResult {
    std::string id;
    std::string statement;
    io::ojson inputs = io::ojson::object();
    io::ojson reference = io::ojson::object();
    io::ojson computed = io::ojson::object();
    CheckStatus status = CheckStatus::Fail;
    std::string note;
    double seconds = 0.0;
    /// Time bound the check must meet, if any (seconds; 0 = none).
    double time_bound = 0.0;
};

struct VerifyOptions {
    std::uint64_t seed = 1729;
    /// Sample counts; the defaults meet every documented threshold.
    int generic_pairs = 100;       // smooth products + reconstruction round-trip
    int survey_generic = 100;      // rank survey, generic draws
    int survey_per_component = 20; // rank survey, per degeneracy component
    int torus_samples = 50;        // torus-stabilizer draws
    int family_samples = 50;       // one-line family membership draws
    int oracle_pairs = 20;         // kernel vs elimination cross-checks
    /// Run only checks whose id contains this substring; empty = all.
    /// Filtering never changes the values a check computes.
    std::string only;
    GbOptions gb;
};

struct VerifyReport {
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;
    int passed = 0;
    int failed = 0;
    int discrepancies = 0;
    bool ok() const { return failed == 0; }
};

/// Runs the thirteen-check battery (filtered by opts.only).  Each check is
/// timed and exception-safe: an escaped error marks that check failed and
/// the battery continues.
VerifyReport run_verify(const VerifyOptions& opts = {});

/// Deterministic JSON form of the report (no timings).
io::ojson verify_report_json(const VerifyReport& r);

}  // namespace hadstar
