// Claim-verification harness: each registered claim rebuilds the exact
// constructions it is about, brute-forces the invariants, compares against
// the closed-form prediction or inequality, and reports pass/fail per
// instance. Failures carry serialized counterexamples; nothing is asserted.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fixig/caps.hpp"

namespace fixig::claims {

enum class Verdict { pass, fail, skip };

std::string verdict_name(Verdict v);

struct ClaimReport {
    std::string claim;
    std::string instance;
    nlohmann::json predicted;
    nlohmann::json computed;
    Verdict verdict = Verdict::pass;
    std::string reason;   // skip reason / failure note
    double millis = 0.0;  // informational; not serialized (byte-stable output)
};

struct CheckParams {
    int max_n = 0;          // 0 = claim default; caps the sweep dimension
    std::uint64_t seed = 12345;
    int jobs = 1;
    Caps caps = Caps::defaults();
};

// Registered claim ids, sorted.
std::vector<std::string> claim_ids();
bool has_claim(const std::string& id);

// Runs one claim; throws std::invalid_argument on unknown ids.
std::vector<ClaimReport> check_claim(const std::string& id, const CheckParams& params = {});

// Suite aliases ("all", "prop-2.5", "thm-3.1", "complete", "matching",
// "trees", "joins", "lemmas", "bounds") or a single claim id.
std::vector<std::string> suite_claims(const std::string& suite);
std::vector<std::string> suite_names();

// {"claim","instance","predicted","computed","verdict"} (+"reason" if set).
nlohmann::json report_json(const ClaimReport& r);

} // namespace fixig::claims
