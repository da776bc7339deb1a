#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace gsm {

enum class Verdict { pass, fail, skipped };

struct CheckReport {
    std::string check;
    std::string anchor;    // the audited claim, in words
    std::string instance;  // canonical re-parseable instance line
    Verdict verdict = Verdict::skipped;
    std::string skip_reason;
    nlohmann::json counterexample; // replayable payload; always set on FAIL
    double millis = 0.0;
    bool finding = false; // FAIL documents the audited claim, not a bug
};

std::string verdict_string(const CheckReport& r);

enum class ReportFormat { text, json };

/// Deterministic rendering: reports sorted by (check, instance); timings
/// emitted only when include_timing is set.
std::string emit_report(std::vector<CheckReport> reports, ReportFormat format,
                        bool include_timing = false);

/// True when some non-finding check failed (process exit 1), or when
/// strict is set and any check failed.
bool has_blocking_failure(const std::vector<CheckReport>& reports, bool strict);

} // namespace gsm
