#include "gsm/report.hpp"

#include <algorithm>
#include <sstream>

namespace gsm {

std::string verdict_string(const CheckReport& r) {
    switch (r.verdict) {
        case Verdict::pass: return "PASS";
        case Verdict::fail: return "FAIL";
        case Verdict::skipped: return "SKIPPED(" + r.skip_reason + ")";
    }
    return "?";
}

static void sort_reports(std::vector<CheckReport>& reports) {
    std::stable_sort(reports.begin(), reports.end(),
                     [](const CheckReport& a, const CheckReport& b) {
                         if (a.check != b.check) return a.check < b.check;
                         return a.instance < b.instance;
                     });
}

std::string emit_report(std::vector<CheckReport> reports, ReportFormat format,
                        bool include_timing) {
    sort_reports(reports);
    if (format == ReportFormat::json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : reports) {
            nlohmann::json obj;
            obj["check"] = r.check;
            obj["anchor"] = r.anchor;
            obj["instance"] = r.instance;
            obj["verdict"] = verdict_string(r);
            obj["counterexample"] = r.counterexample.is_null() ? nlohmann::json() : r.counterexample;
            obj["millis"] = include_timing ? static_cast<std::int64_t>(r.millis) : 0;
            arr.push_back(obj);
        }
        return arr.dump(2) + "\n";
    }

    std::ostringstream out;
    std::string current;
    size_t pass = 0, failed = 0, skipped = 0;
    for (const auto& r : reports) {
        if (r.check != current) {
            current = r.check;
            out << "== " << r.check << (r.finding ? " [finding]" : "") << " — " << r.anchor
                << "\n";
        }
        out << "  " << verdict_string(r);
        if (include_timing) out << " (" << static_cast<std::int64_t>(r.millis) << "ms)";
        out << "  " << r.instance << "\n";
        if (r.verdict == Verdict::fail && !r.counterexample.is_null())
            out << "    counterexample: " << r.counterexample.dump() << "\n";
        if (r.verdict == Verdict::pass) ++pass;
        else if (r.verdict == Verdict::fail) ++failed;
        else ++skipped;
    }
    out << "-- " << pass << " pass, " << failed << " fail, " << skipped << " skipped\n";
    return out.str();
}

bool has_blocking_failure(const std::vector<CheckReport>& reports, bool strict) {
    for (const auto& r : reports)
        if (r.verdict == Verdict::fail && (strict || !r.finding)) return true;
    return false;
}

} // namespace gsm
