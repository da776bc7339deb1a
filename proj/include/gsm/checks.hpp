#pragma once

#include <functional>

#include "gsm/instance.hpp"
#include "gsm/report.hpp"

namespace gsm {

struct CheckDef {
    std::string name;
    std::string anchor; // the audited claim
    std::string oracle; // how the verdict is established
    bool finding;       // FAIL documents the claim rather than failing the run
    std::function<void(InstanceContext&, const CheckRequest&, CheckReport&)> run;
};

/// All registered checks, in registry order.
const std::vector<CheckDef>& check_registry();
const CheckDef* find_check(const std::string& name);

CheckReport run_one(InstanceContext& ctx, const CheckRequest& request);

/// Runs the checks requested by the spec ("all" expands to the registry).
std::vector<CheckReport> run_checks(InstanceContext& ctx);

/// Rebuilds the instance from the report's descriptor and re-runs the check.
CheckReport replay(const CheckReport& report, const Caps& caps);

} // namespace gsm
