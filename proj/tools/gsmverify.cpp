// Command-line auditor: runs the registered structure checks against a
// single instance spec or a sweep grid, and prints machine-readable reports.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "gsm/checks.hpp"
#include "gsm/report.hpp"
#include "gsm/serialize.hpp"
#include "gsm/sweep.hpp"

namespace {

int finish(const std::vector<gsm::CheckReport>& reports, const std::string& report_path,
           const std::string& format, bool strict, bool timing) {
    auto fmt = format == "json" ? gsm::ReportFormat::json : gsm::ReportFormat::text;
    std::string rendered = gsm::emit_report(reports, fmt, timing);
    if (report_path.empty()) {
        std::cout << rendered;
    } else {
        gsm::write_file(report_path, rendered);
    }
    return gsm::has_blocking_failure(reports, strict) ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic auditor for modules of formal sums over group actions"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string report_path;
    std::string format = "text";
    bool strict = false;
    bool timing = false;
    app.add_option("--report", report_path, "write the report to a file instead of stdout");
    app.add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--strict", strict, "findings checks also affect the exit code");
    app.add_flag("--timing", timing, "emit wall-clock timings (non-reproducible output)");

    auto* verify = app.add_subcommand("verify", "run the checks requested by a spec file");
    std::string spec_path;
    verify->add_option("spec", spec_path, "instance spec file")->required();

    auto* sweep_cmd = app.add_subcommand("sweep", "run every check over the instance grid");
    gsm::SweepParams params;
    params.caps = gsm::Caps::from_env();
    sweep_cmd->add_option("--max-modulus", params.max_modulus, "largest coefficient modulus");
    sweep_cmd->add_option("--max-group", params.max_group, "largest group order");
    sweep_cmd->add_option("--max-set", params.max_set, "largest point count for presets");
    sweep_cmd->add_option("--max-module", params.max_module, "largest coefficient module size");
    sweep_cmd->add_option("--seed", params.seed, "sampling seed when --budget is set");
    sweep_cmd->add_option("--budget", params.budget, "sample this many instances (0 = all)");

    auto* explain = app.add_subcommand("explain", "print a check's claim and oracle");
    std::string check_name;
    explain->add_option("check", check_name, "registered check name")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*verify) {
            std::string text = gsm::read_file(spec_path);
            auto spec = gsm::parse_spec(text);
            auto slash = spec_path.find_last_of('/');
            if (slash != std::string::npos) spec.base_dir = spec_path.substr(0, slash);
            gsm::InstanceContext ctx(spec, gsm::Caps::from_env());
            return finish(gsm::run_checks(ctx), report_path, format, strict, timing);
        }
        if (*sweep_cmd) {
            return finish(gsm::sweep(params), report_path, format, strict, timing);
        }
        if (*explain) {
            const auto* def = gsm::find_check(check_name);
            if (!def) {
                std::cerr << "unknown check: " << check_name << "\n";
                std::cerr << "registered checks:\n";
                for (const auto& d : gsm::check_registry())
                    std::cerr << "  " << d.name << "\n";
                return 2;
            }
            std::cout << def->name << (def->finding ? " [finding]" : "") << "\n";
            std::cout << "claim:  " << def->anchor << "\n";
            std::cout << "oracle: " << def->oracle << "\n";
            return 0;
        }
    } catch (const gsm::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
