#include "gsm/sweep.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

namespace gsm {

namespace {

// modules with every factor >= 2 dividing n and product <= max_size,
// ordered by size then factor list
std::vector<std::vector<int>> module_shapes(int n, std::uint64_t max_size) {
    std::vector<int> divisors;
    for (int d = 2; d <= n; ++d)
        if (n % d == 0) divisors.push_back(d);
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    std::function<void(size_t, std::uint64_t)> recurse = [&](size_t from, std::uint64_t size) {
        if (!current.empty()) out.push_back(current);
        for (size_t i = from; i < divisors.size(); ++i) {
            std::uint64_t next = size * static_cast<std::uint64_t>(divisors[i]);
            if (next > max_size) continue;
            current.push_back(divisors[i]);
            recurse(i, next);
            current.pop_back();
        }
    };
    recurse(0, 1);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        std::uint64_t sa = 1, sb = 1;
        for (int d : a) sa *= static_cast<std::uint64_t>(d);
        for (int d : b) sb *= static_cast<std::uint64_t>(d);
        if (sa != sb) return sa < sb;
        return a < b;
    });
    return out;
}

} // namespace

std::vector<InstanceSpec> sweep_grid(const SweepParams& params) {
    struct GroupEntry {
        const char* preset;
        int order;
    };
    const GroupEntry group_list[] = {
        {"cyclic 2", 2}, {"cyclic 3", 3}, {"cyclic 4", 4},
        {"klein", 4},    {"dihedral 3", 6}, {"cyclic 6", 6},
    };
    std::vector<InstanceSpec> grid;
    for (int n = 2; n <= params.max_modulus; ++n) {
        auto shapes = module_shapes(n, params.max_module);
        for (const auto& entry : group_list) {
            if (entry.order > params.max_group) continue;
            auto group = group_from_preset_text(entry.preset, params.caps);
            std::vector<std::string> presets = {"trivial 1", "trivial 2"};
            if (group->order <= params.max_set) presets.push_back("regular");
            auto subs = enumerate_subgroups(group, params.caps);
            for (size_t i = 0; i < subs.size(); ++i) {
                if (subs[i].order() == 1) continue; // cosets of {e} = regular
                if (group->order / subs[i].order() > params.max_set) continue;
                presets.push_back("cosets H=#" + std::to_string(i));
            }
            if (static_cast<int>(subs.size()) <= params.max_set)
                presets.push_back("conjugation");
            for (const auto& shape : shapes)
                for (const auto& preset : presets) {
                    InstanceSpec spec;
                    spec.modulus = n;
                    spec.factors = shape;
                    spec.group_preset = entry.preset;
                    spec.gset_preset = preset;
                    spec.checks = {{"all", {}}};
                    grid.push_back(std::move(spec));
                }
        }
    }
    if (params.budget > 0 && grid.size() > params.budget) {
        std::vector<size_t> idx(grid.size());
        std::iota(idx.begin(), idx.end(), size_t{0});
        std::mt19937_64 rng(params.seed);
        std::shuffle(idx.begin(), idx.end(), rng);
        idx.resize(params.budget);
        std::sort(idx.begin(), idx.end());
        std::vector<InstanceSpec> sampled;
        sampled.reserve(idx.size());
        for (size_t i : idx) sampled.push_back(std::move(grid[i]));
        grid = std::move(sampled);
    }
    return grid;
}

std::vector<CheckReport> sweep(const SweepParams& params) {
    std::vector<CheckReport> reports;
    for (const auto& spec : sweep_grid(params)) {
        try {
            InstanceContext ctx(spec, params.caps);
            auto batch = run_checks(ctx);
            reports.insert(reports.end(), batch.begin(), batch.end());
        } catch (const Error& e) {
            // the instance itself could not be built: report every check
            for (const auto& def : check_registry()) {
                CheckReport r;
                r.check = def.name;
                r.anchor = def.anchor;
                r.finding = def.finding;
                r.instance = instance_line(spec);
                r.verdict = Verdict::skipped;
                r.skip_reason = e.what();
                reports.push_back(std::move(r));
            }
        }
    }
    return reports;
}

} // namespace gsm
