#pragma once

#include <cstdint>

#include "gsm/checks.hpp"

namespace gsm {

struct SweepParams {
    int max_modulus = 6;
    int max_group = 8;        // group order bound
    int max_set = 4;          // point-count bound for presets
    std::uint64_t max_module = 9;
    std::uint64_t seed = 0;   // sampling seed when the grid exceeds budget
    std::size_t budget = 0;   // 0 = run the full grid
    Caps caps;
};

/// Deterministic instance grid: moduli ascending, the fixed group list,
/// coefficient modules by size then factors, then the applicable presets.
std::vector<InstanceSpec> sweep_grid(const SweepParams& params);

/// Runs every registered check on every grid instance. Instances that fail
/// to build are reported as SKIPPED for each check, never dropped.
std::vector<CheckReport> sweep(const SweepParams& params);

} // namespace gsm
