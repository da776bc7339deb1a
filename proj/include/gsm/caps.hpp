#pragma once

#include <cstdint>

namespace gsm {

/// Enumeration caps. Everything in this library is exact and exhaustive;
/// the caps bound what "exhaustive" is allowed to touch. Defaults match
/// desk scale; GSM_CAPS="ms_enum=8192,closure=2097152" raises them.
struct Caps {
    int group_order = 24;            // group validation / subgroup enumeration
    std::uint64_t module_enum = 4096; // |M| for coefficient submodule lattices
    std::uint64_t ms_enum = 4096;     // |MS| for full lattice / elementwise ops
    std::uint64_t closure = 1u << 20; // |MS| for a single submodule closure
    std::uint64_t rg_enum = 4096;     // |RG| for ideal enumeration

    /// Defaults overridden by the GSM_CAPS environment variable.
    static Caps from_env();
};

} // namespace gsm
