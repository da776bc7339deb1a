#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gsm/gset_module.hpp"
#include "gsm/serialize.hpp"

namespace gsm {

struct CheckRequest {
    std::string name;
    std::map<std::string, std::string> params; // e.g. H -> "C3"
};

/// One audited configuration: ring, coefficient module, group, action and
/// the checks to run. Sections may come from presets or serialized files.
struct InstanceSpec {
    int modulus = 0;
    std::vector<int> factors;
    std::string group_preset; // "cyclic 2", "dihedral 3", "klein", "symmetric 3"
    std::string group_file;
    std::string gset_preset;  // "regular", "trivial 2", "cosets H=C2", "conjugation"
    std::string gset_file;
    std::vector<CheckRequest> checks;
    std::string base_dir; // directory for resolving file references
};

/// Line-oriented: `[ring] n = 3`, `[module] factors = 3`, `[group] preset =
/// dihedral 3`, `[gset] preset = cosets H=C2`, `[checks] maschke-forward,
/// idempotent-split H=C3`. Lines may also be separated by ';'. '#' comments.
InstanceSpec parse_spec(const std::string& text);

/// Canonical one-line instance descriptor (no checks); parse_spec accepts it.
std::string instance_line(const InstanceSpec& spec);

/// "cyclic 2", "dihedral 3", "klein", "symmetric 4".
GroupPtr group_from_preset_text(const std::string& preset, const Caps& caps = {});

/// A built instance plus lazily computed shared artifacts.
class InstanceContext {
public:
    InstanceContext(InstanceSpec spec, const Caps& caps);

    const InstanceSpec& spec() const { return spec_; }
    const Caps& caps() const { return caps_; }
    const FiniteModule& module() const { return module_; }
    const GroupPtr& group() const { return group_; }
    const GSetPtr& gset() const { return gset_; }
    const GSetModule& ms() const { return ms_; }
    const std::vector<Subgroup>& subgroups();

    const std::vector<GSetSubmodule>& lattice();            // capped
    const std::vector<SubmoduleOfM>& coefficient_lattice(); // capped
    const MSSemisimplicity& semisimplicity();
    const GSetSubmodule& kernel();

    Subgroup resolve_subgroup(const std::string& token);

private:
    InstanceSpec spec_;
    Caps caps_;
    FiniteModule module_;
    GroupPtr group_;
    GSetPtr gset_;
    GSetModule ms_;
    std::optional<std::vector<Subgroup>> subgroups_;
    std::optional<std::vector<GSetSubmodule>> lattice_;
    std::optional<std::vector<SubmoduleOfM>> coefficient_lattice_;
    std::optional<MSSemisimplicity> semisimplicity_;
    std::optional<GSetSubmodule> kernel_;
};

} // namespace gsm
