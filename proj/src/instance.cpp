#include "gsm/instance.hpp"

#include <algorithm>
#include <sstream>

namespace gsm {

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r");
    size_t e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

// splits "key = value" (spaces optional)
bool key_value(const std::string& s, const std::string& key, std::string& value) {
    if (s.rfind(key, 0) != 0) return false;
    size_t pos = key.size();
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    if (pos >= s.size() || s[pos] != '=') return false;
    value = trim(s.substr(pos + 1));
    return true;
}

std::vector<int> parse_factor_list(const std::string& text, int line_no) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string num;
    while (std::getline(ss, num, ',')) {
        num = trim(num);
        if (num.empty()) continue;
        try {
            out.push_back(std::stoi(num));
        } catch (...) {
            fail(Errc::syntax_error, "bad factor '" + num + "'", line_no);
        }
    }
    return out;
}

CheckRequest parse_check_entry(const std::string& entry, int line_no) {
    CheckRequest req;
    std::stringstream ss(entry);
    std::string tok;
    while (ss >> tok) {
        auto eq = tok.find('=');
        if (req.name.empty()) {
            if (eq != std::string::npos)
                fail(Errc::syntax_error, "check entry must start with a name", line_no);
            req.name = tok;
        } else {
            if (eq == std::string::npos)
                fail(Errc::syntax_error, "check parameter must be key=value", line_no);
            req.params[tok.substr(0, eq)] = tok.substr(eq + 1);
        }
    }
    if (req.name.empty()) fail(Errc::syntax_error, "empty check entry", line_no);
    return req;
}

} // namespace

InstanceSpec parse_spec(const std::string& text) {
    InstanceSpec spec;
    bool saw_ring = false, saw_module = false, saw_group = false, saw_gset = false;
    int line_no = 0;
    std::stringstream lines(text);
    std::string raw;
    while (std::getline(lines, raw, '\n')) {
        ++line_no;
        std::stringstream parts(raw);
        std::string piece;
        while (std::getline(parts, piece, ';')) {
            std::string line = trim(piece);
            if (line.empty() || line[0] == '#') continue;
            if (line[0] != '[')
                fail(Errc::syntax_error, "expected [section] prefix in '" + line + "'", line_no);
            auto close = line.find(']');
            if (close == std::string::npos)
                fail(Errc::syntax_error, "unterminated section name", line_no);
            std::string section = line.substr(1, close - 1);
            std::string rest = trim(line.substr(close + 1));
            std::string value;
            if (section == "ring") {
                if (!key_value(rest, "n", value))
                    fail(Errc::syntax_error, "expected n = <modulus>", line_no);
                try {
                    spec.modulus = std::stoi(value);
                } catch (...) {
                    fail(Errc::syntax_error, "bad modulus '" + value + "'", line_no);
                }
                saw_ring = true;
            } else if (section == "module") {
                if (!key_value(rest, "factors", value))
                    fail(Errc::syntax_error, "expected factors = d1,d2,...", line_no);
                spec.factors = parse_factor_list(value, line_no);
                saw_module = true;
            } else if (section == "group") {
                if (key_value(rest, "preset", value)) spec.group_preset = value;
                else if (key_value(rest, "file", value)) spec.group_file = value;
                else fail(Errc::syntax_error, "expected preset = ... or file = ...", line_no);
                saw_group = true;
            } else if (section == "gset") {
                if (key_value(rest, "preset", value)) spec.gset_preset = value;
                else if (key_value(rest, "file", value)) spec.gset_file = value;
                else fail(Errc::syntax_error, "expected preset = ... or file = ...", line_no);
                saw_gset = true;
            } else if (section == "checks") {
                std::stringstream cs(rest);
                std::string entry;
                while (std::getline(cs, entry, ',')) {
                    entry = trim(entry);
                    if (!entry.empty()) spec.checks.push_back(parse_check_entry(entry, line_no));
                }
            } else {
                fail(Errc::syntax_error, "unknown section [" + section + "]", line_no);
            }
        }
    }
    if (!saw_ring) fail(Errc::syntax_error, "missing [ring] section", line_no);
    if (!saw_module) fail(Errc::syntax_error, "missing [module] section", line_no);
    if (!saw_group) fail(Errc::syntax_error, "missing [group] section", line_no);
    if (!saw_gset) fail(Errc::syntax_error, "missing [gset] section", line_no);
    return spec;
}

std::string instance_line(const InstanceSpec& spec) {
    std::ostringstream out;
    out << "[ring] n = " << spec.modulus << "; [module] factors = ";
    for (size_t i = 0; i < spec.factors.size(); ++i) out << (i ? "," : "") << spec.factors[i];
    out << "; [group] ";
    if (!spec.group_file.empty()) out << "file = " << spec.group_file;
    else out << "preset = " << spec.group_preset;
    out << "; [gset] ";
    if (!spec.gset_file.empty()) out << "file = " << spec.gset_file;
    else out << "preset = " << spec.gset_preset;
    return out.str();
}

GroupPtr group_from_preset_text(const std::string& preset, const Caps& caps) {
    std::stringstream ss(preset);
    std::string kind;
    int k = 0;
    ss >> kind;
    ss >> k;
    if (kind == "cyclic") return preset_group(GroupPreset::cyclic, k, caps);
    if (kind == "dihedral") return preset_group(GroupPreset::dihedral, k, caps);
    if (kind == "klein") return preset_group(GroupPreset::klein, 0, caps);
    if (kind == "symmetric") return preset_group(GroupPreset::symmetric, k, caps);
    fail(Errc::unsupported_preset, "unknown group preset '" + preset + "'");
}

namespace {

GroupPtr build_spec_group(const InstanceSpec& spec, const Caps& caps) {
    if (!spec.group_file.empty()) {
        std::string path = spec.base_dir.empty() ? spec.group_file
                                                 : spec.base_dir + "/" + spec.group_file;
        return group_from_text(read_file(path), caps);
    }
    return group_from_preset_text(spec.group_preset, caps);
}

} // namespace

InstanceContext::InstanceContext(InstanceSpec spec, const Caps& caps)
    : spec_(std::move(spec)), caps_(caps) {
    module_ = make_module(spec_.modulus, spec_.factors);
    group_ = build_spec_group(spec_, caps_);
    if (!spec_.gset_file.empty()) {
        std::string path = spec_.base_dir.empty() ? spec_.gset_file
                                                  : spec_.base_dir + "/" + spec_.gset_file;
        gset_ = gset_from_text(read_file(path), group_).gset;
    } else {
        std::stringstream ss(spec_.gset_preset);
        std::string kind;
        ss >> kind;
        if (kind == "regular") {
            gset_ = preset_gset(group_, GSetPreset{GSetPresetKind::regular, {}, 0}, caps_);
        } else if (kind == "conjugation") {
            gset_ = preset_gset(group_,
                                GSetPreset{GSetPresetKind::conjugation_on_subgroups, {}, 0},
                                caps_);
        } else if (kind == "trivial") {
            int k = 1;
            ss >> k;
            gset_ = preset_gset(group_, GSetPreset{GSetPresetKind::trivial, {}, k}, caps_);
        } else if (kind == "cosets") {
            std::string token;
            ss >> token;
            std::string value;
            if (!key_value(token, "H", value) && token.rfind("H=", 0) == 0)
                value = token.substr(2);
            if (value.empty())
                fail(Errc::syntax_error, "cosets preset needs H=<subgroup>");
            Subgroup h = resolve_subgroup(value);
            gset_ = preset_gset(group_, GSetPreset{GSetPresetKind::right_cosets, h, 0}, caps_);
        } else {
            fail(Errc::unsupported_preset, "unknown gset preset '" + spec_.gset_preset + "'");
        }
    }
    ms_ = make_gset_module(module_, gset_);
}

const std::vector<Subgroup>& InstanceContext::subgroups() {
    if (!subgroups_) subgroups_ = enumerate_subgroups(group_, caps_);
    return *subgroups_;
}

const std::vector<GSetSubmodule>& InstanceContext::lattice() {
    if (!lattice_) lattice_ = enumerate_submodules(ms_, caps_);
    return *lattice_;
}

const std::vector<SubmoduleOfM>& InstanceContext::coefficient_lattice() {
    if (!coefficient_lattice_) coefficient_lattice_ = enumerate_submodules(module_, caps_);
    return *coefficient_lattice_;
}

const MSSemisimplicity& InstanceContext::semisimplicity() {
    if (!semisimplicity_) {
        // the socle route settles the negative case without the lattice;
        // the positive case is certified by the full complement table
        auto obstruction = semisimplicity_obstruction(ms_, caps_);
        if (obstruction) {
            MSSemisimplicity res;
            res.semisimple = false;
            res.witness = std::move(*obstruction);
            semisimplicity_ = std::move(res);
        } else {
            semisimplicity_ = is_semisimple(ms_, lattice());
        }
    }
    return *semisimplicity_;
}

const GSetSubmodule& InstanceContext::kernel() {
    if (!kernel_) kernel_ = augmentation_kernel(ms_, caps_);
    return *kernel_;
}

Subgroup InstanceContext::resolve_subgroup(const std::string& token) {
    auto subs = enumerate_subgroups(group_, caps_);
    if (token == "G") return subs.back();
    if (token == "trivial" || token == "{e}")
        return Subgroup{group_, {group_->identity}};
    if (token.rfind('#', 0) == 0) {
        int idx = -1;
        try {
            idx = std::stoi(token.substr(1));
        } catch (...) {
            fail(Errc::syntax_error, "bad subgroup index '" + token + "'");
        }
        if (idx < 0 || idx >= static_cast<int>(subs.size()))
            fail(Errc::not_a_subgroup, "subgroup index out of range: " + token);
        return subs[static_cast<size_t>(idx)];
    }
    if (token.size() >= 2 && token.front() == '{' && token.back() == '}') {
        std::vector<int> members;
        std::stringstream ss(token.substr(1, token.size() - 2));
        std::string label;
        while (std::getline(ss, label, ',')) {
            label = trim(label);
            int g = -1;
            for (int i = 0; i < group_->order; ++i)
                if (group_->label(i) == label) { g = i; break; }
            if (g < 0) fail(Errc::not_a_subgroup, "unknown element label '" + label + "'");
            members.push_back(g);
        }
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        Subgroup h{group_, members};
        require_subgroup(*group_, h);
        return h;
    }
    if (token.size() >= 2 && token[0] == 'C') {
        int order = -1;
        try {
            order = std::stoi(token.substr(1));
        } catch (...) {
            fail(Errc::syntax_error, "bad subgroup token '" + token + "'");
        }
        for (const auto& h : subs)
            if (h.order() == order) return h; // first by enumeration order
        fail(Errc::not_a_subgroup, "no subgroup of order " + std::to_string(order));
    }
    fail(Errc::syntax_error, "cannot resolve subgroup token '" + token + "'");
}

} // namespace gsm
