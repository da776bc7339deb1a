#pragma once

#include <string>

#include "gsm/gset.hpp"
#include "gsm/module.hpp"

namespace gsm {

/// `group <order>` + labels line + one table row per element.
/// Round-trips bit-exactly.
std::string group_to_text(const Group& g);
GroupPtr group_from_text(const std::string& text, const Caps& caps = {});

/// `gset <|S|> <group-file>` + points line + |G| action rows.
std::string gset_to_text(const GSet& s, const std::string& group_file);
struct GSetFile {
    std::string group_file;
    GSetPtr gset; // resolved against the provided group
};
GSetFile gset_from_text(const std::string& text, const GroupPtr& group);

/// `module n=<n> factors=<d1,d2,...>`.
std::string module_to_text(const FiniteModule& m);
FiniteModule module_from_text(const std::string& line);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace gsm
