#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gsm/caps.hpp"
#include "gsm/error.hpp"

namespace gsm {

/// A finite group as a validated Cayley table. Elements are dense indices
/// 0..order-1; labels exist for reports only. Immutable after construction:
/// build only through build_group / preset_group.
struct Group {
    int order = 0;
    std::vector<std::string> labels;
    std::vector<std::vector<int>> table; // table[i][j] = index of g_i * g_j
    int identity = 0;
    std::vector<int> inverse;

    int mul(int i, int j) const { return table[i][j]; }
    int inv(int i) const { return inverse[i]; }
    int conj(int g, int x) const { return mul(mul(inv(g), x), g); } // g^-1 x g
    const std::string& label(int i) const { return labels[i]; }
};

using GroupPtr = std::shared_ptr<const Group>;

struct Subgroup {
    GroupPtr parent;
    std::vector<int> members; // sorted

    int order() const { return static_cast<int>(members.size()); }
    bool contains(int g) const;
};

struct Coset {
    Subgroup subgroup;
    int representative = 0;
    std::vector<int> members; // sorted; = { h * representative : h in subgroup }
};

enum class GroupPreset { cyclic, dihedral, klein, symmetric };

/// Validates the full set of group axioms on the table (identity, Latin
/// square, associativity, inverses). Order is capped by caps.group_order.
GroupPtr build_group(std::vector<std::string> labels,
                     std::vector<std::vector<int>> table,
                     const Caps& caps = {});

/// cyclic k | dihedral of order 2k | klein | symmetric k (k <= 4).
/// dihedral 3 carries the labels e,a,a2,b,ba,ba2 with a^3=b^2=e, b^-1 a b = a^-1.
GroupPtr preset_group(GroupPreset kind, int k, const Caps& caps = {});

/// Complete duplicate-free list, sorted by order then members.
std::vector<Subgroup> enumerate_subgroups(const GroupPtr& group, const Caps& caps = {});

/// Closure of the given elements under products; always a valid subgroup.
Subgroup generated_subgroup(const GroupPtr& group, const std::vector<int>& generators);

bool is_subgroup(const Group& group, const std::vector<int>& members);
void require_subgroup(const Group& group, const Subgroup& subgroup);

/// True iff g H g^-1 = H for every g.
bool is_normal(const Group& group, const Subgroup& subgroup);

/// Partition of G into right cosets Hx, ordered by smallest representative.
std::vector<Coset> right_cosets(const GroupPtr& group, const Subgroup& subgroup);

struct QuotientGroup {
    GroupPtr group;                 // the group on cosets, (Nx)(Ny) = N(xy)
    std::vector<Coset> cosets;      // coset i is element i of the quotient
    std::vector<int> projection;    // g -> index of its coset; a homomorphism
};

QuotientGroup quotient_group(const GroupPtr& group, const Subgroup& normal_subgroup,
                             const Caps& caps = {});

/// Exhaustive isomorphism search over bijections fixing the identity.
/// Only intended for |G| <= 8 (preset sanity checks).
std::optional<std::vector<int>> find_isomorphism(const Group& a, const Group& b);

} // namespace gsm
