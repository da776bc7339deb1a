#pragma once

#include <memory>
#include <string>
#include <vector>

#include "gsm/group.hpp"

namespace gsm {

/// A finite right G-action, validated: identity row trivial, rows are
/// permutations, and s.(gh) = (s.g).h for all g,h,s.
struct GSet {
    GroupPtr group;
    std::vector<std::string> points;
    std::vector<std::vector<int>> act; // act[g][s] = index of s.g

    int size() const { return static_cast<int>(points.size()); }
    int apply(int s, int g) const { return act[g][s]; }
    const std::string& point(int s) const { return points[s]; }
};

using GSetPtr = std::shared_ptr<const GSet>;

struct Orbit {
    int representative = 0;      // smallest member index
    std::vector<int> members;    // sorted
};

struct GSetMorphism {
    GSetPtr domain;
    GSetPtr codomain;
    std::vector<int> map; // point index table

    enum class Kind { not_equivariant, equivariant, bijective_equivariant };
    Kind kind = Kind::not_equivariant;
    int witness_point = -1; // (s, g) violating phi(s.g) = phi(s).g
    int witness_element = -1;
};

enum class GSetPresetKind { regular, conjugation_on_subgroups, right_cosets, trivial };

struct GSetPreset {
    GSetPresetKind kind = GSetPresetKind::regular;
    Subgroup subgroup;    // right_cosets only
    int fixed_points = 1; // trivial only
};

GSetPtr build_gset(GroupPtr group, std::vector<std::string> points,
                   std::vector<std::vector<int>> act);

/// regular: G on itself by right multiplication. conjugation: on the full
/// subgroup list (s.g = g^-1 s g). right_cosets(H): Hx.g = H(xg).
/// trivial(k): k fixed points.
GSetPtr preset_gset(const GroupPtr& group, const GSetPreset& preset, const Caps& caps = {});

/// Disjoint orbits covering all points, ordered by smallest member.
std::vector<Orbit> orbits(const GSet& s);

/// { g : s.g = s }; satisfies |orbit(s)| * |stab(s)| = |G|.
Subgroup stabilizer(const GSet& s, int point);

/// Classifies a point map as (bijective-)equivariant or returns a witness.
GSetMorphism check_gset_morphism(GSetPtr domain, GSetPtr codomain, std::vector<int> map);

struct HOrbitQuotient {
    QuotientGroup quotient;                // G/H with projection
    GSetPtr quotient_set;                  // H-orbits as a G/H-set
    GSetPtr inflated;                      // same points as a G-set (via projection)
    GSetMorphism projection;               // S -> inflated; equivariant surjection
    std::vector<std::vector<int>> fibers;  // fibers[i] = H-orbit i, sorted
};

/// Points are H-orbits of S; (H-orbit of s).(gH) = H-orbit of s.g.
/// Well-definedness is verified exhaustively; for normal H it never fails.
HOrbitQuotient h_orbit_quotient(const GSetPtr& s, const Subgroup& subgroup,
                                const Caps& caps = {});

/// H-orbits of S under the restricted action, ordered by smallest member.
std::vector<Orbit> subgroup_orbits(const GSet& s, const Subgroup& subgroup);

} // namespace gsm
