#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gsm/group_ring.hpp"
#include "gsm/gset.hpp"
#include "gsm/module.hpp"

namespace gsm {

/// The space of formal sums  sum_s m_s s  with m_s in M: one M-coefficient
/// per point of S, packed as |S| digits of radix |M| (point 0 most
/// significant). A right module over Z_n[G] via (mu.g) having coefficient
/// m_s at the point s.g.
struct GSetModule {
    FiniteModule module;
    GSetPtr gset;

    std::uint64_t total = 1;                 // |M|^|S|, saturated
    bool oversized = false;                  // true when |M|^|S| overflowed
    std::vector<std::uint64_t> weights;      // weights[s] = |M|^(|S|-1-s)
    std::vector<std::uint32_t> add_table;    // |M|x|M| when |M| <= 512
    std::vector<std::uint32_t> scalar_table; // n x |M| when |M| <= 512

    std::uint64_t size() const { return total; }
    int points() const { return static_cast<int>(weights.size()); }
    int group_order() const { return gset->group->order; }
    int modulus() const { return module.ring.modulus; }

    Code coeff(Code c, int s) const {
        return (c / weights[s]) % module.size();
    }
    Code madd(Code a, Code b) const {
        return add_table.empty() ? module.add(a, b)
                                 : add_table[a * module.size() + b];
    }
    Code mscalar(int r, Code a) const {
        return scalar_table.empty() ? module.scalar(r, a)
                                    : scalar_table[static_cast<Code>(r) * module.size() + a];
    }

    Code add(Code a, Code b) const;
    Code neg(Code a) const;
    Code scalar(int r, Code a) const;
    Code act(Code a, int g) const;                         // mu.g
    Code act_rg(Code a, const GroupRingElement& rho) const; // mu.rho
    Code single(Code m, int s) const { return m * weights[s]; }
    Code augment(Code a) const;                            // sum of coefficients

    /// Unit single terms (one generator per module factor per point);
    /// every element is a finite sum of these.
    std::vector<Code> unit_basis() const;

    CodeGroup code_group() const;  // addition + all g-actions (RG-structure)
    CodeGroup plain_group() const; // addition only (R-structure)

    bool same_shape(const GSetModule& other) const {
        return module.same_shape(other.module) && gset.get() == other.gset.get();
    }
};

GSetModule make_gset_module(FiniteModule module, GSetPtr gset);

/// Decoded view of an element: one residue tuple per point.
struct MSElement {
    FiniteModule module;
    GSetPtr gset;
    std::vector<std::vector<int>> coeffs;
};

MSElement ms_decode(const GSetModule& ms, Code c);
Code ms_encode(const GSetModule& ms, const MSElement& e);
std::string ms_to_string(const GSetModule& ms, Code c);
Code ms_parse(const GSetModule& ms, const std::string& text);

/// An enumerated subset closed under addition; closed under every g-action
/// unless noted otherwise (tags record provenance).
struct GSetSubmodule {
    std::vector<Code> elements; // sorted
    std::vector<Code> generators;
    std::vector<std::string> tags;
    bool g_closed = true;

    std::uint64_t size() const { return elements.size(); }
    bool contains(Code c) const;
};

/// mu.rho for the ambient. Same convolution-transport as act_rg; exposed
/// as the module-level action entry point.
Code group_ring_action(const GSetModule& ms, const GroupRingElement& rho, Code mu);

/// Smallest subset containing gens closed under addition, Z_n-scalars and
/// every g-action. Requires |MS| within the closure cap.
GSetSubmodule generated_submodule(const GSetModule& ms, const std::vector<Code>& gens,
                                  const Caps& caps = {}, std::vector<std::string> tags = {});

/// Re-verifies closure of a submodule (certificate): g-actions on every
/// element, full addition table when affordable, generator sums otherwise.
bool verify_submodule_closed(const GSetModule& ms, const GSetSubmodule& w);

/// Complete lattice of submodules closed under the action, sorted by size
/// then elements.
std::vector<GSetSubmodule> enumerate_submodules(const GSetModule& ms, const Caps& caps = {});

/// simple[i] = lattice[i] is minimal nonzero.
std::vector<bool> flag_simple(const std::vector<GSetSubmodule>& lattice);

/// The set { sum_h mu_h.(h-1) : mu_h in MS }. An additive span; closed
/// under the G-action exactly when recorded by g_closed (always for normal
/// H). Contained in the kernel of the coefficient-sum map.
GSetSubmodule delta_submodule(const GSetModule& ms, const Subgroup& subgroup,
                              const Caps& caps = {});

/// { mu.e : mu in MS } for an arbitrary ring element e.
GSetSubmodule image_submodule(const GSetModule& ms, const GroupRingElement& e,
                              const Caps& caps = {}, std::vector<std::string> tags = {});

/// Kernel of the coefficient-sum map, enumerated directly.
GSetSubmodule augmentation_kernel(const GSetModule& ms, const Caps& caps = {});

/// The cyclic submodule generated by one element.
std::vector<Code> cyclic_submodule(const GSetModule& ms, Code x, const Caps& caps = {});

/// All minimal nonzero submodules (equivalently the simple ones), found as
/// minimal members of the family of cyclic submodules.
std::vector<GSetSubmodule> minimal_submodules(const GSetModule& ms, const Caps& caps = {});

/// Sum of the minimal submodules.
GSetSubmodule socle_submodule(const GSetModule& ms, const Caps& caps = {});

/// nullopt when the socle is everything (semisimple); otherwise the socle,
/// an essential proper submodule (no complement), with essentiality
/// verified exhaustively over every cyclic submodule.
std::optional<std::vector<Code>> semisimplicity_obstruction(const GSetModule& ms,
                                                            const Caps& caps = {});

/// A verified linear map between enumerated action spaces. Flags are
/// established exhaustively: additivity over (unit term, everything) pairs
/// (which extends to all pairs by induction on supports), scalars and
/// g-actions over the full domain.
struct ModuleMorphism {
    std::string domain_desc;
    std::string codomain_desc;
    std::uint64_t domain_size = 0;
    std::uint64_t codomain_size = 0;
    std::vector<Code> table;
    bool additive = false;
    bool r_linear = false;
    bool g_equivariant = false;
    bool injective = false;
    bool surjective = false;

    bool rg_linear() const { return additive && r_linear && g_equivariant; }
};

ModuleMorphism verify_morphism(const GSetModule& dom, const GSetModule& cod,
                               const std::vector<Code>& table, std::string domain_desc,
                               std::string codomain_desc);

struct SplitWitness {
    GroupRingElement idempotent;     // scaled subgroup sum
    GSetSubmodule image;             // P = MS.e
    GSetSubmodule complement;        // Q = MS.(1-e)
    HOrbitQuotient quotient;         // H-orbit set with the quotient action
    GSetModule quotient_space;       // M over the inflated H-orbit set
    std::optional<ModuleMorphism> iso; // P -> quotient_space, or a recorded failure
    std::string iso_failure;
};

/// Requires H normal and gcd(|H|, n) = 1. Verifies P+Q = MS, P n Q = 0,
/// e fixes P pointwise and annihilates Q, and attempts the explicit
/// equivariant bijection P -> M(S/H).
SplitWitness idempotent_split(const GSetModule& ms, const Subgroup& subgroup,
                              const Caps& caps = {});

struct OrbitDirectSumResult {
    bool ok = false;
    std::string detail;
    std::vector<ModuleMorphism> component_maps; // regular module -> orbit component
};

/// MS as the internal direct sum of its orbit components, each the image of
/// an epimorphism from the regular module (domain capped by caps.closure).
OrbitDirectSumResult orbit_direct_sum_check(const GSetModule& ms, const Caps& caps = {});

struct QuotientIsoResult {
    bool ok = false;
    std::string detail;
    ModuleMorphism theta;
};

QuotientIsoResult quotient_iso_check(const FiniteModule& m, const SubmoduleOfM& n,
                                     const GSetPtr& s, const Caps& caps = {});

struct SumIntersectionResult {
    bool sum_ms = false, sum_m = false;
    bool intersection_ms_zero = false, intersection_m_zero = false;
    bool sum_biconditional = false;
    bool intersection_biconditional = false;
};

SumIntersectionResult sum_intersection_lemma_check(const FiniteModule& m,
                                                   const SubmoduleOfM& n1,
                                                   const SubmoduleOfM& n2, const GSetPtr& s,
                                                   const Caps& caps = {});

struct NgsMinimalityResult {
    bool ok = false;
    std::string detail;
};

/// The coefficient-constrained orbit set N.Gs must equal the closure of
/// { x.s : x in N }; closures are minimal, so equality gives minimality.
NgsMinimalityResult ngs_minimality_check(const FiniteModule& m, const SubmoduleOfM& n,
                                         const GSetPtr& s, int point, const Caps& caps = {});

struct DirectSumCommutesResult {
    bool ok = false;
    std::string detail;
    ModuleMorphism shuffle;
};

DirectSumCommutesResult direct_sum_commutes_check(const FiniteModule& m1,
                                                  const FiniteModule& m2, const GSetPtr& s,
                                                  const Caps& caps = {});

struct MSSemisimplicity {
    bool semisimple = false;
    std::vector<int> complement_of;  // per lattice index, when scanned
    int failing_submodule = -1;      // lattice index, when scanned
    std::vector<Code> witness;       // a submodule without a complement
};

/// Brute force over the enumerated lattice: every submodule must have a
/// complement in the lattice.
MSSemisimplicity is_semisimple(const GSetModule& ms,
                               const std::vector<GSetSubmodule>& lattice);

struct MaschkeCriterion {
    bool holds = false;
    bool module_semisimple = false;
    bool order_invertible = false;
};

MaschkeCriterion maschke_criterion(const FiniteModule& m, const Group& g,
                                   const Caps& caps = {});

struct SimpleFactorization {
    enum class Status { not_simple, factored, no_factorization };
    Status status = Status::not_simple;
    std::vector<int> carrier;               // S_L: points with nonzero coefficients
    bool carrier_is_union_of_orbits = false;
    std::vector<Code> coefficient_module;   // L_s at the least carrier point
    bool coefficients_uniform = false;      // same L_s at every carrier point
    int factor_submodule = -1;              // index into the coefficient lattice
    int factor_orbit = -1;                  // index into orbits(S)
    int match_count = 0;
};

/// For a simple submodule, exhaustively searches all (N, orbit) pairs for
/// N.Gs = L. no_factorization is a recorded audit finding, not an error.
/// Simplicity is established directly: every nonzero element must generate
/// the whole submodule.
SimpleFactorization simple_factorization(const GSetModule& ms, const GSetSubmodule& l,
                                         const std::vector<SubmoduleOfM>& coefficient_lattice,
                                         const Caps& caps = {});

struct AveragedLiftingResult {
    bool applicable = false; // multiplication by |G| invertible on M
    bool ok = false;
    int audited = 0;         // submodules that were R-direct summands
    std::string detail;
};

/// For every submodule that is an R-direct summand (purity test), exhibits
/// the averaged projection and the resulting action-level complement.
AveragedLiftingResult averaged_lifting_check(const GSetModule& ms,
                                             const std::vector<GSetSubmodule>& lattice,
                                             const Caps& caps = {});

} // namespace gsm
