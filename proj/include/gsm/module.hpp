#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gsm/caps.hpp"
#include "gsm/error.hpp"

namespace gsm {

using Code = std::uint64_t;

struct CoefficientRing {
    int modulus = 2; // n >= 2

    int add(int a, int b) const { return (a + b) % modulus; }
    int mul(int a, int b) const { return (a * b) % modulus; }
    int neg(int a) const { return (modulus - a) % modulus; }
};

/// M = Z_{d1} + ... + Z_{dk} over Z_n with every d_i | n. Elements are
/// residue tuples, packed as mixed-radix codes (first factor most
/// significant, so code order = lexicographic tuple order).
struct FiniteModule {
    CoefficientRing ring;
    std::vector<int> factors;

    std::uint64_t size_ = 1;
    std::vector<std::uint64_t> weights; // weights[i] = prod of factors after i

    std::uint64_t size() const { return size_; }
    int rank() const { return static_cast<int>(factors.size()); }

    std::vector<int> decode(Code c) const;
    Code encode(const std::vector<int>& residues) const;
    Code add(Code a, Code b) const;
    Code neg(Code a) const;
    Code scalar(int r, Code a) const;
    /// Additive order of the element.
    int order_of(Code a) const;
    /// lcm of the factors (the exponent of the additive group).
    int exponent() const;

    bool same_shape(const FiniteModule& other) const {
        return ring.modulus == other.ring.modulus && factors == other.factors;
    }
};

FiniteModule make_module(int modulus, std::vector<int> factors);

struct ModuleElement {
    FiniteModule module;
    std::vector<int> residues;
};

ModuleElement make_element(const FiniteModule& m, std::vector<int> residues);
ModuleElement element_add(const ModuleElement& a, const ModuleElement& b);
ModuleElement element_negate(const ModuleElement& a);
ModuleElement element_scalar(int r, const ModuleElement& a);

/// A fully enumerated submodule (additive subgroups of M are exactly the
/// Z_n-submodules, since scalars act by repeated addition).
struct SubmoduleOfM {
    std::vector<Code> elements;   // sorted
    std::vector<Code> generators; // minimal known generating set

    std::uint64_t size() const { return elements.size(); }
    bool contains(Code c) const;
};

/// Shared machinery: a finite abelian group presented as codes [0,size)
/// with an addition law, plus optional additive endomorphisms the closure
/// must respect (group actions, ring multiplications).
struct CodeGroup {
    std::uint64_t size = 1;
    std::function<Code(Code, Code)> add;
    std::vector<std::function<Code(Code)>> endos;
};

/// Smallest subset containing gens, closed under addition and all endos.
/// Returns sorted codes. Caller enforces caps before the call.
std::vector<Code> closed_span(const CodeGroup& group, const std::vector<Code>& gens);

/// Extends an already-closed sorted set by extra generators.
std::vector<Code> extend_span(const CodeGroup& group, const std::vector<Code>& base,
                              const std::vector<Code>& extra);

/// All closed subsets (submodule lattice), sorted by size then lexicographic
/// element list.
std::vector<SubmoduleOfM> enumerate_spans(const CodeGroup& group, std::uint64_t cap);

/// Cyclic decomposition of a finite abelian group given by enumerated codes:
/// returns generators whose cyclic subgroups sum directly to the whole.
/// Orders are prime powers grouped by primary component.
struct AbelianBasis {
    std::vector<Code> generators;
    std::vector<int> orders;
};
AbelianBasis abelian_basis(const CodeGroup& group, const std::vector<Code>& elements);

std::vector<SubmoduleOfM> enumerate_submodules(const FiniteModule& m, const Caps& caps = {});

struct SemisimplicityResult {
    bool semisimple = false;
    bool closed_form = false; // every d_i squarefree
    /// complement index per submodule index when semisimple
    std::vector<int> complement_of;
    int failing_submodule = -1; // index into the lattice when not semisimple
};

/// Brute force: every submodule has a complement in the enumerated lattice.
SemisimplicityResult is_semisimple_module(const FiniteModule& m, const Caps& caps = {});

struct InvertibilityResult {
    bool invertible = false;
    bool closed_form = false; // gcd(k, d_i) = 1 for all i
    Code collision_a = 0, collision_b = 0; // witness when not injective
};

/// True iff x -> k*x is a bijection on M.
InvertibilityResult mult_by_k_invertible(const FiniteModule& m, int k);

struct QuotientModule {
    FiniteModule module;            // M/N with invariant factors dividing n
    std::vector<Code> projection;   // M-code -> quotient code; a homomorphism
};

QuotientModule quotient_module(const FiniteModule& m, const SubmoduleOfM& n,
                               const Caps& caps = {});

/// Closed form: gcd(d_i, n/d_i) = 1 for all i.
bool is_projective_over_zn(const FiniteModule& m);

struct ProjectivityWitness {
    bool projective = false;
    int free_rank = 0;                 // M embeds as a summand of Z_n^rank
    std::vector<Code> image;           // the summand, as codes of Z_n^rank
    std::vector<Code> complement;      // a complementary submodule
};

/// Exhaustive summand-of-free search, for cross-checking the closed form at
/// tiny scale. nullopt when the search space exceeds the cap.
std::optional<ProjectivityWitness> projective_summand_search(const FiniteModule& m,
                                                             const Caps& caps = {});

/// True iff the subgroup given by sorted codes is pure in M's code group:
/// X n kA = kX for every k. For bounded groups purity is equivalent to
/// being a direct summand.
bool is_pure_subgroup(const CodeGroup& group, int exponent, const std::vector<Code>& sub);

int gcd_int(int a, int b);
/// Inverse of k modulo m; nullopt when gcd(k, m) != 1.
std::optional<int> mod_inverse(int k, int m);

} // namespace gsm
