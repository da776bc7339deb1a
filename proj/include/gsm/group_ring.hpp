#pragma once

#include <string>
#include <vector>

#include "gsm/group.hpp"
#include "gsm/module.hpp"

namespace gsm {

/// An element of Z_n[G]: one residue per group element.
struct GroupRingElement {
    GroupPtr group;
    int modulus = 2;
    std::vector<int> coeffs; // coeffs[g] in [0, n)

    bool is_zero() const;
};

GroupRingElement rg_zero(const GroupPtr& group, int modulus);
GroupRingElement rg_one(const GroupPtr& group, int modulus);
/// Single term r*g.
GroupRingElement rg_term(const GroupPtr& group, int modulus, int r, int g);

GroupRingElement rg_add(const GroupRingElement& a, const GroupRingElement& b);
GroupRingElement rg_sub(const GroupRingElement& a, const GroupRingElement& b);
GroupRingElement rg_scalar(int r, const GroupRingElement& a);
/// Convolution: coefficient of k is the sum of a_g * b_h over g*h = k.
GroupRingElement rg_multiply(const GroupRingElement& a, const GroupRingElement& b);
bool rg_equal(const GroupRingElement& a, const GroupRingElement& b);

/// Coefficient sum mod n; a ring homomorphism.
int augmentation(const GroupRingElement& a);

/// Sum of the subgroup's elements; satisfies hat*hat = |H|*hat.
GroupRingElement subgroup_sum(const Subgroup& subgroup, int modulus);

/// |H|^-1 * subgroup_sum(H); an idempotent. Requires gcd(|H|, n) = 1.
/// Central in RG exactly when H is normal.
GroupRingElement subgroup_idempotent(const Subgroup& subgroup, int modulus);

/// A two-sided ideal given by generators plus its full enumeration.
struct RGIdeal {
    GroupPtr group;
    int modulus = 2;
    std::vector<GroupRingElement> generators;
    std::vector<Code> elements; // sorted codes in the n-adic coefficient packing
};

Code rg_code(const GroupRingElement& a);
GroupRingElement rg_from_code(const GroupPtr& group, int modulus, Code c);

/// Without N: the kernel of the coefficient-sum map, generated by {g - 1}.
/// With normal N: the kernel of the projection onto Z_n[G/N], generated by
/// {v - 1 : v in N}. Enumerates the ideal and verifies it equals the kernel.
RGIdeal augmentation_ideal(const GroupPtr& group, int modulus, const Caps& caps = {});
RGIdeal augmentation_ideal(const GroupPtr& group, int modulus, const Subgroup& normal_subgroup,
                           const Caps& caps = {});

std::string rg_to_string(const GroupRingElement& a);
GroupRingElement rg_parse(const GroupPtr& group, int modulus, const std::string& text);

} // namespace gsm
