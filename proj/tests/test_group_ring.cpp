#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "gsm/group_ring.hpp"

using namespace gsm;

namespace {

GroupRingElement z3c2(const GroupPtr& c2, int e_coeff, int a_coeff) {
    auto x = rg_zero(c2, 3);
    x.coeffs = {e_coeff, a_coeff};
    return x;
}

} // namespace

TEST_CASE("convolution in Z3C2") {
    auto c2 = preset_group(GroupPreset::cyclic, 2);
    auto one_plus_a = z3c2(c2, 1, 1);
    auto one_minus_a = z3c2(c2, 1, 2);

    CHECK(rg_multiply(one_plus_a, one_minus_a).is_zero()); // 1 - a^2 = 0
    CHECK(rg_equal(rg_multiply(one_plus_a, one_plus_a), z3c2(c2, 2, 2)));

    auto rho = z3c2(c2, 2, 1);
    CHECK(rg_equal(rg_multiply(rg_one(c2, 3), rho), rho));
    CHECK(rg_equal(rg_multiply(rho, rg_one(c2, 3)), rho));
}

TEST_CASE("mixed parents are rejected") {
    auto c2 = preset_group(GroupPreset::cyclic, 2);
    auto c3 = preset_group(GroupPreset::cyclic, 3);
    CHECK_THROWS_AS(rg_add(rg_one(c2, 3), rg_one(c3, 3)), Error);
    CHECK_THROWS_AS(rg_add(rg_one(c2, 3), rg_one(c2, 2)), Error);
}

TEST_CASE("coefficient-sum map") {
    auto c2 = preset_group(GroupPreset::cyclic, 2);
    CHECK(augmentation(z3c2(c2, 1, 1)) == 2);
    CHECK(augmentation(rg_zero(c2, 3)) == 0);
    auto sq = rg_multiply(z3c2(c2, 1, 1), z3c2(c2, 1, 1));
    CHECK(augmentation(sq) == 1); // (1+1)^2 = 4 = 1 mod 3

    // multiplicative on every pair of Z3C2 (81 pairs)
    for (Code x = 0; x < 9; ++x)
        for (Code y = 0; y < 9; ++y) {
            auto a = rg_from_code(c2, 3, x);
            auto b = rg_from_code(c2, 3, y);
            CHECK(augmentation(rg_multiply(a, b)) ==
                  (augmentation(a) * augmentation(b)) % 3);
        }
}

TEST_CASE("subgroup sums") {
    auto c2 = preset_group(GroupPreset::cyclic, 2);
    Subgroup trivial{c2, {0}};
    CHECK(rg_equal(subgroup_sum(trivial, 3), rg_one(c2, 3)));

    Subgroup whole{c2, {0, 1}};
    auto hat = subgroup_sum(whole, 3);
    CHECK(rg_equal(hat, z3c2(c2, 1, 1)));
    CHECK(rg_equal(rg_multiply(hat, hat), rg_scalar(2, hat)));

    auto d6 = preset_group(GroupPreset::dihedral, 3);
    Subgroup c3{d6, {0, 1, 2}};
    auto hat3 = subgroup_sum(c3, 2);
    auto sq = rg_multiply(hat3, hat3);
    CHECK(rg_equal(sq, hat3)); // 3*hat = hat mod 2
}

TEST_CASE("scaled idempotents") {
    auto c2 = preset_group(GroupPreset::cyclic, 2);
    Subgroup whole{c2, {0, 1}};
    auto e = subgroup_idempotent(whole, 3);
    CHECK(rg_equal(e, z3c2(c2, 2, 2))); // 2^-1 = 2 mod 3
    CHECK(rg_equal(rg_multiply(e, e), e));

    Subgroup trivial{c2, {0}};
    CHECK(rg_equal(subgroup_idempotent(trivial, 5), rg_one(c2, 5)));

    try {
        subgroup_idempotent(whole, 2);
        CHECK(false);
    } catch (const Error& err) {
        CHECK(err.code() == Errc::non_invertible_order);
    }
}

TEST_CASE("augmentation ideals") {
    auto c2 = preset_group(GroupPreset::cyclic, 2);
    auto d2 = augmentation_ideal(c2, 2);
    CHECK(d2.elements.size() == 2); // {0, 1+a}
    auto d3 = augmentation_ideal(c2, 3);
    CHECK(d3.elements.size() == 3);
    // codes of 0, 1+2a, 2+a in the 3-adic packing
    std::vector<Code> expected = {0, rg_code(z3c2(c2, 1, 2)), rg_code(z3c2(c2, 2, 1))};
    std::sort(expected.begin(), expected.end());
    CHECK(d3.elements == expected);

    Subgroup trivial{c2, {0}};
    auto zero_ideal = augmentation_ideal(c2, 3, trivial);
    CHECK(zero_ideal.elements == std::vector<Code>{0});

    Subgroup whole{c2, {0, 1}};
    auto full = augmentation_ideal(c2, 3, whole);
    CHECK(full.elements == d3.elements); // N = G gives the whole kernel

    auto d6 = preset_group(GroupPreset::dihedral, 3);
    Subgroup eb{d6, {0, 3}};
    CHECK_THROWS_AS(augmentation_ideal(d6, 2, eb), Error);
}

TEST_CASE("printing and parsing") {
    auto c2 = preset_group(GroupPreset::cyclic, 2);
    auto rho = z3c2(c2, 2, 1);
    CHECK(rg_to_string(rho) == "2*e + 1*a");
    CHECK(rg_equal(rg_parse(c2, 3, "2*e + 1*a"), rho));
    CHECK(rg_equal(rg_parse(c2, 3, rg_to_string(rho)), rho));
    CHECK_THROWS_AS(rg_parse(c2, 3, "2*q"), Error);
}
