#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "gsm/gset_module.hpp"
#include "oracles.hpp"

using namespace gsm;

namespace {

GSetModule z3c2_regular() {
    auto c2 = preset_group(GroupPreset::cyclic, 2);
    auto reg = preset_gset(c2, GSetPreset{GSetPresetKind::regular, {}, 0});
    return make_gset_module(make_module(3, {3}), reg);
}

GSetModule z2c2_regular() {
    auto c2 = preset_group(GroupPreset::cyclic, 2);
    auto reg = preset_gset(c2, GSetPreset{GSetPresetKind::regular, {}, 0});
    return make_gset_module(make_module(2, {2}), reg);
}

GSetModule coset_module_d6(int modulus) {
    auto d6 = preset_group(GroupPreset::dihedral, 3);
    Subgroup eb{d6, {0, 3}};
    auto s = preset_gset(d6, GSetPreset{GSetPresetKind::right_cosets, eb, 0});
    return make_gset_module(make_module(modulus, {modulus}), s);
}

} // namespace

TEST_CASE("ring action transports coefficients along the action") {
    auto ms = coset_module_d6(3);
    auto d6 = ms.gset->group;
    Code one_k1 = ms.single(1, 0);
    Code one_k2 = ms.single(1, 1);
    CHECK(ms.act(one_k1, 1) == one_k2); // K1.a = K2

    auto a_term = rg_term(d6, 3, 1, 1);
    CHECK(group_ring_action(ms, a_term, one_k1) == one_k2);

    for (Code mu = 0; mu < ms.size(); ++mu)
        CHECK(group_ring_action(ms, rg_one(d6, 3), mu) == mu);

    auto e_plus_b = rg_add(rg_one(d6, 3), rg_term(d6, 3, 1, 3));
    Code expected = ms.add(ms.single(1, 1), ms.single(1, 2)); // K2 + K3
    CHECK(group_ring_action(ms, e_plus_b, one_k2) == expected);
}

TEST_CASE("the paper-style coefficient rows for the coset action") {
    // coefficient of mu.rho at each coset, probed on all 18 single-term pairs
    auto ms = coset_module_d6(3);
    auto d6 = ms.gset->group;
    // expected source (g, K) pairs contributing to K1, K2, K3 respectively
    std::vector<std::vector<std::pair<int, int>>> rows = {
        {{0, 0}, {3, 0}, {2, 1}, {4, 1}, {1, 2}, {5, 2}},
        {{1, 0}, {4, 0}, {0, 1}, {5, 1}, {2, 2}, {3, 2}},
        {{2, 0}, {5, 0}, {1, 1}, {3, 1}, {0, 2}, {4, 2}},
    };
    for (int target = 0; target < 3; ++target)
        for (int g = 0; g < 6; ++g)
            for (int k = 0; k < 3; ++k) {
                Code image = ms.act_rg(ms.single(1, k), rg_term(d6, 3, 1, g));
                bool contributes = ms.coeff(image, target) == 1;
                bool expected = std::find(rows[target].begin(), rows[target].end(),
                                          std::make_pair(g, k)) != rows[target].end();
                CHECK(contributes == expected);
            }
}

TEST_CASE("coefficient-sum map on formal sums") {
    auto ms = coset_module_d6(3);
    Code mu = ms.add(ms.single(1, 0), ms.single(2, 1));
    CHECK(ms.augment(mu) == 0); // 1 + 2 mod 3
    for (int s = 0; s < 3; ++s) CHECK(ms.augment(ms.single(2, s)) == 2);
    Code diff = ms.add(ms.single(2, 0), ms.neg(ms.single(2, 2)));
    CHECK(ms.augment(diff) == 0);
}

TEST_CASE("element printing and parsing") {
    auto ms = z3c2_regular();
    Code mu = ms.add(ms.single(1, 0), ms.single(2, 1));
    CHECK(ms_to_string(ms, mu) == "(1)*e + (2)*a");
    CHECK(ms_parse(ms, ms_to_string(ms, mu)) == mu);
    for (Code c = 0; c < ms.size(); ++c) CHECK(ms_parse(ms, ms_to_string(ms, c)) == c);

    auto decoded = ms_decode(ms, mu);
    CHECK(decoded.coeffs == std::vector<std::vector<int>>{{1}, {2}});
    CHECK(ms_encode(ms, decoded) == mu);

    auto other = coset_module_d6(3);
    CHECK_THROWS_AS(ms_encode(other, decoded), Error);
}

TEST_CASE("generated submodules") {
    auto ms = z3c2_regular();
    auto zero = generated_submodule(ms, {});
    CHECK(zero.elements == std::vector<Code>{0});

    Code one_plus_a = ms.add(ms.single(1, 0), ms.single(1, 1));
    auto diag = generated_submodule(ms, {one_plus_a});
    CHECK(diag.elements == std::vector<Code>{0, 4, 8}); // 0, 1+a, 2+2a
    CHECK(verify_submodule_closed(ms, diag));

    auto whole = generated_submodule(ms, {ms.single(1, 0)});
    CHECK(whole.elements.size() == 9);
}

TEST_CASE("submodule lattices") {
    auto ms3 = z3c2_regular();
    auto lattice3 = enumerate_submodules(ms3);
    REQUIRE(lattice3.size() == 4);
    CHECK(lattice3[0].elements == std::vector<Code>{0});
    CHECK(lattice3[1].elements == std::vector<Code>{0, 4, 8}); // {0, 1+a, 2+2a}
    CHECK(lattice3[2].elements == std::vector<Code>{0, 5, 7}); // {0, 1+2a, 2+a}
    CHECK(lattice3[3].elements.size() == 9);
    auto simple3 = flag_simple(lattice3);
    CHECK(simple3 == std::vector<bool>{false, true, true, false});

    auto ms2 = z2c2_regular();
    auto lattice2 = enumerate_submodules(ms2);
    REQUIRE(lattice2.size() == 3);
    CHECK(lattice2[1].elements == std::vector<Code>{0, 3}); // {0, 1+a}

    auto c2 = preset_group(GroupPreset::cyclic, 2);
    auto point = preset_gset(c2, GSetPreset{GSetPresetKind::trivial, {}, 1});
    auto zero_ms = make_gset_module(make_module(3, {}), point);
    CHECK(enumerate_submodules(zero_ms).size() == 1);
}

TEST_CASE("delta sets match the direct definition") {
    auto instances = std::vector<GSetModule>{};
    instances.push_back(z3c2_regular());
    instances.push_back(z2c2_regular());
    {
        auto c2 = preset_group(GroupPreset::cyclic, 2);
        auto triv = preset_gset(c2, GSetPreset{GSetPresetKind::trivial, {}, 2});
        instances.push_back(make_gset_module(make_module(3, {3}), triv));
    }
    for (const auto& ms : instances) {
        for (const auto& h : enumerate_subgroups(ms.gset->group)) {
            auto span = delta_submodule(ms, h);
            auto direct = oracle::delta_set_direct(ms, h);
            CHECK(span.elements == direct);
        }
    }
}

TEST_CASE("delta examples") {
    auto ms = z3c2_regular();
    auto c2 = ms.gset->group;
    Subgroup trivial{c2, {0}};
    CHECK(delta_submodule(ms, trivial).elements == std::vector<Code>{0});

    Subgroup whole{c2, {0, 1}};
    auto delta = delta_submodule(ms, whole);
    CHECK(delta.elements == std::vector<Code>{0, 5, 7}); // {0, 1+2a, 2+a}
    auto e = subgroup_idempotent(whole, 3);
    auto complement = image_submodule(ms, rg_sub(rg_one(c2, 3), e));
    CHECK(delta.elements == complement.elements);
    CHECK(delta.g_closed);

    // trivial two-point action: delta vanishes but the kernel does not
    auto triv = preset_gset(c2, GSetPreset{GSetPresetKind::trivial, {}, 2});
    auto tms = make_gset_module(make_module(3, {3}), triv);
    Subgroup whole_t{c2, {0, 1}};
    auto tdelta = delta_submodule(tms, whole_t);
    CHECK(tdelta.elements == std::vector<Code>{0});
    auto kernel = augmentation_kernel(tms);
    CHECK(kernel.elements.size() == 3);
}

TEST_CASE("idempotent splitting of the regular module over Z3") {
    auto ms = z3c2_regular();
    Subgroup whole{ms.gset->group, {0, 1}};
    auto witness = idempotent_split(ms, whole);
    CHECK(rg_to_string(witness.idempotent) == "2*e + 2*a");
    CHECK(witness.image.elements == std::vector<Code>{0, 4, 8});
    CHECK(witness.complement.elements == std::vector<Code>{0, 5, 7});
    CHECK(witness.quotient_space.size() == 3); // single H-orbit, so M(S/H) = Z3
    REQUIRE(witness.iso.has_value());
    CHECK(witness.iso->injective);
    CHECK(witness.iso->surjective);
    CHECK(witness.iso->rg_linear());

    Subgroup trivial{ms.gset->group, {0}};
    auto idw = idempotent_split(ms, trivial);
    CHECK(idw.image.elements.size() == 9);
    CHECK(idw.complement.elements == std::vector<Code>{0});
}

TEST_CASE("idempotent splitting of the coset module over Z2") {
    auto d6 = preset_group(GroupPreset::dihedral, 3);
    Subgroup eb{d6, {0, 3}};
    auto s = preset_gset(d6, GSetPreset{GSetPresetKind::right_cosets, eb, 0});
    auto ms = make_gset_module(make_module(2, {2}), s);
    Subgroup c3{d6, {0, 1, 2}};
    auto witness = idempotent_split(ms, c3);
    CHECK(witness.image.elements.size() == 2);
    CHECK(witness.complement.elements.size() == 4);
    CHECK(witness.quotient.quotient_set->size() == 1);
    REQUIRE(witness.iso.has_value());

    CHECK_THROWS_AS(idempotent_split(ms, eb), Error); // not normal

    auto ms3 = coset_module_d6(3);
    CHECK_THROWS_AS(idempotent_split(ms3, c3), Error); // gcd(3,3) != 1
}

TEST_CASE("orbit direct sum") {
    auto ms = coset_module_d6(3);
    auto single = orbit_direct_sum_check(ms);
    CHECK(single.ok);
    CHECK(single.component_maps.size() == 1);

    // regular orbit plus a fixed point
    auto c2 = preset_group(GroupPreset::cyclic, 2);
    auto s = build_gset(c2, {"p", "q", "r"}, {{0, 1, 2}, {1, 0, 2}});
    auto mixed = make_gset_module(make_module(3, {3}), s);
    CHECK(mixed.size() == 27);
    auto res = orbit_direct_sum_check(mixed);
    CHECK(res.ok);
    REQUIRE(res.component_maps.size() == 2);
    CHECK(res.component_maps[0].domain_size == 9);

    auto triv = preset_gset(c2, GSetPreset{GSetPresetKind::trivial, {}, 2});
    auto tms = make_gset_module(make_module(2, {2}), triv);
    auto tres = orbit_direct_sum_check(tms);
    CHECK(tres.ok);
    REQUIRE(tres.component_maps.size() == 2);
    for (const auto& theta : tres.component_maps) {
        std::uint64_t kernel = std::count(theta.table.begin(), theta.table.end(), Code{0});
        CHECK(kernel == 2);
    }
}

TEST_CASE("quotient transport") {
    auto c2 = preset_group(GroupPreset::cyclic, 2);
    auto reg = preset_gset(c2, GSetPreset{GSetPresetKind::regular, {}, 0});
    auto z4 = make_module(4, {4});
    auto lattice = enumerate_submodules(z4);
    REQUIRE(lattice.size() == 3);

    auto zero_case = quotient_iso_check(z4, lattice[0], reg);
    CHECK(zero_case.ok);
    CHECK(zero_case.theta.injective);

    auto full_case = quotient_iso_check(z4, lattice[2], reg);
    CHECK(full_case.ok);
    CHECK(full_case.theta.codomain_size == 1);

    auto mid = quotient_iso_check(z4, lattice[1], reg);
    CHECK(mid.ok);
    CHECK(mid.theta.domain_size == 16);
    CHECK(mid.theta.codomain_size == 4);
}

TEST_CASE("sum and intersection transfer") {
    auto c2 = preset_group(GroupPreset::cyclic, 2);
    auto reg = preset_gset(c2, GSetPreset{GSetPresetKind::regular, {}, 0});
    auto z6 = make_module(6, {6});
    auto lattice = enumerate_submodules(z6); // 0, {0,3}, {0,2,4}, Z6
    REQUIRE(lattice.size() == 4);

    auto res = sum_intersection_lemma_check(z6, lattice[2], lattice[1], reg);
    CHECK(res.sum_ms);
    CHECK(res.sum_m);
    CHECK(res.intersection_ms_zero);
    CHECK(res.intersection_m_zero);
    CHECK(res.sum_biconditional);
    CHECK(res.intersection_biconditional);

    auto triv = sum_intersection_lemma_check(z6, lattice[3], lattice[0], reg);
    CHECK(triv.sum_biconditional);
    CHECK(triv.intersection_biconditional);

    auto proper = sum_intersection_lemma_check(z6, lattice[1], lattice[1], reg);
    CHECK_FALSE(proper.sum_ms);
    CHECK_FALSE(proper.sum_m);
    CHECK(proper.sum_biconditional);
    CHECK(proper.intersection_biconditional);
}

TEST_CASE("orbit-coefficient minimality") {
    auto c2 = preset_group(GroupPreset::cyclic, 2);
    auto reg = preset_gset(c2, GSetPreset{GSetPresetKind::regular, {}, 0});
    auto z3 = make_module(3, {3});
    auto lattice = enumerate_submodules(z3);
    auto res = ngs_minimality_check(z3, lattice[1], reg, 0);
    CHECK(res.ok);
    auto zero = ngs_minimality_check(z3, lattice[0], reg, 0);
    CHECK(zero.ok);

    auto point = preset_gset(c2, GSetPreset{GSetPresetKind::trivial, {}, 1});
    auto z2 = make_module(2, {2});
    auto l2 = enumerate_submodules(z2);
    CHECK(ngs_minimality_check(z2, l2[1], point, 0).ok);
}

TEST_CASE("direct sums of coefficient modules commute with formal sums") {
    auto c2 = preset_group(GroupPreset::cyclic, 2);
    auto reg = preset_gset(c2, GSetPreset{GSetPresetKind::regular, {}, 0});

    auto z2 = make_module(2, {2});
    auto zero = make_module(2, {});
    auto with_zero = direct_sum_commutes_check(z2, zero, reg);
    CHECK(with_zero.ok);

    auto both = direct_sum_commutes_check(z2, z2, reg);
    CHECK(both.ok);
    CHECK(both.shuffle.domain_size == 16);

    auto m1 = make_module(6, {2});
    auto m2 = make_module(6, {3});
    auto mixed = direct_sum_commutes_check(m1, m2, reg);
    CHECK(mixed.ok);
    CHECK(mixed.shuffle.domain_size == 36);
}

TEST_CASE("semisimplicity of formal-sum modules") {
    auto ms3 = z3c2_regular();
    auto res3 = is_semisimple(ms3, enumerate_submodules(ms3));
    CHECK(res3.semisimple);

    auto ms2 = z2c2_regular();
    auto lattice2 = enumerate_submodules(ms2);
    auto res2 = is_semisimple(ms2, lattice2);
    CHECK_FALSE(res2.semisimple);
    CHECK(lattice2[static_cast<size_t>(res2.failing_submodule)].elements ==
          std::vector<Code>{0, 3}); // {0, 1+a}

    auto c2 = preset_group(GroupPreset::cyclic, 2);
    auto point = preset_gset(c2, GSetPreset{GSetPresetKind::trivial, {}, 1});
    auto tms = make_gset_module(make_module(3, {3}), point);
    CHECK(is_semisimple(tms, enumerate_submodules(tms)).semisimple);
}

TEST_CASE("the coefficient-side criterion") {
    auto c2 = preset_group(GroupPreset::cyclic, 2);
    CHECK(maschke_criterion(make_module(3, {3}), *c2).holds);
    CHECK_FALSE(maschke_criterion(make_module(2, {2}), *c2).holds);
    auto z6 = maschke_criterion(make_module(6, {6}), *c2);
    CHECK_FALSE(z6.holds);
    CHECK(z6.module_semisimple);
    CHECK_FALSE(z6.order_invertible);
}

TEST_CASE("simple factorization search") {
    auto ms = z3c2_regular();
    auto lattice = enumerate_submodules(ms);
    auto m_lattice = enumerate_submodules(ms.module);

    auto comp = simple_factorization(ms, lattice[1], m_lattice); // {0, 1+a, 2+2a}
    CHECK(comp.status == SimpleFactorization::Status::no_factorization);
    CHECK(comp.carrier == std::vector<int>{0, 1});
    CHECK(comp.carrier_is_union_of_orbits);
    CHECK(comp.coefficients_uniform);
    CHECK(comp.coefficient_module == std::vector<Code>{0, 1, 2}); // L_s = Z3

    auto whole = simple_factorization(ms, lattice[3], m_lattice);
    CHECK(whole.status == SimpleFactorization::Status::not_simple);

    // a fixed point: M itself factors as N.Gs over the one-point orbit
    auto c2 = ms.gset->group;
    auto point = preset_gset(c2, GSetPreset{GSetPresetKind::trivial, {}, 1});
    auto tms = make_gset_module(make_module(3, {3}), point);
    auto tlattice = enumerate_submodules(tms);
    REQUIRE(tlattice.size() == 2);
    auto t = simple_factorization(tms, tlattice[1], enumerate_submodules(tms.module));
    CHECK(t.status == SimpleFactorization::Status::factored);
    CHECK(t.match_count == 1);
}

TEST_CASE("minimal submodules and the socle") {
    auto ms3 = z3c2_regular();
    auto mins3 = minimal_submodules(ms3);
    REQUIRE(mins3.size() == 2);
    CHECK(mins3[0].elements == std::vector<Code>{0, 4, 8});
    CHECK(mins3[1].elements == std::vector<Code>{0, 5, 7});
    CHECK(socle_submodule(ms3).elements.size() == 9);
    CHECK_FALSE(semisimplicity_obstruction(ms3).has_value());

    auto ms2 = z2c2_regular();
    auto mins2 = minimal_submodules(ms2);
    REQUIRE(mins2.size() == 1);
    CHECK(mins2[0].elements == std::vector<Code>{0, 3}); // {0, 1+a}
    auto obstruction = semisimplicity_obstruction(ms2);
    REQUIRE(obstruction.has_value());
    CHECK(*obstruction == std::vector<Code>{0, 3});
}

TEST_CASE("averaged lifting of coefficient-level summands") {
    auto ms = z3c2_regular();
    auto res = averaged_lifting_check(ms, enumerate_submodules(ms));
    CHECK(res.applicable);
    CHECK(res.ok);
    CHECK(res.audited == 4); // Z3-side: every submodule of Z3C2 is a summand

    auto ms2 = z2c2_regular();
    auto res2 = averaged_lifting_check(ms2, enumerate_submodules(ms2));
    CHECK_FALSE(res2.applicable);

    // Z4 coefficients with C3: |G| = 3 invertible, M not semisimple
    auto c3 = preset_group(GroupPreset::cyclic, 3);
    auto reg3 = preset_gset(c3, GSetPreset{GSetPresetKind::regular, {}, 0});
    auto z4ms = make_gset_module(make_module(4, {4}), reg3);
    auto res4 = averaged_lifting_check(z4ms, enumerate_submodules(z4ms));
    CHECK(res4.applicable);
    CHECK(res4.ok);
}

TEST_CASE("action axioms hold on sampled instances") {
    for (auto ms : {z3c2_regular(), z2c2_regular(), coset_module_d6(2)}) {
        auto g = ms.gset->group;
        const int n = ms.modulus();
        for (int r1 = 0; r1 < n; ++r1)
            for (int g1 = 0; g1 < g->order; ++g1)
                for (int r2 = 0; r2 < n; ++r2)
                    for (int g2 = 0; g2 < g->order; ++g2) {
                        auto rho = rg_term(g, n, r1, g1);
                        auto sigma = rg_term(g, n, r2, g2);
                        auto prod = rg_multiply(rho, sigma);
                        for (Code mu = 0; mu < ms.size(); ++mu) {
                            CHECK(ms.act_rg(mu, prod) ==
                                  ms.act_rg(ms.act_rg(mu, rho), sigma));
                        }
                    }
    }
}
