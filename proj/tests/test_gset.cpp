#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "gsm/gset.hpp"
#include "gsm/serialize.hpp"

using namespace gsm;

namespace {

GSetPtr coset_set_d6() {
    auto d6 = preset_group(GroupPreset::dihedral, 3);
    Subgroup eb{d6, {0, 3}};
    return preset_gset(d6, GSetPreset{GSetPresetKind::right_cosets, eb, 0});
}

} // namespace

TEST_CASE("action table validation") {
    auto c2 = preset_group(GroupPreset::cyclic, 2);

    auto fixed = build_gset(c2, {"p"}, {{0}, {0}});
    CHECK(fixed->size() == 1);

    auto swap2 = build_gset(c2, {"p", "q"}, {{0, 1}, {1, 0}});
    CHECK(swap2->apply(0, 1) == 1);

    try {
        build_gset(c2, {"p", "q"}, {{0, 1}, {0, 0}});
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::not_permutation);
    }

    try {
        build_gset(c2, {"p", "q"}, {{1, 0}, {0, 1}});
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::identity_not_trivial);
    }

    auto c3 = preset_group(GroupPreset::cyclic, 3);
    try {
        build_gset(c3, {"p", "q"}, {{0, 1}, {1, 0}, {1, 0}});
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::not_compatible);
    }
}

TEST_CASE("regular preset") {
    auto c2 = preset_group(GroupPreset::cyclic, 2);
    auto reg = preset_gset(c2, GSetPreset{GSetPresetKind::regular, {}, 0});
    CHECK(reg->size() == 2);
    CHECK(reg->apply(0, 1) == 1);
    CHECK(reg->apply(1, 1) == 0);
}

TEST_CASE("coset action of dihedral 3 on {e,b}") {
    auto s = coset_set_d6();
    REQUIRE(s->size() == 3);
    // rows by group element e,a,a2,b,ba,ba2; columns K1,K2,K3
    std::vector<std::vector<int>> expected = {
        {0, 1, 2}, // 1
        {1, 2, 0}, // a
        {2, 0, 1}, // a2
        {0, 2, 1}, // b
        {1, 0, 2}, // ba
        {2, 1, 0}, // ba2
    };
    CHECK(s->act == expected);
}

TEST_CASE("conjugation preset acts on the full subgroup list") {
    auto d6 = preset_group(GroupPreset::dihedral, 3);
    auto s = preset_gset(d6, GSetPreset{GSetPresetKind::conjugation_on_subgroups, {}, 0});
    CHECK(s->size() == 6);
    auto os = orbits(*s);
    REQUIRE(os.size() == 4);
    CHECK(os[0].members.size() == 1); // {e}
    CHECK(os[1].members.size() == 3); // the three order-2 subgroups
    CHECK(os[2].members.size() == 1); // C3
    CHECK(os[3].members.size() == 1); // the whole group
}

TEST_CASE("the four-subgroup selection is not closed under conjugation") {
    // conjugating {e,b} by a yields {e,ba}, which the selection omits
    auto d6 = preset_group(GroupPreset::dihedral, 3);
    const int a = 1, b = 3;
    int conjugate = d6->conj(a, b); // a^-1 b a
    CHECK(d6->label(conjugate) != "b");
    CHECK(conjugate != d6->identity);
}

TEST_CASE("orbits") {
    auto s = coset_set_d6();
    auto os = orbits(*s);
    REQUIRE(os.size() == 1);
    CHECK(os[0].members == std::vector<int>{0, 1, 2});

    auto d6 = preset_group(GroupPreset::dihedral, 3);
    auto trivial3 = preset_gset(d6, GSetPreset{GSetPresetKind::trivial, {}, 3});
    CHECK(orbits(*trivial3).size() == 3);

    auto reg = preset_gset(d6, GSetPreset{GSetPresetKind::regular, {}, 0});
    auto ro = orbits(*reg);
    REQUIRE(ro.size() == 1);
    CHECK(ro[0].members.size() == 6);
}

TEST_CASE("stabilizers and orbit-stabilizer") {
    auto d6 = preset_group(GroupPreset::dihedral, 3);
    auto reg = preset_gset(d6, GSetPreset{GSetPresetKind::regular, {}, 0});
    CHECK(stabilizer(*reg, 2).members == std::vector<int>{0});

    auto s = coset_set_d6();
    CHECK(stabilizer(*s, 0).members == std::vector<int>{0, 3}); // {e, b}

    auto trivial2 = preset_gset(d6, GSetPreset{GSetPresetKind::trivial, {}, 2});
    CHECK(stabilizer(*trivial2, 1).order() == 6);

    for (const GSetPtr& gs : {reg, s, trivial2})
        for (int p = 0; p < gs->size(); ++p) {
            auto stab = stabilizer(*gs, p);
            std::set<int> orbit;
            for (int g = 0; g < d6->order; ++g) orbit.insert(gs->apply(p, g));
            CHECK(orbit.size() * stab.members.size() == static_cast<size_t>(d6->order));
        }
}

TEST_CASE("morphism classification") {
    auto d6 = preset_group(GroupPreset::dihedral, 3);
    auto reg = preset_gset(d6, GSetPreset{GSetPresetKind::regular, {}, 0});
    auto s = coset_set_d6();

    std::vector<int> identity(reg->size());
    for (size_t i = 0; i < identity.size(); ++i) identity[i] = static_cast<int>(i);
    auto id = check_gset_morphism(reg, reg, identity);
    CHECK(id.kind == GSetMorphism::Kind::bijective_equivariant);

    // g -> Hg is equivariant but not bijective
    std::vector<int> to_coset(reg->size());
    for (int g = 0; g < reg->size(); ++g) to_coset[g] = s->apply(0, g);
    auto proj = check_gset_morphism(reg, s, to_coset);
    CHECK(proj.kind == GSetMorphism::Kind::equivariant);

    std::vector<int> constant(reg->size(), 0);
    auto bad = check_gset_morphism(reg, reg, constant);
    CHECK(bad.kind == GSetMorphism::Kind::not_equivariant);
    CHECK(bad.witness_point >= 0);
}

TEST_CASE("quotient by subgroup orbits") {
    auto c2 = preset_group(GroupPreset::cyclic, 2);
    auto reg2 = preset_gset(c2, GSetPreset{GSetPresetKind::regular, {}, 0});
    Subgroup whole2{c2, {0, 1}};
    auto q1 = h_orbit_quotient(reg2, whole2);
    CHECK(q1.quotient_set->size() == 1);

    auto d6 = preset_group(GroupPreset::dihedral, 3);
    auto reg6 = preset_gset(d6, GSetPreset{GSetPresetKind::regular, {}, 0});
    Subgroup c3{d6, {0, 1, 2}};
    auto q2 = h_orbit_quotient(reg6, c3);
    CHECK(q2.quotient.group->order == 2);
    REQUIRE(q2.quotient_set->size() == 2);
    CHECK(q2.fibers[0] == std::vector<int>{0, 1, 2}); // {e, a, a2}
    CHECK(q2.fibers[1] == std::vector<int>{3, 4, 5}); // {b, ba, ba2}
    CHECK(q2.quotient_set->apply(0, 1) == 1);         // the nontrivial coset swaps
    CHECK(q2.projection.kind == GSetMorphism::Kind::equivariant);

    auto s = coset_set_d6();
    auto q3 = h_orbit_quotient(s, c3);
    CHECK(q3.quotient_set->size() == 1);

    Subgroup eb{d6, {0, 3}};
    CHECK_THROWS_AS(h_orbit_quotient(s, eb), Error);
}

TEST_CASE("gset serialization round-trips") {
    auto s = coset_set_d6();
    std::string text = gset_to_text(*s, "d6.group");
    auto file = gset_from_text(text, s->group);
    CHECK(file.group_file == "d6.group");
    CHECK(gset_to_text(*file.gset, "d6.group") == text);
}
