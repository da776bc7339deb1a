#include "gsm/checks.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <sstream>

namespace gsm {

namespace {

using nlohmann::json;

constexpr std::uint64_t kPairBudget = std::uint64_t(1) << 22;

std::string subgroup_text(const Group& g, const Subgroup& h) {
    std::string out = "{";
    for (size_t i = 0; i < h.members.size(); ++i) {
        if (i) out += ",";
        out += g.label(h.members[i]);
    }
    return out + "}";
}

json submodule_payload(const GSetModule& ms, const std::vector<Code>& elements,
                       size_t limit = 16) {
    json arr = json::array();
    for (size_t i = 0; i < elements.size() && i < limit; ++i)
        arr.push_back(ms_to_string(ms, elements[i]));
    if (elements.size() > limit) arr.push_back("... (" + std::to_string(elements.size()) +
                                               " elements)");
    return arr;
}

json coefficient_payload(const FiniteModule& m, const std::vector<Code>& elements) {
    json arr = json::array();
    for (Code c : elements) {
        auto residues = m.decode(c);
        std::string t = "(";
        for (size_t i = 0; i < residues.size(); ++i) {
            if (i) t += ",";
            t += std::to_string(residues[i]);
        }
        arr.push_back(t + ")");
    }
    return arr;
}

void pass(CheckReport& r) { r.verdict = Verdict::pass; }
void failed(CheckReport& r, json payload) {
    r.verdict = Verdict::fail;
    r.counterexample = std::move(payload);
}

// ---------------------------------------------------------------- checks

void check_action_axioms(InstanceContext& ctx, const CheckRequest&, CheckReport& r) {
    const auto& ms = ctx.ms();
    if (ms.size() > ctx.caps().ms_enum)
        fail(Errc::size_cap_exceeded, "|MS| exceeds cap");
    const int n = ms.modulus();
    const int order = ms.group_order();
    auto one = rg_one(ctx.group(), n);
    for (Code mu = 0; mu < ms.size(); ++mu)
        if (ms.act_rg(mu, one) != mu)
            return failed(r, {{"law", "unit"}, {"mu", ms_to_string(ms, mu)}});

    std::vector<Code> probes;
    std::uint64_t grid = static_cast<std::uint64_t>(n) * n * order * order;
    if (grid * ms.size() <= kPairBudget) {
        probes.resize(ms.size());
        std::iota(probes.begin(), probes.end(), Code{0});
    } else {
        probes = ms.unit_basis();
        probes.push_back(0);
    }
    for (int rc = 0; rc < n; ++rc)
        for (int g = 0; g < order; ++g) {
            auto rho = rg_term(ctx.group(), n, rc, g);
            for (int sc = 0; sc < n; ++sc)
                for (int h = 0; h < order; ++h) {
                    auto sigma = rg_term(ctx.group(), n, sc, h);
                    auto prod = rg_multiply(rho, sigma);
                    auto sum = rg_add(rho, sigma);
                    for (Code mu : probes) {
                        Code lhs = ms.act_rg(mu, prod);
                        Code rhs = ms.act_rg(ms.act_rg(mu, rho), sigma);
                        if (lhs != rhs)
                            return failed(r, {{"law", "associativity"},
                                              {"rho", rg_to_string(rho)},
                                              {"sigma", rg_to_string(sigma)},
                                              {"mu", ms_to_string(ms, mu)}});
                        Code dl = ms.act_rg(mu, sum);
                        Code dr = ms.add(ms.act_rg(mu, rho), ms.act_rg(mu, sigma));
                        if (dl != dr)
                            return failed(r, {{"law", "distributivity"},
                                              {"rho", rg_to_string(rho)},
                                              {"sigma", rg_to_string(sigma)},
                                              {"mu", ms_to_string(ms, mu)}});
                    }
                }
        }
    pass(r);
}

void check_augmentation_hom(InstanceContext& ctx, const CheckRequest&, CheckReport& r) {
    const auto& ms = ctx.ms();
    if (ms.size() > ctx.caps().ms_enum)
        fail(Errc::size_cap_exceeded, "|MS| exceeds cap");
    const int n = ms.modulus();
    const int order = ms.group_order();

    // multiplicative over the ring action, probed on single-term ring
    // elements against the whole space (bilinear in both arguments)
    for (int rc = 0; rc < n; ++rc)
        for (int g = 0; g < order; ++g) {
            auto rho = rg_term(ctx.group(), n, rc, g);
            int erho = augmentation(rho);
            for (Code mu = 0; mu < ms.size(); ++mu) {
                Code lhs = ms.augment(ms.act_rg(mu, rho));
                Code rhs = ms.mscalar(erho, ms.augment(mu));
                if (lhs != rhs)
                    return failed(r, {{"law", "multiplicative"},
                                      {"rho", rg_to_string(rho)},
                                      {"mu", ms_to_string(ms, mu)}});
            }
        }
    // additivity and R-linearity of the coefficient sum
    std::vector<Code> lefts;
    if (ms.size() * ms.size() <= kPairBudget) {
        lefts.resize(ms.size());
        std::iota(lefts.begin(), lefts.end(), Code{0});
    } else {
        lefts = ms.unit_basis();
    }
    for (Code a : lefts)
        for (Code b = 0; b < ms.size(); ++b)
            if (ms.augment(ms.add(a, b)) != ms.madd(ms.augment(a), ms.augment(b)))
                return failed(r, {{"law", "additive"},
                                  {"mu", ms_to_string(ms, a)},
                                  {"eta", ms_to_string(ms, b)}});
    for (int rc = 0; rc < n; ++rc)
        for (Code a = 0; a < ms.size(); ++a)
            if (ms.augment(ms.scalar(rc, a)) != ms.mscalar(rc, ms.augment(a)))
                return failed(r, {{"law", "scalar"}, {"r", rc}, {"mu", ms_to_string(ms, a)}});

    // ring level: single-term grid, plus full pairs when affordable
    for (int rc = 0; rc < n; ++rc)
        for (int g = 0; g < order; ++g)
            for (int sc = 0; sc < n; ++sc)
                for (int h = 0; h < order; ++h) {
                    auto rho = rg_term(ctx.group(), n, rc, g);
                    auto sigma = rg_term(ctx.group(), n, sc, h);
                    int lhs = augmentation(rg_multiply(rho, sigma));
                    int rhs = (augmentation(rho) * augmentation(sigma)) % n;
                    if (lhs != rhs)
                        return failed(r, {{"law", "ring-multiplicative"},
                                          {"rho", rg_to_string(rho)},
                                          {"sigma", rg_to_string(sigma)}});
                }
    pass(r);
}

void check_delta_subset_kernel(InstanceContext& ctx, const CheckRequest&, CheckReport& r) {
    const auto& ms = ctx.ms();
    const auto& kernel = ctx.kernel();
    for (const auto& h : ctx.subgroups()) {
        auto delta = delta_submodule(ms, h, ctx.caps());
        for (Code c : delta.elements)
            if (!kernel.contains(c))
                return failed(r, {{"H", subgroup_text(*ctx.group(), h)},
                                  {"element", ms_to_string(ms, c)},
                                  {"detail", "delta element with nonzero coefficient sum"}});
        if (is_normal(*ctx.group(), h) && !delta.g_closed)
            return failed(r, {{"H", subgroup_text(*ctx.group(), h)},
                              {"detail", "delta of a normal subgroup must be action-closed"}});
    }
    pass(r);
}

void check_delta_equals_kernel(InstanceContext& ctx, const CheckRequest&, CheckReport& r) {
    const auto& ms = ctx.ms();
    const auto& kernel = ctx.kernel();
    Subgroup whole = ctx.subgroups().back();
    auto delta = delta_submodule(ms, whole, ctx.caps());
    if (delta.elements == kernel.elements) return pass(r);
    for (Code c : kernel.elements)
        if (!delta.contains(c))
            return failed(r, {{"element", ms_to_string(ms, c)},
                              {"detail", "in ker(augmentation) but not in delta_G"},
                              {"delta_size", delta.elements.size()},
                              {"kernel_size", kernel.elements.size()}});
    failed(r, {{"detail", "delta_G strictly larger than the kernel"}});
}

void check_delta_equals_complement(InstanceContext& ctx, const CheckRequest&, CheckReport& r) {
    const auto& ms = ctx.ms();
    bool any = false;
    for (const auto& h : ctx.subgroups()) {
        if (gcd_int(h.order(), ms.modulus()) != 1) continue;
        any = true;
        auto delta = delta_submodule(ms, h, ctx.caps());
        auto e = subgroup_idempotent(h, ms.modulus());
        auto complement_idem = rg_sub(rg_one(ctx.group(), ms.modulus()), e);
        auto image = image_submodule(ms, complement_idem, ctx.caps(), {"(1-e_H).MS"});
        if (delta.elements != image.elements)
            return failed(r, {{"H", subgroup_text(*ctx.group(), h)},
                              {"delta_size", delta.elements.size()},
                              {"image_size", image.elements.size()},
                              {"delta", submodule_payload(ms, delta.elements)},
                              {"image", submodule_payload(ms, image.elements)}});
    }
    if (!any) fail(Errc::cap_exceeded, "no subgroup with order invertible in the ring");
    pass(r);
}

void check_idempotent_basic(InstanceContext& ctx, const CheckRequest&, CheckReport& r) {
    const int n = ctx.ms().modulus();
    for (const auto& h : ctx.subgroups()) {
        auto hat = subgroup_sum(h, n);
        auto sq = rg_multiply(hat, hat);
        auto scaled = rg_scalar(h.order(), hat);
        if (!rg_equal(sq, scaled))
            return failed(r, {{"H", subgroup_text(*ctx.group(), h)},
                              {"hat_squared", rg_to_string(sq)},
                              {"order_times_hat", rg_to_string(scaled)}});
        if (gcd_int(h.order(), n) == 1) {
            auto e = subgroup_idempotent(h, n);
            auto esq = rg_multiply(e, e);
            if (!rg_equal(esq, e))
                return failed(r, {{"H", subgroup_text(*ctx.group(), h)},
                                  {"e", rg_to_string(e)},
                                  {"e_squared", rg_to_string(esq)}});
        }
    }
    pass(r);
}

void check_idempotent_central(InstanceContext& ctx, const CheckRequest&, CheckReport& r) {
    const auto& ms = ctx.ms();
    const int n = ms.modulus();
    bool witness_needed = false, witness_found = false;
    json witness;
    for (const auto& h : ctx.subgroups()) {
        auto hat = subgroup_sum(h, n);
        bool normal = is_normal(*ctx.group(), h);
        int bad_g = -1;
        for (int g = 0; g < ctx.group()->order && bad_g < 0; ++g) {
            auto left = rg_multiply(rg_term(ctx.group(), n, 1, g), hat);
            auto right = rg_multiply(hat, rg_term(ctx.group(), n, 1, g));
            if (!rg_equal(left, right)) bad_g = g;
        }
        if (normal && bad_g >= 0)
            return failed(r, {{"H", subgroup_text(*ctx.group(), h)},
                              {"g", ctx.group()->label(bad_g)},
                              {"detail", "subgroup sum fails to commute for a normal subgroup"}});
        if (!normal) {
            witness_needed = true;
            if (bad_g >= 0 && !witness_found) {
                witness_found = true;
                witness = {{"H", subgroup_text(*ctx.group(), h)},
                           {"g", ctx.group()->label(bad_g)},
                           {"Hg", rg_to_string(rg_multiply(hat, rg_term(ctx.group(), n, 1, bad_g)))},
                           {"gH", rg_to_string(rg_multiply(rg_term(ctx.group(), n, 1, bad_g), hat))}};
            }
            if (bad_g < 0)
                return failed(r, {{"H", subgroup_text(*ctx.group(), h)},
                                  {"detail",
                                   "non-normal subgroup sum commutes with every element"}});
        }
        if (normal && gcd_int(h.order(), n) == 1) {
            if (ms.size() > ctx.caps().ms_enum)
                fail(Errc::size_cap_exceeded, "|MS| exceeds cap");
            auto e = subgroup_idempotent(h, n);
            for (Code mu = 0; mu < ms.size(); ++mu)
                for (int g = 0; g < ctx.group()->order; ++g) {
                    Code lhs = ms.act(ms.act_rg(mu, e), g);
                    Code rhs = ms.act_rg(ms.act(mu, g), e);
                    if (lhs != rhs)
                        return failed(r, {{"H", subgroup_text(*ctx.group(), h)},
                                          {"mu", ms_to_string(ms, mu)},
                                          {"g", ctx.group()->label(g)},
                                          {"detail", "idempotent does not commute with the action"}});
                }
        }
    }
    if (witness_needed && witness_found) r.counterexample = witness;
    pass(r);
}

void check_idempotent_split(InstanceContext& ctx, const CheckRequest& req, CheckReport& r) {
    const auto& ms = ctx.ms();
    std::vector<Subgroup> targets;
    auto it = req.params.find("H");
    if (it != req.params.end()) {
        targets.push_back(ctx.resolve_subgroup(it->second));
    } else {
        for (const auto& h : ctx.subgroups())
            if (is_normal(*ctx.group(), h) && gcd_int(h.order(), ms.modulus()) == 1)
                targets.push_back(h);
    }
    for (const auto& h : targets) {
        auto witness = idempotent_split(ms, h, ctx.caps());
        if (!witness.iso)
            return failed(r, {{"H", subgroup_text(*ctx.group(), h)},
                              {"detail", witness.iso_failure},
                              {"image", submodule_payload(ms, witness.image.elements)}});
        if (!witness.image.g_closed || !witness.complement.g_closed)
            return failed(r, {{"H", subgroup_text(*ctx.group(), h)},
                              {"detail", "idempotent components not action-closed"}});
    }
    pass(r);
}

void check_quotient_iso(InstanceContext& ctx, const CheckRequest&, CheckReport& r) {
    for (size_t i = 0; i < ctx.coefficient_lattice().size(); ++i) {
        const auto& n = ctx.coefficient_lattice()[i];
        auto res = quotient_iso_check(ctx.module(), n, ctx.gset(), ctx.caps());
        if (!res.ok)
            return failed(r, {{"N", coefficient_payload(ctx.module(), n.elements)},
                              {"detail", res.detail}});
    }
    pass(r);
}

void check_sum_intersection(InstanceContext& ctx, const CheckRequest&, CheckReport& r) {
    const auto& lattice = ctx.coefficient_lattice();
    for (size_t i = 0; i < lattice.size(); ++i)
        for (size_t j = 0; j < lattice.size(); ++j) {
            auto res = sum_intersection_lemma_check(ctx.module(), lattice[i], lattice[j],
                                                    ctx.gset(), ctx.caps());
            if (!res.sum_biconditional || !res.intersection_biconditional)
                return failed(r, {{"N1", coefficient_payload(ctx.module(), lattice[i].elements)},
                                  {"N2", coefficient_payload(ctx.module(), lattice[j].elements)},
                                  {"sum_ms", res.sum_ms},
                                  {"sum_m", res.sum_m},
                                  {"intersection_ms_zero", res.intersection_ms_zero},
                                  {"intersection_m_zero", res.intersection_m_zero}});
        }
    pass(r);
}

void check_orbit_direct_sum(InstanceContext& ctx, const CheckRequest&, CheckReport& r) {
    auto res = orbit_direct_sum_check(ctx.ms(), ctx.caps());
    if (!res.ok) return failed(r, {{"detail", res.detail}});
    pass(r);
}

void check_ngs_minimality(InstanceContext& ctx, const CheckRequest&, CheckReport& r) {
    auto orbs = orbits(*ctx.gset());
    for (const auto& n : ctx.coefficient_lattice())
        for (const auto& o : orbs) {
            auto res =
                ngs_minimality_check(ctx.module(), n, ctx.gset(), o.representative, ctx.caps());
            if (!res.ok)
                return failed(r, {{"N", coefficient_payload(ctx.module(), n.elements)},
                                  {"point", ctx.gset()->point(o.representative)},
                                  {"detail", res.detail}});
        }
    pass(r);
}

void check_orbit_minimality(InstanceContext& ctx, const CheckRequest&, CheckReport& r) {
    const auto& s = *ctx.gset();
    for (const auto& o : orbits(s)) {
        const int k = static_cast<int>(o.members.size());
        if (k < 2) continue;
        if (k > 20) fail(Errc::size_cap_exceeded, "orbit too large for subset enumeration");
        for (std::uint32_t mask = 1; mask + 1 < (1u << k); ++mask) {
            bool escaped = false;
            for (int i = 0; i < k && !escaped; ++i) {
                if (!((mask >> i) & 1)) continue;
                for (int g = 0; g < s.group->order && !escaped; ++g) {
                    int target = s.apply(o.members[i], g);
                    auto pos = std::find(o.members.begin(), o.members.end(), target);
                    int bit = static_cast<int>(pos - o.members.begin());
                    if (!((mask >> bit) & 1)) escaped = true;
                }
            }
            if (!escaped) {
                json subset = json::array();
                for (int i = 0; i < k; ++i)
                    if ((mask >> i) & 1) subset.push_back(s.point(o.members[i]));
                return failed(r, {{"subset", subset},
                                  {"detail", "proper nonempty subset closed under the action"}});
            }
        }
    }
    pass(r);
}

void check_direct_sum_commutes(InstanceContext& ctx, const CheckRequest&, CheckReport& r) {
    const auto& factors = ctx.module().factors;
    const int n = ctx.module().ring.modulus;
    for (size_t j = 0; j <= factors.size(); ++j) {
        auto m1 = make_module(n, std::vector<int>(factors.begin(), factors.begin() + j));
        auto m2 = make_module(n, std::vector<int>(factors.begin() + j, factors.end()));
        auto res = direct_sum_commutes_check(m1, m2, ctx.gset(), ctx.caps());
        if (!res.ok)
            return failed(r, {{"split", j}, {"detail", res.detail}});
    }
    pass(r);
}

void check_maschke_forward(InstanceContext& ctx, const CheckRequest&, CheckReport& r) {
    auto crit = maschke_criterion(ctx.module(), *ctx.group(), ctx.caps());
    if (!crit.holds) return pass(r); // hypothesis not met
    const auto& ss = ctx.semisimplicity();
    if (ss.semisimple) return pass(r);
    failed(r, {{"detail", "criterion holds but a submodule has no complement"},
               {"submodule", submodule_payload(ctx.ms(), ss.witness)}});
}

void check_maschke_reverse(InstanceContext& ctx, const CheckRequest&, CheckReport& r) {
    const auto& ss = ctx.semisimplicity();
    if (!ss.semisimple) return pass(r); // hypothesis not met
    auto crit = maschke_criterion(ctx.module(), *ctx.group(), ctx.caps());
    if (crit.holds) return pass(r);
    failed(r, {{"detail", "the formal-sum module is semisimple but the criterion fails"},
               {"module_semisimple", crit.module_semisimple},
               {"order_invertible", crit.order_invertible}});
}

void check_semlem2(InstanceContext& ctx, const CheckRequest&, CheckReport& r) {
    // applicability gate first; the lattice can be expensive
    if (!mult_by_k_invertible(ctx.module(), ctx.group()->order).invertible) {
        r.verdict = Verdict::skipped;
        r.skip_reason = "multiplication by |G| is not invertible on M";
        return;
    }
    auto res = averaged_lifting_check(ctx.ms(), ctx.lattice(), ctx.caps());
    if (!res.applicable) {
        r.verdict = Verdict::skipped;
        r.skip_reason = res.detail;
        return;
    }
    if (!res.ok) return failed(r, {{"detail", res.detail}});
    pass(r);
}

void check_simple_factorization(InstanceContext& ctx, const CheckRequest&, CheckReport& r) {
    auto simples = minimal_submodules(ctx.ms(), ctx.caps());
    json findings = json::array();
    for (const auto& l : simples) {
        auto res = simple_factorization(ctx.ms(), l, ctx.coefficient_lattice(), ctx.caps());
        if (res.status == SimpleFactorization::Status::no_factorization) {
            findings.push_back(
                {{"submodule", submodule_payload(ctx.ms(), l.elements)},
                 {"carrier_is_union_of_orbits", res.carrier_is_union_of_orbits},
                 {"coefficients_uniform", res.coefficients_uniform},
                 {"detail", "no (N, orbit) pair reproduces this simple submodule"}});
        } else if (res.status == SimpleFactorization::Status::factored && res.match_count != 1) {
            findings.push_back(
                {{"submodule", submodule_payload(ctx.ms(), l.elements)},
                 {"match_count", res.match_count},
                 {"detail", "factorization is not unique"}});
        } else if (res.status == SimpleFactorization::Status::not_simple) {
            findings.push_back({{"submodule", submodule_payload(ctx.ms(), l.elements)},
                                {"detail", "minimal submodule not recognized as simple"}});
        }
    }
    if (!findings.empty()) return failed(r, {{"findings", findings}});
    pass(r);
}

void check_projectivity(InstanceContext& ctx, const CheckRequest&, CheckReport& r) {
    bool closed = is_projective_over_zn(ctx.module());
    auto search = projective_summand_search(ctx.module(), ctx.caps());
    if (!search) {
        r.verdict = Verdict::skipped;
        r.skip_reason = "summand-of-free search beyond cap";
        return;
    }
    if (search->projective != closed)
        return failed(r, {{"closed_form", closed},
                          {"search", search->projective},
                          {"free_rank", search->free_rank}});
    pass(r);
}

} // namespace

const std::vector<CheckDef>& check_registry() {
    static const std::vector<CheckDef> registry = {
        {"action-axioms",
         "module laws for the ring action on formal sums: unit, distributivity, associativity",
         "exhaustive over single-term ring elements and capped element grids", false,
         check_action_axioms},
        {"augmentation-hom",
         "the coefficient-sum map is additive, R-linear and multiplicative over the ring action",
         "exhaustive single-term grids plus full pair scans within budget", false,
         check_augmentation_hom},
        {"delta-subset-kernel",
         "the relative delta set lies in the kernel of the coefficient-sum map",
         "full enumeration of both sets for every subgroup", false, check_delta_subset_kernel},
        {"delta-equals-kernel",
         "delta over the whole group equals the augmentation kernel (needs a transitive action)",
         "set equality of two independently enumerated sets", true, check_delta_equals_kernel},
        {"delta-equals-complement",
         "delta for H equals the image of (1 - e_H) when |H| is invertible",
         "set equality of the additive span against the enumerated image", false,
         check_delta_equals_complement},
        {"idempotent-basic",
         "the subgroup sum squares to |H| times itself; its scaled form is idempotent",
         "direct convolution for every subgroup", false, check_idempotent_basic},
        {"idempotent-central",
         "the subgroup sum is central exactly for normal subgroups",
         "commutators against every group element; witness recorded for non-normal subgroups",
         false, check_idempotent_central},
        {"idempotent-split",
         "the idempotent of a normal invertible-order subgroup splits MS with image M(S/H)",
         "enumerated components, invariants, and an explicit verified bijection", false,
         check_idempotent_split},
        {"quotient-iso",
         "formal sums over a quotient module realize the quotient by the coefficient part",
         "explicit epimorphism with kernel comparison, for every coefficient submodule", false,
         check_quotient_iso},
        {"sum-intersection",
         "sums and intersections of coefficient submodules transfer to formal sums and back",
         "enumerated biconditionals over all coefficient submodule pairs", false,
         check_sum_intersection},
        {"orbit-direct-sum",
         "MS is the internal direct sum of orbit components, each an image of the regular module",
         "support decomposition plus verified epimorphisms with kernel counting", false,
         check_orbit_direct_sum},
        {"ngs-minimality",
         "coefficients over an orbit form the minimal action-closed set containing the seed",
         "direct construction compared against the generated closure", false,
         check_ngs_minimality},
        {"orbit-minimality",
         "no proper nonempty subset of an orbit is closed under the action",
         "all subsets of every orbit, with escape witnesses", false, check_orbit_minimality},
        {"direct-sum-commutes",
         "formal sums over a direct sum of coefficient modules split as a direct sum",
         "coordinate shuffle verified as a bijective module map for every factor split", false,
         check_direct_sum_commutes},
        {"maschke-forward",
         "semisimple coefficients with invertible group order force a semisimple MS",
         "exhaustive complement search in the enumerated lattice", false, check_maschke_forward},
        {"maschke-reverse",
         "a semisimple MS forces semisimple coefficients and invertible group order "
         "(refutable off the regular action)",
         "exhaustive complement search compared against the closed-form criterion", true,
         check_maschke_reverse},
        {"semlem2-lifting",
         "averaging lifts coefficient-level direct summands to action-level direct summands",
         "purity-tested summands, explicit averaged projections and kernels", false,
         check_semlem2},
        {"simple-factorization",
         "every simple action submodule should be a coefficient submodule over one orbit",
         "exhaustive search over (submodule, orbit) pairs; misses are findings", true,
         check_simple_factorization},
        {"projectivity-r-side",
         "coefficient-side projectivity closed form",
         "cross-checked by exhaustive summand-of-free search at tiny scale", false,
         check_projectivity},
    };
    return registry;
}

const CheckDef* find_check(const std::string& name) {
    for (const auto& def : check_registry())
        if (def.name == name) return &def;
    return nullptr;
}

CheckReport run_one(InstanceContext& ctx, const CheckRequest& request) {
    const CheckDef* def = find_check(request.name);
    if (!def) fail(Errc::unknown_check, "unknown check '" + request.name + "'");
    CheckReport r;
    r.check = def->name;
    r.anchor = def->anchor;
    r.finding = def->finding;
    r.instance = instance_line(ctx.spec());
    auto t0 = std::chrono::steady_clock::now();
    try {
        def->run(ctx, request, r);
        if (r.verdict == Verdict::skipped && r.skip_reason.empty())
            r.skip_reason = "not applicable";
    } catch (const Error& e) {
        if (e.code() == Errc::size_cap_exceeded || e.code() == Errc::cap_exceeded ||
            e.code() == Errc::order_cap_exceeded) {
            r.verdict = Verdict::skipped;
            r.skip_reason = e.what();
        } else {
            r.verdict = Verdict::fail;
            r.counterexample = json{{"error", e.what()}};
        }
    }
    auto t1 = std::chrono::steady_clock::now();
    r.millis = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return r;
}

std::vector<CheckReport> run_checks(InstanceContext& ctx) {
    std::vector<CheckReport> reports;
    for (const auto& req : ctx.spec().checks) {
        if (req.name == "all") {
            for (const auto& def : check_registry())
                reports.push_back(run_one(ctx, CheckRequest{def.name, req.params}));
        } else {
            reports.push_back(run_one(ctx, req));
        }
    }
    return reports;
}

CheckReport replay(const CheckReport& report, const Caps& caps) {
    auto spec = parse_spec(report.instance);
    InstanceContext ctx(spec, caps);
    return run_one(ctx, CheckRequest{report.check, {}});
}

} // namespace gsm
