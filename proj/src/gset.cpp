#include "gsm/gset.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace gsm {

GSetPtr build_gset(GroupPtr group, std::vector<std::string> points,
                   std::vector<std::vector<int>> act) {
    const int n = group->order;
    const int m = static_cast<int>(points.size());
    if (static_cast<int>(act.size()) != n)
        fail(Errc::not_compatible, "action table must have one row per group element");
    for (int g = 0; g < n; ++g)
        if (static_cast<int>(act[g].size()) != m)
            fail(Errc::not_compatible, "action row " + std::to_string(g) +
                                           " is not of length " + std::to_string(m));
    for (int g = 0; g < n; ++g) {
        std::vector<bool> seen(m, false);
        for (int s = 0; s < m; ++s) {
            int t = act[g][s];
            if (t < 0 || t >= m || seen[t])
                fail(Errc::not_permutation,
                     "row of g=" + group->label(g) + " is not a permutation at s=" +
                         std::to_string(s));
            seen[t] = true;
        }
    }
    for (int s = 0; s < m; ++s)
        if (act[group->identity][s] != s)
            fail(Errc::identity_not_trivial,
                 "identity moves point " + std::to_string(s));
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) {
            int gh = group->mul(g, h);
            for (int s = 0; s < m; ++s)
                if (act[gh][s] != act[h][act[g][s]])
                    fail(Errc::not_compatible,
                         "s.(gh) != (s.g).h at (g=" + group->label(g) +
                             ", h=" + group->label(h) + ", s=" + std::to_string(s) + ")");
        }
    auto out = std::make_shared<GSet>();
    out->group = std::move(group);
    out->points = std::move(points);
    out->act = std::move(act);
    return out;
}

GSetPtr preset_gset(const GroupPtr& group, const GSetPreset& preset, const Caps& caps) {
    const int n = group->order;
    switch (preset.kind) {
        case GSetPresetKind::regular: {
            std::vector<std::string> points = group->labels;
            std::vector<std::vector<int>> act(n, std::vector<int>(n));
            for (int g = 0; g < n; ++g)
                for (int s = 0; s < n; ++s) act[g][s] = group->mul(s, g);
            return build_gset(group, std::move(points), std::move(act));
        }
        case GSetPresetKind::conjugation_on_subgroups: {
            // The full subgroup list is conjugation-closed; selected sublists
            // generally are not.
            auto subs = enumerate_subgroups(group, caps);
            std::map<std::vector<int>, int> key_index;
            for (size_t i = 0; i < subs.size(); ++i)
                key_index[subs[i].members] = static_cast<int>(i);
            std::vector<std::string> points;
            for (const auto& h : subs) {
                std::string label = "{";
                for (size_t i = 0; i < h.members.size(); ++i) {
                    if (i) label += ",";
                    label += group->label(h.members[i]);
                }
                label += "}";
                points.push_back(std::move(label));
            }
            const int m = static_cast<int>(subs.size());
            std::vector<std::vector<int>> act(n, std::vector<int>(m));
            for (int g = 0; g < n; ++g)
                for (int s = 0; s < m; ++s) {
                    std::vector<int> image;
                    image.reserve(subs[s].members.size());
                    for (int x : subs[s].members) image.push_back(group->conj(g, x));
                    std::sort(image.begin(), image.end());
                    auto it = key_index.find(image);
                    if (it == key_index.end())
                        fail(Errc::not_permutation, "conjugate subgroup missing from list");
                    act[g][s] = it->second;
                }
            return build_gset(group, std::move(points), std::move(act));
        }
        case GSetPresetKind::right_cosets: {
            require_subgroup(*group, preset.subgroup);
            auto cosets = right_cosets(group, preset.subgroup);
            const int m = static_cast<int>(cosets.size());
            std::vector<int> coset_of(n, -1);
            for (int i = 0; i < m; ++i)
                for (int x : cosets[i].members) coset_of[x] = i;
            std::vector<std::string> points;
            for (int i = 0; i < m; ++i) points.push_back("K" + std::to_string(i + 1));
            std::vector<std::vector<int>> act(n, std::vector<int>(m));
            for (int g = 0; g < n; ++g)
                for (int s = 0; s < m; ++s)
                    act[g][s] = coset_of[group->mul(cosets[s].representative, g)];
            return build_gset(group, std::move(points), std::move(act));
        }
        case GSetPresetKind::trivial: {
            const int k = preset.fixed_points;
            if (k < 0) fail(Errc::unsupported_preset, "trivial(k) needs k >= 0");
            std::vector<std::string> points;
            for (int i = 0; i < k; ++i) points.push_back("s" + std::to_string(i + 1));
            std::vector<std::vector<int>> act(n, std::vector<int>(k));
            for (int g = 0; g < n; ++g)
                for (int s = 0; s < k; ++s) act[g][s] = s;
            return build_gset(group, std::move(points), std::move(act));
        }
    }
    fail(Errc::unsupported_preset, "unknown gset preset");
}

std::vector<Orbit> orbits(const GSet& s) {
    const int m = s.size();
    std::vector<bool> used(m, false);
    std::vector<Orbit> out;
    for (int p = 0; p < m; ++p) {
        if (used[p]) continue;
        std::set<int> members;
        for (int g = 0; g < s.group->order; ++g) members.insert(s.apply(p, g));
        Orbit o;
        o.members.assign(members.begin(), members.end());
        o.representative = o.members.front();
        for (int q : o.members) used[q] = true;
        out.push_back(std::move(o));
    }
    return out;
}

std::vector<Orbit> subgroup_orbits(const GSet& s, const Subgroup& subgroup) {
    const int m = s.size();
    std::vector<bool> used(m, false);
    std::vector<Orbit> out;
    for (int p = 0; p < m; ++p) {
        if (used[p]) continue;
        std::set<int> members;
        std::vector<int> work = {p};
        while (!work.empty()) {
            int q = work.back();
            work.pop_back();
            if (!members.insert(q).second) continue;
            for (int h : subgroup.members) work.push_back(s.apply(q, h));
        }
        Orbit o;
        o.members.assign(members.begin(), members.end());
        o.representative = o.members.front();
        for (int q : o.members) used[q] = true;
        out.push_back(std::move(o));
    }
    return out;
}

Subgroup stabilizer(const GSet& s, int point) {
    std::vector<int> members;
    for (int g = 0; g < s.group->order; ++g)
        if (s.apply(point, g) == point) members.push_back(g);
    return Subgroup{s.group, std::move(members)};
}

GSetMorphism check_gset_morphism(GSetPtr domain, GSetPtr codomain, std::vector<int> map) {
    if (static_cast<int>(map.size()) != domain->size())
        fail(Errc::not_compatible, "map size does not match domain");
    for (int v : map)
        if (v < 0 || v >= codomain->size())
            fail(Errc::not_compatible, "map value out of codomain range");
    GSetMorphism phi;
    phi.domain = std::move(domain);
    phi.codomain = std::move(codomain);
    phi.map = std::move(map);
    const Group& g = *phi.domain->group;
    for (int s = 0; s < phi.domain->size(); ++s)
        for (int x = 0; x < g.order; ++x)
            if (phi.map[phi.domain->apply(s, x)] != phi.codomain->apply(phi.map[s], x)) {
                phi.kind = GSetMorphism::Kind::not_equivariant;
                phi.witness_point = s;
                phi.witness_element = x;
                return phi;
            }
    std::vector<bool> hit(phi.codomain->size(), false);
    bool bijective = phi.domain->size() == phi.codomain->size();
    for (int v : phi.map) {
        if (hit[v]) bijective = false;
        hit[v] = true;
    }
    phi.kind = bijective ? GSetMorphism::Kind::bijective_equivariant
                         : GSetMorphism::Kind::equivariant;
    return phi;
}

HOrbitQuotient h_orbit_quotient(const GSetPtr& s, const Subgroup& subgroup,
                                const Caps& caps) {
    const GroupPtr& group = s->group;
    if (!is_normal(*group, subgroup))
        fail(Errc::not_normal, "h_orbit_quotient requires a normal subgroup");
    HOrbitQuotient out;
    out.quotient = quotient_group(group, subgroup, caps);

    auto horbits = subgroup_orbits(*s, subgroup);
    const int m = static_cast<int>(horbits.size());
    std::vector<int> orbit_of(s->size(), -1);
    for (int i = 0; i < m; ++i) {
        out.fibers.push_back(horbits[i].members);
        for (int p : horbits[i].members) orbit_of[p] = i;
    }

    // Exhaustive well-definedness: the image orbit must not depend on the
    // choice of point in the orbit nor on the coset representative.
    const int q = out.quotient.group->order;
    std::vector<std::vector<int>> qact(q, std::vector<int>(m, -1));
    for (int c = 0; c < q; ++c)
        for (int i = 0; i < m; ++i) {
            int image = -1;
            for (int p : horbits[i].members)
                for (int g : out.quotient.cosets[c].members) {
                    int t = orbit_of[s->apply(p, g)];
                    if (image < 0) image = t;
                    else if (image != t)
                        fail(Errc::ill_defined_action,
                             "orbit " + std::to_string(i) + " under coset " +
                                 std::to_string(c) + " hits two orbits (" +
                                 std::to_string(image) + "," + std::to_string(t) + ")");
                }
            qact[c][i] = image;
        }
    std::vector<std::string> points;
    for (int i = 0; i < m; ++i) {
        std::string label = "[" + s->point(horbits[i].members.front()) + "]";
        points.push_back(std::move(label));
    }
    out.quotient_set = build_gset(out.quotient.group, points, qact);

    std::vector<std::vector<int>> iact(group->order, std::vector<int>(m));
    for (int g = 0; g < group->order; ++g)
        for (int i = 0; i < m; ++i) iact[g][i] = qact[out.quotient.projection[g]][i];
    out.inflated = build_gset(group, points, std::move(iact));

    out.projection = check_gset_morphism(s, out.inflated, orbit_of);
    if (out.projection.kind == GSetMorphism::Kind::not_equivariant)
        fail(Errc::ill_defined_action, "projection onto H-orbits is not equivariant");
    return out;
}

} // namespace gsm
