#include "gsm/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace gsm {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::not_associative: return "NotAssociative";
        case Errc::no_identity: return "NoIdentity";
        case Errc::not_latin_square: return "NotLatinSquare";
        case Errc::unsupported_preset: return "UnsupportedPreset";
        case Errc::order_cap_exceeded: return "OrderCapExceeded";
        case Errc::not_a_subgroup: return "NotASubgroup";
        case Errc::not_normal: return "NotNormal";
        case Errc::identity_not_trivial: return "IdentityNotTrivial";
        case Errc::not_compatible: return "NotCompatible";
        case Errc::not_permutation: return "NotPermutation";
        case Errc::ill_defined_action: return "IllDefinedAction";
        case Errc::mixed_parents: return "MixedParents";
        case Errc::size_cap_exceeded: return "SizeCapExceeded";
        case Errc::not_a_submodule: return "NotASubmodule";
        case Errc::non_invertible_order: return "NonInvertibleOrder";
        case Errc::syntax_error: return "SyntaxError";
        case Errc::unknown_check: return "UnknownCheck";
        case Errc::cap_exceeded: return "CapExceeded";
        case Errc::io_error: return "IoError";
    }
    return "Error";
}

Caps Caps::from_env() {
    Caps caps;
    const char* raw = std::getenv("GSM_CAPS");
    if (!raw) return caps;
    std::stringstream ss(raw);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) continue;
        std::string key = item.substr(0, eq);
        std::uint64_t value = std::strtoull(item.c_str() + eq + 1, nullptr, 10);
        if (key == "group_order") caps.group_order = static_cast<int>(value);
        else if (key == "module_enum") caps.module_enum = value;
        else if (key == "ms_enum") caps.ms_enum = value;
        else if (key == "closure") caps.closure = value;
        else if (key == "rg_enum") caps.rg_enum = value;
    }
    return caps;
}

bool Subgroup::contains(int g) const {
    return std::binary_search(members.begin(), members.end(), g);
}

GroupPtr build_group(std::vector<std::string> labels,
                     std::vector<std::vector<int>> table, const Caps& caps) {
    const int order = static_cast<int>(table.size());
    if (order == 0) fail(Errc::no_identity, "empty table");
    if (order > caps.group_order)
        fail(Errc::order_cap_exceeded,
             "order " + std::to_string(order) + " exceeds cap " +
                 std::to_string(caps.group_order));
    if (static_cast<int>(labels.size()) != order)
        fail(Errc::not_latin_square, "label count does not match order");
    for (int i = 0; i < order; ++i) {
        if (static_cast<int>(table[i].size()) != order)
            fail(Errc::not_latin_square, "row " + std::to_string(i) + " is not of length " +
                                             std::to_string(order));
        for (int j = 0; j < order; ++j)
            if (table[i][j] < 0 || table[i][j] >= order)
                fail(Errc::not_latin_square, "entry out of range at cell (" +
                                                 std::to_string(i) + "," + std::to_string(j) + ")");
    }

    int identity = -1;
    for (int e = 0; e < order; ++e) {
        bool ok = true;
        for (int j = 0; j < order && ok; ++j)
            ok = table[e][j] == j && table[j][e] == j;
        if (ok) { identity = e; break; }
    }
    if (identity < 0) fail(Errc::no_identity, "no two-sided identity element");

    for (int i = 0; i < order; ++i) {
        std::vector<bool> seen_row(order, false), seen_col(order, false);
        for (int j = 0; j < order; ++j) {
            if (seen_row[table[i][j]])
                fail(Errc::not_latin_square, "row " + std::to_string(i) +
                                                 " repeats value " + std::to_string(table[i][j]) +
                                                 " at column " + std::to_string(j));
            seen_row[table[i][j]] = true;
            if (seen_col[table[j][i]])
                fail(Errc::not_latin_square, "column " + std::to_string(i) +
                                                 " repeats value " + std::to_string(table[j][i]) +
                                                 " at row " + std::to_string(j));
            seen_col[table[j][i]] = true;
        }
    }

    for (int i = 0; i < order; ++i)
        for (int j = 0; j < order; ++j)
            for (int k = 0; k < order; ++k)
                if (table[table[i][j]][k] != table[i][table[j][k]])
                    fail(Errc::not_associative,
                         "(g" + std::to_string(i) + " g" + std::to_string(j) + ") g" +
                             std::to_string(k) + " != g" + std::to_string(i) + " (g" +
                             std::to_string(j) + " g" + std::to_string(k) + ")");

    std::vector<int> inverse(order, -1);
    for (int i = 0; i < order; ++i) {
        for (int j = 0; j < order; ++j)
            if (table[i][j] == identity && table[j][i] == identity) { inverse[i] = j; break; }
        if (inverse[i] < 0)
            fail(Errc::no_identity, "element " + std::to_string(i) + " has no two-sided inverse");
    }

    auto g = std::make_shared<Group>();
    g->order = order;
    g->labels = std::move(labels);
    g->table = std::move(table);
    g->identity = identity;
    g->inverse = std::move(inverse);
    return g;
}

namespace {

GroupPtr build_cyclic(int k, const Caps& caps) {
    std::vector<std::string> labels(k);
    std::vector<std::vector<int>> table(k, std::vector<int>(k));
    for (int i = 0; i < k; ++i) {
        labels[i] = i == 0 ? "e" : (i == 1 ? "a" : "a" + std::to_string(i));
        for (int j = 0; j < k; ++j) table[i][j] = (i + j) % k;
    }
    return build_group(std::move(labels), std::move(table), caps);
}

// Index i*k+j stands for b^i a^j; relations a^k = b^2 = e, a b = b a^-1.
GroupPtr build_dihedral(int k, const Caps& caps) {
    const int order = 2 * k;
    std::vector<std::string> labels(order);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < k; ++j) {
            std::string s = i ? "b" : "";
            if (j == 1) s += "a";
            else if (j > 1) s += "a" + std::to_string(j);
            labels[i * k + j] = s.empty() ? "e" : s;
        }
    std::vector<std::vector<int>> table(order, std::vector<int>(order));
    for (int i1 = 0; i1 < 2; ++i1)
        for (int j1 = 0; j1 < k; ++j1)
            for (int i2 = 0; i2 < 2; ++i2)
                for (int j2 = 0; j2 < k; ++j2) {
                    int i = i1 ^ i2;
                    int j = i2 ? ((j2 - j1) % k + k) % k : (j1 + j2) % k;
                    table[i1 * k + j1][i2 * k + j2] = i * k + j;
                }
    return build_group(std::move(labels), std::move(table), caps);
}

GroupPtr build_klein(const Caps& caps) {
    std::vector<std::string> labels = {"e", "a", "b", "ab"};
    std::vector<std::vector<int>> table = {
        {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    return build_group(std::move(labels), std::move(table), caps);
}

std::string cycle_label(const std::vector<int>& perm) {
    const int n = static_cast<int>(perm.size());
    std::vector<bool> seen(n, false);
    std::string out;
    for (int i = 0; i < n; ++i) {
        if (seen[i] || perm[i] == i) continue;
        out += "(";
        int j = i;
        while (!seen[j]) {
            seen[j] = true;
            out += std::to_string(j + 1);
            j = perm[j];
        }
        out += ")";
    }
    return out.empty() ? "e" : out;
}

// Product convention is diagrammatic: (p*q)(x) = q(p(x)), matching the
// right-action orientation used throughout.
GroupPtr build_symmetric(int k, const Caps& caps) {
    if (k < 1 || k > 4) fail(Errc::unsupported_preset, "symmetric k must be 1..4");
    std::vector<std::vector<int>> perms;
    std::vector<int> base(k);
    std::iota(base.begin(), base.end(), 0);
    std::vector<int> p = base;
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    std::sort(perms.begin(), perms.end());
    // identity first for readability
    std::stable_sort(perms.begin(), perms.end(), [&](const auto& x, const auto& y) {
        return (x == base) > (y == base);
    });
    std::map<std::vector<int>, int> index;
    for (int i = 0; i < static_cast<int>(perms.size()); ++i) index[perms[i]] = i;
    const int order = static_cast<int>(perms.size());
    std::vector<std::string> labels(order);
    std::vector<std::vector<int>> table(order, std::vector<int>(order));
    for (int i = 0; i < order; ++i) {
        labels[i] = cycle_label(perms[i]);
        for (int j = 0; j < order; ++j) {
            std::vector<int> prod(k);
            for (int x = 0; x < k; ++x) prod[x] = perms[j][perms[i][x]];
            table[i][j] = index[prod];
        }
    }
    return build_group(std::move(labels), std::move(table), caps);
}

} // namespace

GroupPtr preset_group(GroupPreset kind, int k, const Caps& caps) {
    switch (kind) {
        case GroupPreset::cyclic:
            if (k < 1) fail(Errc::unsupported_preset, "cyclic k must be >= 1");
            return build_cyclic(k, caps);
        case GroupPreset::dihedral:
            if (k < 1) fail(Errc::unsupported_preset, "dihedral k must be >= 1");
            return build_dihedral(k, caps);
        case GroupPreset::klein:
            return build_klein(caps);
        case GroupPreset::symmetric:
            return build_symmetric(k, caps);
    }
    fail(Errc::unsupported_preset, "unknown preset kind");
}

bool is_subgroup(const Group& group, const std::vector<int>& members) {
    if (members.empty()) return false;
    if (!std::binary_search(members.begin(), members.end(), group.identity)) return false;
    for (int a : members) {
        if (!std::binary_search(members.begin(), members.end(), group.inv(a))) return false;
        for (int b : members)
            if (!std::binary_search(members.begin(), members.end(), group.mul(a, b)))
                return false;
    }
    return true;
}

void require_subgroup(const Group& group, const Subgroup& subgroup) {
    if (!is_subgroup(group, subgroup.members))
        fail(Errc::not_a_subgroup, "member set is not a subgroup");
}

Subgroup generated_subgroup(const GroupPtr& group, const std::vector<int>& generators) {
    std::set<int> members = {group->identity};
    std::vector<int> work(generators.begin(), generators.end());
    while (!work.empty()) {
        int g = work.back();
        work.pop_back();
        if (members.count(g)) continue;
        std::vector<int> snapshot(members.begin(), members.end());
        members.insert(g);
        work.push_back(group->inv(g));
        for (int m : snapshot) {
            work.push_back(group->mul(m, g));
            work.push_back(group->mul(g, m));
        }
        work.push_back(group->mul(g, g));
    }
    // One closure pass for safety; generation above adds products lazily.
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<int> snapshot(members.begin(), members.end());
        for (int a : snapshot)
            for (int b : snapshot)
                if (members.insert(group->mul(a, b)).second) grew = true;
    }
    return Subgroup{group, std::vector<int>(members.begin(), members.end())};
}

std::vector<Subgroup> enumerate_subgroups(const GroupPtr& group, const Caps& caps) {
    if (group->order > caps.group_order)
        fail(Errc::order_cap_exceeded, "group order " + std::to_string(group->order) +
                                           " exceeds cap " + std::to_string(caps.group_order));
    std::set<std::vector<int>> found;
    std::vector<std::vector<int>> work;
    std::vector<int> trivial = {group->identity};
    found.insert(trivial);
    work.push_back(trivial);
    while (!work.empty()) {
        std::vector<int> h = work.back();
        work.pop_back();
        for (int g = 0; g < group->order; ++g) {
            if (std::binary_search(h.begin(), h.end(), g)) continue;
            std::vector<int> gens = h;
            gens.push_back(g);
            Subgroup extended = generated_subgroup(group, gens);
            if (found.insert(extended.members).second) work.push_back(extended.members);
        }
    }
    std::vector<Subgroup> out;
    out.reserve(found.size());
    for (const auto& members : found) out.push_back(Subgroup{group, members});
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
        return a.members < b.members;
    });
    return out;
}

bool is_normal(const Group& group, const Subgroup& subgroup) {
    require_subgroup(group, subgroup);
    for (int g = 0; g < group.order; ++g)
        for (int h : subgroup.members)
            if (!subgroup.contains(group.mul(group.mul(g, h), group.inv(g))))
                return false;
    return true;
}

std::vector<Coset> right_cosets(const GroupPtr& group, const Subgroup& subgroup) {
    require_subgroup(*group, subgroup);
    std::vector<Coset> out;
    std::vector<bool> used(group->order, false);
    for (int x = 0; x < group->order; ++x) {
        if (used[x]) continue;
        Coset c;
        c.subgroup = subgroup;
        c.representative = x;
        for (int h : subgroup.members) c.members.push_back(group->mul(h, x));
        std::sort(c.members.begin(), c.members.end());
        for (int m : c.members) used[m] = true;
        out.push_back(std::move(c));
    }
    return out;
}

QuotientGroup quotient_group(const GroupPtr& group, const Subgroup& normal_subgroup,
                             const Caps& caps) {
    if (!is_normal(*group, normal_subgroup))
        fail(Errc::not_normal, "subgroup is not normal; quotient undefined");
    QuotientGroup q;
    q.cosets = right_cosets(group, normal_subgroup);
    const int m = static_cast<int>(q.cosets.size());
    q.projection.assign(group->order, -1);
    for (int i = 0; i < m; ++i)
        for (int g : q.cosets[i].members) q.projection[g] = i;
    std::vector<std::string> labels(m);
    std::vector<std::vector<int>> table(m, std::vector<int>(m));
    for (int i = 0; i < m; ++i) {
        labels[i] = "[" + group->label(q.cosets[i].members.front()) + "]";
        for (int j = 0; j < m; ++j)
            table[i][j] =
                q.projection[group->mul(q.cosets[i].representative, q.cosets[j].representative)];
    }
    q.group = build_group(std::move(labels), std::move(table), caps);
    // projection is a homomorphism by construction of the table; verify anyway
    for (int a = 0; a < group->order; ++a)
        for (int b = 0; b < group->order; ++b)
            if (q.projection[group->mul(a, b)] !=
                q.group->mul(q.projection[a], q.projection[b]))
                fail(Errc::not_normal, "coset multiplication ill-defined at (" +
                                           std::to_string(a) + "," + std::to_string(b) + ")");
    return q;
}

std::optional<std::vector<int>> find_isomorphism(const Group& a, const Group& b) {
    if (a.order != b.order) return std::nullopt;
    const int n = a.order;
    std::vector<int> others;
    for (int i = 0; i < n; ++i)
        if (i != a.identity) others.push_back(i);
    std::vector<int> images;
    for (int i = 0; i < n; ++i)
        if (i != b.identity) images.push_back(i);
    std::sort(images.begin(), images.end());
    do {
        std::vector<int> phi(n, -1);
        phi[a.identity] = b.identity;
        for (size_t i = 0; i < others.size(); ++i) phi[others[i]] = images[i];
        bool ok = true;
        for (int x = 0; x < n && ok; ++x)
            for (int y = 0; y < n && ok; ++y)
                ok = phi[a.mul(x, y)] == b.mul(phi[x], phi[y]);
        if (ok) return phi;
    } while (std::next_permutation(images.begin(), images.end()));
    return std::nullopt;
}

} // namespace gsm
