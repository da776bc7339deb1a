#include "gsm/group_ring.hpp"

#include <algorithm>
#include <sstream>

namespace gsm {

bool GroupRingElement::is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](int c) { return c == 0; });
}

GroupRingElement rg_zero(const GroupPtr& group, int modulus) {
    return GroupRingElement{group, modulus, std::vector<int>(group->order, 0)};
}

GroupRingElement rg_one(const GroupPtr& group, int modulus) {
    auto a = rg_zero(group, modulus);
    a.coeffs[group->identity] = 1 % modulus;
    return a;
}

GroupRingElement rg_term(const GroupPtr& group, int modulus, int r, int g) {
    auto a = rg_zero(group, modulus);
    a.coeffs[g] = ((r % modulus) + modulus) % modulus;
    return a;
}

static void require_same_parent(const GroupRingElement& a, const GroupRingElement& b) {
    if (a.group.get() != b.group.get() || a.modulus != b.modulus)
        fail(Errc::mixed_parents, "group-ring elements over different parents");
}

GroupRingElement rg_add(const GroupRingElement& a, const GroupRingElement& b) {
    require_same_parent(a, b);
    GroupRingElement out = a;
    for (size_t i = 0; i < out.coeffs.size(); ++i)
        out.coeffs[i] = (out.coeffs[i] + b.coeffs[i]) % a.modulus;
    return out;
}

GroupRingElement rg_sub(const GroupRingElement& a, const GroupRingElement& b) {
    require_same_parent(a, b);
    GroupRingElement out = a;
    for (size_t i = 0; i < out.coeffs.size(); ++i)
        out.coeffs[i] = ((out.coeffs[i] - b.coeffs[i]) % a.modulus + a.modulus) % a.modulus;
    return out;
}

GroupRingElement rg_scalar(int r, const GroupRingElement& a) {
    GroupRingElement out = a;
    r = ((r % a.modulus) + a.modulus) % a.modulus;
    for (auto& c : out.coeffs) c = (c * r) % a.modulus;
    return out;
}

GroupRingElement rg_multiply(const GroupRingElement& a, const GroupRingElement& b) {
    require_same_parent(a, b);
    GroupRingElement out = rg_zero(a.group, a.modulus);
    const Group& g = *a.group;
    for (int x = 0; x < g.order; ++x) {
        if (a.coeffs[x] == 0) continue;
        for (int y = 0; y < g.order; ++y) {
            if (b.coeffs[y] == 0) continue;
            int k = g.mul(x, y);
            out.coeffs[k] = (out.coeffs[k] + a.coeffs[x] * b.coeffs[y]) % a.modulus;
        }
    }
    return out;
}

bool rg_equal(const GroupRingElement& a, const GroupRingElement& b) {
    return a.group.get() == b.group.get() && a.modulus == b.modulus && a.coeffs == b.coeffs;
}

int augmentation(const GroupRingElement& a) {
    int s = 0;
    for (int c : a.coeffs) s = (s + c) % a.modulus;
    return s;
}

GroupRingElement subgroup_sum(const Subgroup& subgroup, int modulus) {
    auto a = rg_zero(subgroup.parent, modulus);
    for (int h : subgroup.members) a.coeffs[h] = 1 % modulus;
    return a;
}

GroupRingElement subgroup_idempotent(const Subgroup& subgroup, int modulus) {
    auto inv = mod_inverse(subgroup.order(), modulus);
    if (!inv)
        fail(Errc::non_invertible_order,
             "|H| = " + std::to_string(subgroup.order()) + " has gcd " +
                 std::to_string(gcd_int(subgroup.order(), modulus)) + " with modulus " +
                 std::to_string(modulus));
    return rg_scalar(*inv, subgroup_sum(subgroup, modulus));
}

Code rg_code(const GroupRingElement& a) {
    Code c = 0;
    for (int i = a.group->order - 1; i >= 0; --i)
        c = c * static_cast<Code>(a.modulus) + static_cast<Code>(a.coeffs[i]);
    return c;
}

GroupRingElement rg_from_code(const GroupPtr& group, int modulus, Code c) {
    auto a = rg_zero(group, modulus);
    for (int i = 0; i < group->order; ++i) {
        a.coeffs[i] = static_cast<int>(c % static_cast<Code>(modulus));
        c /= static_cast<Code>(modulus);
    }
    return a;
}

namespace {

std::uint64_t rg_space_size(const GroupPtr& group, int modulus, const Caps& caps) {
    std::uint64_t size = 1;
    for (int i = 0; i < group->order; ++i) {
        size *= static_cast<std::uint64_t>(modulus);
        if (size > caps.rg_enum)
            fail(Errc::size_cap_exceeded,
                 "|RG| exceeds cap " + std::to_string(caps.rg_enum));
    }
    return size;
}

CodeGroup rg_code_group(const GroupPtr& group, int modulus, std::uint64_t size) {
    CodeGroup g;
    g.size = size;
    g.add = [group, modulus](Code a, Code b) {
        Code out = 0, w = 1;
        for (int i = 0; i < group->order; ++i) {
            auto m = static_cast<Code>(modulus);
            out += ((a % m + b % m) % m) * w;
            a /= m;
            b /= m;
            w *= m;
        }
        return out;
    };
    // closure under left and right multiplication by each group element
    // covers two-sided multiplication by arbitrary ring elements
    for (int side = 0; side < 2; ++side)
        for (int x = 0; x < group->order; ++x)
            g.endos.push_back([group, modulus, x, side](Code c) {
                auto a = rg_from_code(group, modulus, c);
                GroupRingElement out = rg_zero(group, modulus);
                for (int i = 0; i < group->order; ++i) {
                    if (a.coeffs[i] == 0) continue;
                    int k = side ? group->mul(i, x) : group->mul(x, i);
                    out.coeffs[k] = (out.coeffs[k] + a.coeffs[i]) % modulus;
                }
                return rg_code(out);
            });
    return g;
}

} // namespace

RGIdeal augmentation_ideal(const GroupPtr& group, int modulus, const Caps& caps) {
    std::uint64_t size = rg_space_size(group, modulus, caps);
    RGIdeal ideal;
    ideal.group = group;
    ideal.modulus = modulus;
    for (int g = 0; g < group->order; ++g) {
        if (g == group->identity) continue;
        ideal.generators.push_back(
            rg_sub(rg_term(group, modulus, 1, g), rg_one(group, modulus)));
    }
    std::vector<Code> gens;
    for (const auto& e : ideal.generators) gens.push_back(rg_code(e));
    ideal.elements = closed_span(rg_code_group(group, modulus, size), gens);
    // audited: the span equals the kernel of the coefficient-sum map
    std::uint64_t kernel_count = 0;
    for (Code c = 0; c < size; ++c)
        if (augmentation(rg_from_code(group, modulus, c)) == 0) {
            ++kernel_count;
            if (!std::binary_search(ideal.elements.begin(), ideal.elements.end(), c))
                fail(Errc::not_a_submodule, "augmentation kernel exceeds the generated ideal");
        }
    if (kernel_count != ideal.elements.size())
        fail(Errc::not_a_submodule, "generated ideal exceeds the augmentation kernel");
    return ideal;
}

RGIdeal augmentation_ideal(const GroupPtr& group, int modulus,
                           const Subgroup& normal_subgroup, const Caps& caps) {
    if (!is_normal(*group, normal_subgroup))
        fail(Errc::not_normal, "relative augmentation ideal requires a normal subgroup");
    std::uint64_t size = rg_space_size(group, modulus, caps);
    RGIdeal ideal;
    ideal.group = group;
    ideal.modulus = modulus;
    for (int v : normal_subgroup.members) {
        if (v == group->identity) continue;
        ideal.generators.push_back(
            rg_sub(rg_term(group, modulus, 1, v), rg_one(group, modulus)));
    }
    std::vector<Code> gens;
    for (const auto& e : ideal.generators) gens.push_back(rg_code(e));
    ideal.elements = closed_span(rg_code_group(group, modulus, size), gens);

    // audited: equals the kernel of the projection onto Z_n[G/N]
    auto q = quotient_group(group, normal_subgroup, caps);
    std::uint64_t kernel_count = 0;
    for (Code c = 0; c < size; ++c) {
        auto a = rg_from_code(group, modulus, c);
        std::vector<int> image(q.group->order, 0);
        for (int g = 0; g < group->order; ++g)
            image[q.projection[g]] = (image[q.projection[g]] + a.coeffs[g]) % modulus;
        bool in_kernel = std::all_of(image.begin(), image.end(), [](int x) { return x == 0; });
        if (in_kernel) {
            ++kernel_count;
            if (!std::binary_search(ideal.elements.begin(), ideal.elements.end(), c))
                fail(Errc::not_a_submodule, "projection kernel exceeds the generated ideal");
        }
    }
    if (kernel_count != ideal.elements.size())
        fail(Errc::not_a_submodule, "generated ideal exceeds the projection kernel");
    return ideal;
}

std::string rg_to_string(const GroupRingElement& a) {
    std::string out;
    for (int i = 0; i < a.group->order; ++i) {
        if (i) out += " + ";
        out += std::to_string(a.coeffs[i]) + "*" + a.group->label(i);
    }
    return out.empty() ? "0" : out;
}

GroupRingElement rg_parse(const GroupPtr& group, int modulus, const std::string& text) {
    auto a = rg_zero(group, modulus);
    std::string term;
    std::stringstream ss(text);
    while (std::getline(ss, term, '+')) {
        auto star = term.find('*');
        if (star == std::string::npos)
            fail(Errc::syntax_error, "expected coeff*label in '" + term + "'");
        auto trim = [](std::string s) {
            size_t b = s.find_first_not_of(" \t");
            size_t e = s.find_last_not_of(" \t");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        std::string coeff = trim(term.substr(0, star));
        std::string label = trim(term.substr(star + 1));
        int g = -1;
        for (int i = 0; i < group->order; ++i)
            if (group->label(i) == label) { g = i; break; }
        if (g < 0) fail(Errc::syntax_error, "unknown group element label '" + label + "'");
        int r = 0;
        try {
            r = std::stoi(coeff);
        } catch (...) {
            fail(Errc::syntax_error, "bad coefficient '" + coeff + "'");
        }
        a.coeffs[g] = ((a.coeffs[g] + r) % modulus + modulus) % modulus;
    }
    return a;
}

} // namespace gsm
