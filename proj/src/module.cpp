#include "gsm/module.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <set>
#include <unordered_map>

#include "gsm/span_engine.hpp"

namespace gsm {

int gcd_int(int a, int b) {
    while (b) { int t = a % b; a = b; b = t; }
    return a < 0 ? -a : a;
}

std::optional<int> mod_inverse(int k, int m) {
    k = ((k % m) + m) % m;
    int r0 = m, r1 = k, s0 = 0, s1 = 1;
    while (r1) {
        int q = r0 / r1;
        int r2 = r0 - q * r1; r0 = r1; r1 = r2;
        int s2 = s0 - q * s1; s0 = s1; s1 = s2;
    }
    if (r0 != 1) return std::nullopt;
    return ((s0 % m) + m) % m;
}

FiniteModule make_module(int modulus, std::vector<int> factors) {
    if (modulus < 2) fail(Errc::not_compatible, "coefficient modulus must be >= 2");
    FiniteModule m;
    m.ring.modulus = modulus;
    m.factors = std::move(factors);
    for (int d : m.factors) {
        if (d < 1) fail(Errc::not_compatible, "factor " + std::to_string(d) + " must be >= 1");
        if (modulus % d != 0)
            fail(Errc::not_compatible, "factor " + std::to_string(d) +
                                           " does not divide modulus " + std::to_string(modulus));
    }
    m.weights.assign(m.factors.size(), 1);
    m.size_ = 1;
    for (int i = static_cast<int>(m.factors.size()) - 1; i >= 0; --i) {
        m.weights[i] = m.size_;
        m.size_ *= static_cast<std::uint64_t>(m.factors[i]);
    }
    return m;
}

std::vector<int> FiniteModule::decode(Code c) const {
    std::vector<int> out(factors.size());
    for (size_t i = 0; i < factors.size(); ++i) {
        out[i] = static_cast<int>((c / weights[i]) % static_cast<std::uint64_t>(factors[i]));
    }
    return out;
}

Code FiniteModule::encode(const std::vector<int>& residues) const {
    Code c = 0;
    for (size_t i = 0; i < factors.size(); ++i)
        c += static_cast<Code>(residues[i] % factors[i]) * weights[i];
    return c;
}

Code FiniteModule::add(Code a, Code b) const {
    Code c = 0;
    for (size_t i = 0; i < factors.size(); ++i) {
        auto d = static_cast<std::uint64_t>(factors[i]);
        std::uint64_t xa = (a / weights[i]) % d, xb = (b / weights[i]) % d;
        c += ((xa + xb) % d) * weights[i];
    }
    return c;
}

Code FiniteModule::neg(Code a) const {
    Code c = 0;
    for (size_t i = 0; i < factors.size(); ++i) {
        auto d = static_cast<std::uint64_t>(factors[i]);
        std::uint64_t xa = (a / weights[i]) % d;
        c += ((d - xa) % d) * weights[i];
    }
    return c;
}

Code FiniteModule::scalar(int r, Code a) const {
    r = ((r % ring.modulus) + ring.modulus) % ring.modulus;
    Code c = 0;
    for (size_t i = 0; i < factors.size(); ++i) {
        auto d = static_cast<std::uint64_t>(factors[i]);
        std::uint64_t xa = (a / weights[i]) % d;
        c += ((static_cast<std::uint64_t>(r) * xa) % d) * weights[i];
    }
    return c;
}

int FiniteModule::order_of(Code a) const {
    int k = 1;
    Code y = a;
    while (y != 0) { y = add(y, a); ++k; }
    return a == 0 ? 1 : k;
}

int FiniteModule::exponent() const {
    long long e = 1;
    for (int d : factors) e = std::lcm<long long>(e, d);
    return static_cast<int>(e);
}

ModuleElement make_element(const FiniteModule& m, std::vector<int> residues) {
    if (residues.size() != m.factors.size())
        fail(Errc::mixed_parents, "residue tuple length does not match module rank");
    for (size_t i = 0; i < residues.size(); ++i)
        residues[i] = ((residues[i] % m.factors[i]) + m.factors[i]) % m.factors[i];
    return ModuleElement{m, std::move(residues)};
}

static void require_same_module(const ModuleElement& a, const ModuleElement& b) {
    if (!a.module.same_shape(b.module))
        fail(Errc::mixed_parents, "elements belong to different modules");
}

ModuleElement element_add(const ModuleElement& a, const ModuleElement& b) {
    require_same_module(a, b);
    return ModuleElement{a.module,
                         a.module.decode(a.module.add(a.module.encode(a.residues),
                                                      a.module.encode(b.residues)))};
}

ModuleElement element_negate(const ModuleElement& a) {
    return ModuleElement{a.module, a.module.decode(a.module.neg(a.module.encode(a.residues)))};
}

ModuleElement element_scalar(int r, const ModuleElement& a) {
    return ModuleElement{a.module,
                         a.module.decode(a.module.scalar(r, a.module.encode(a.residues)))};
}

bool SubmoduleOfM::contains(Code c) const {
    return std::binary_search(elements.begin(), elements.end(), c);
}

namespace {

struct CodeGroupOps {
    const CodeGroup& g;
    std::uint64_t size() const { return g.size; }
    Code add(Code a, Code b) const { return g.add(a, b); }
    int endo_count() const { return static_cast<int>(g.endos.size()); }
    Code endo(int i, Code c) const { return g.endos[static_cast<size_t>(i)](c); }
};

} // namespace

std::vector<Code> closed_span(const CodeGroup& group, const std::vector<Code>& gens) {
    return detail::span_closed(CodeGroupOps{group}, gens);
}

std::vector<Code> extend_span(const CodeGroup& group, const std::vector<Code>& base,
                              const std::vector<Code>& extra) {
    detail::SpanBits scratch(group.size);
    return detail::span_extend(CodeGroupOps{group}, base, extra, scratch);
}

std::vector<SubmoduleOfM> enumerate_spans(const CodeGroup& group, std::uint64_t cap) {
    if (group.size > cap)
        fail(Errc::size_cap_exceeded, "enumeration space " + std::to_string(group.size) +
                                          " exceeds cap " + std::to_string(cap));
    auto entries = detail::span_enumerate(CodeGroupOps{group});
    std::vector<SubmoduleOfM> out;
    out.reserve(entries.size());
    for (auto& entry : entries)
        out.push_back(SubmoduleOfM{std::move(entry.elems), std::move(entry.gens)});
    return out;
}

namespace {

int order_in(const std::function<Code(Code, Code)>& add, Code x) {
    if (x == 0) return 1;
    int k = 1;
    Code y = x;
    while (y != 0) { y = add(y, x); ++k; }
    return k;
}

std::vector<int> prime_factors(int n) {
    std::vector<int> out;
    for (int p = 2; p * p <= n; ++p)
        while (n % p == 0) { if (out.empty() || out.back() != p) out.push_back(p); n /= p; }
    if (n > 1) out.push_back(n);
    return out;
}

bool is_prime_power(int n, int p) {
    while (n % p == 0) n /= p;
    return n == 1;
}

struct BasisAccum {
    std::vector<Code> generators;
    std::vector<int> orders;
};

// Cyclic decomposition of a p-group: an element of maximal order generates a
// pure cyclic subgroup, so the quotient splits and order-preserving lifts of
// a quotient basis complete a basis.
void p_group_basis(const std::function<Code(Code, Code)>& add,
                   const std::vector<Code>& elements, BasisAccum& out) {
    if (elements.size() <= 1) return;
    // elements are sorted, so the first hit at the maximal order wins ties
    Code best = 0;
    int best_order = 1;
    for (Code x : elements) {
        int o = order_in(add, x);
        if (o > best_order) { best = x; best_order = o; }
    }
    out.generators.push_back(best);
    out.orders.push_back(best_order);
    if (static_cast<std::uint64_t>(best_order) == elements.size()) return;

    std::vector<Code> cyc;
    Code y = 0;
    do { cyc.push_back(y); y = add(y, best); } while (y != 0);
    auto rep_map = std::make_shared<std::map<Code, Code>>();
    for (Code e : elements) {
        Code rep = e;
        for (Code c : cyc) rep = std::min(rep, add(e, c));
        (*rep_map)[e] = rep;
    }
    std::set<Code> qset;
    for (auto& [e, r] : *rep_map) qset.insert(r);
    std::vector<Code> qelements(qset.begin(), qset.end());
    std::function<Code(Code, Code)> qadd = [add, rep_map](Code a, Code b) {
        return rep_map->at(add(a, b));
    };
    BasisAccum sub;
    p_group_basis(qadd, qelements, sub);
    for (size_t i = 0; i < sub.generators.size(); ++i) {
        int target = sub.orders[i];
        Code lift = 0;
        bool found = false;
        for (Code c : cyc) {
            Code cand = add(sub.generators[i], c);
            if (order_in(add, cand) == target) {
                if (!found || cand < lift) { lift = cand; found = true; }
            }
        }
        if (!found)
            fail(Errc::not_a_submodule, "internal: no order-preserving lift (impure subgroup?)");
        out.generators.push_back(lift);
        out.orders.push_back(target);
    }
}

} // namespace

AbelianBasis abelian_basis(const CodeGroup& group, const std::vector<Code>& elements) {
    AbelianBasis out;
    if (elements.size() <= 1) return out;
    std::map<Code, int> order_of;
    std::set<int> primes;
    for (Code x : elements) {
        int o = order_in(group.add, x);
        order_of[x] = o;
        for (int p : prime_factors(o)) primes.insert(p);
    }
    BasisAccum acc;
    for (int p : primes) {
        std::vector<Code> part;
        for (Code x : elements)
            if (is_prime_power(order_of[x], p)) part.push_back(x);
        p_group_basis(group.add, part, acc);
    }
    out.generators = std::move(acc.generators);
    out.orders = std::move(acc.orders);
    return out;
}

static CodeGroup module_code_group(const FiniteModule& m) {
    CodeGroup g;
    g.size = m.size();
    g.add = [m](Code a, Code b) { return m.add(a, b); };
    return g;
}

std::vector<SubmoduleOfM> enumerate_submodules(const FiniteModule& m, const Caps& caps) {
    if (m.size() > caps.module_enum)
        fail(Errc::size_cap_exceeded, "|M| = " + std::to_string(m.size()) + " exceeds cap " +
                                          std::to_string(caps.module_enum));
    return enumerate_spans(module_code_group(m), caps.module_enum);
}

namespace {

std::uint64_t intersection_size(const std::vector<Code>& a, const std::vector<Code>& b,
                                std::uint64_t stop_after = UINT64_MAX) {
    std::uint64_t count = 0;
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) ++i;
        else if (b[j] < a[i]) ++j;
        else { ++count; ++i; ++j; if (count > stop_after) return count; }
    }
    return count;
}

bool squarefree(int d) {
    for (int p = 2; p * p <= d; ++p)
        if (d % (p * p) == 0) return false;
    return true;
}

} // namespace

SemisimplicityResult is_semisimple_module(const FiniteModule& m, const Caps& caps) {
    SemisimplicityResult res;
    res.closed_form = std::all_of(m.factors.begin(), m.factors.end(), squarefree);
    auto lattice = enumerate_submodules(m, caps);
    res.complement_of.assign(lattice.size(), -1);
    res.semisimple = true;
    const std::uint64_t total = m.size();
    for (size_t i = 0; i < lattice.size(); ++i) {
        bool found = false;
        for (size_t j = 0; j < lattice.size() && !found; ++j) {
            if (lattice[i].size() * lattice[j].size() != total) continue;
            if (intersection_size(lattice[i].elements, lattice[j].elements, 1) == 1) {
                res.complement_of[i] = static_cast<int>(j);
                found = true;
            }
        }
        if (!found) {
            res.semisimple = false;
            res.failing_submodule = static_cast<int>(i);
            break;
        }
    }
    return res;
}

InvertibilityResult mult_by_k_invertible(const FiniteModule& m, int k) {
    InvertibilityResult res;
    res.closed_form = true;
    for (int d : m.factors)
        if (gcd_int(k, d) != 1) res.closed_form = false;
    std::map<Code, Code> seen;
    res.invertible = true;
    for (Code c = 0; c < m.size(); ++c) {
        Code y = m.scalar(k % m.ring.modulus, c);
        auto [it, fresh] = seen.emplace(y, c);
        if (!fresh) {
            res.invertible = false;
            res.collision_a = it->second;
            res.collision_b = c;
            break;
        }
    }
    return res;
}

QuotientModule quotient_module(const FiniteModule& m, const SubmoduleOfM& n, const Caps& caps) {
    if (m.size() > caps.module_enum)
        fail(Errc::size_cap_exceeded, "|M| exceeds cap");
    // validate the submodule
    for (Code c : n.elements)
        if (c >= m.size()) fail(Errc::not_a_submodule, "submodule code out of range");
    if (n.elements.empty() || n.elements[0] != 0)
        fail(Errc::not_a_submodule, "submodule must contain zero");
    for (Code a : n.elements)
        for (Code b : n.elements)
            if (!n.contains(m.add(a, b)))
                fail(Errc::not_a_submodule, "set not closed under addition");

    // ascending scan assigns each coset its minimal representative once
    constexpr Code unassigned = ~Code{0};
    std::vector<Code> rep(m.size(), unassigned);
    std::vector<Code> reps;
    for (Code c = 0; c < m.size(); ++c) {
        if (rep[c] != unassigned) continue;
        reps.push_back(c);
        for (Code x : n.elements) rep[m.add(c, x)] = c;
    }

    CodeGroup q;
    q.size = m.size(); // codes live in M's code space; only reps are used
    q.add = [m, rep](Code a, Code b) { return rep[m.add(a, b)]; };
    AbelianBasis basis = abelian_basis(q, reps);

    // sort basis by descending order for a stable factor list
    std::vector<size_t> idx(basis.generators.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
        return basis.orders[a] > basis.orders[b];
    });
    std::vector<int> factors;
    for (size_t i : idx) factors.push_back(basis.orders[i]);

    QuotientModule out;
    out.module = make_module(m.ring.modulus, factors);
    if (out.module.size() * n.elements.size() != m.size())
        fail(Errc::not_a_submodule, "internal: quotient size mismatch");

    // discrete log: enumerate all basis combinations once
    std::map<Code, Code> combo_of;
    std::vector<int> tuple(factors.size(), 0);
    while (true) {
        Code sum = 0;
        for (size_t i = 0; i < idx.size(); ++i) {
            Code g = basis.generators[idx[i]];
            for (int t = 0; t < tuple[i]; ++t) sum = q.add(sum, g);
        }
        combo_of[sum] = out.module.encode(tuple);
        size_t pos = 0;
        while (pos < tuple.size()) {
            if (++tuple[pos] < factors[pos]) break;
            tuple[pos] = 0;
            ++pos;
        }
        if (pos == tuple.size()) break;
        if (tuple.empty()) break;
    }
    if (combo_of.size() != reps.size())
        fail(Errc::not_a_submodule, "internal: basis does not span the quotient");

    out.projection.assign(m.size(), 0);
    for (Code c = 0; c < m.size(); ++c) out.projection[c] = combo_of.at(rep[c]);
    return out;
}

bool is_projective_over_zn(const FiniteModule& m) {
    for (int d : m.factors)
        if (gcd_int(d, m.ring.modulus / d) != 1) return false;
    return true;
}

std::optional<ProjectivityWitness> projective_summand_search(const FiniteModule& m,
                                                             const Caps& caps) {
    ProjectivityWitness w;
    if (m.size() == 1) {
        w.projective = true;
        return w;
    }
    auto type_of = [](const CodeGroup& g, const std::vector<Code>& elems) {
        auto basis = abelian_basis(g, elems);
        std::sort(basis.orders.begin(), basis.orders.end());
        return basis.orders;
    };
    CodeGroup mg = module_code_group(m);
    std::vector<Code> all(m.size());
    std::iota(all.begin(), all.end(), Code{0});
    std::vector<int> target = type_of(mg, all);

    const int n = m.ring.modulus;
    for (int r = 1; r <= m.rank(); ++r) {
        std::uint64_t fsize = 1;
        for (int i = 0; i < r; ++i) fsize *= static_cast<std::uint64_t>(n);
        if (fsize > caps.module_enum) return std::nullopt;
        if (fsize % m.size() != 0) continue;
        FiniteModule free = make_module(n, std::vector<int>(r, n));
        CodeGroup fg = module_code_group(free);
        auto lattice = enumerate_spans(fg, caps.module_enum);
        for (const auto& x : lattice) {
            if (x.size() != m.size()) continue;
            if (type_of(fg, x.elements) != target) continue;
            for (const auto& y : lattice) {
                if (x.size() * y.size() != fsize) continue;
                if (intersection_size(x.elements, y.elements, 1) == 1) {
                    w.projective = true;
                    w.free_rank = r;
                    w.image = x.elements;
                    w.complement = y.elements;
                    return w;
                }
            }
        }
    }
    w.projective = false;
    return w;
}

bool is_pure_subgroup(const CodeGroup& group, int exponent, const std::vector<Code>& sub) {
    auto mul_by = [&](int k, Code x) {
        Code y = 0;
        for (int i = 0; i < k; ++i) y = group.add(y, x);
        return y;
    };
    for (int k = 2; k < exponent; ++k) {
        std::set<Code> k_sub;
        for (Code x : sub) k_sub.insert(mul_by(k, x));
        for (Code a = 0; a < group.size; ++a) {
            Code ka = mul_by(k, a);
            if (std::binary_search(sub.begin(), sub.end(), ka) && !k_sub.count(ka))
                return false;
        }
    }
    return true;
}

} // namespace gsm
