#pragma once

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "gsm/error.hpp"

namespace gsm::detail {

using SpanCode = std::uint64_t;

struct SpanBits {
    std::vector<std::uint64_t> words;
    explicit SpanBits(std::uint64_t n) : words((n + 63) / 64, 0) {}
    bool test(SpanCode c) const { return (words[c >> 6] >> (c & 63)) & 1; }
    void set(SpanCode c) { words[c >> 6] |= std::uint64_t(1) << (c & 63); }
    void reset(std::uint64_t n) { words.assign((n + 63) / 64, 0); }
};

// Ops requirements: size(), add(a, b), endo_count(), endo(i, c).
//
// Closure worker: list/bits must already hold a subgroup closed under the
// endos, and work holds the pending generators (consumed; caller may reuse
// its capacity). Each generator extends by whole cosets S + kx, so the
// work is linear in the output; endo images of new elements are queued.
template <class Ops>
void span_close(const Ops& ops, std::vector<SpanCode>& list, SpanBits& in,
                std::vector<SpanCode>& work) {
    while (!work.empty()) {
        SpanCode x = work.back();
        work.pop_back();
        if (in.test(x)) continue;
        const std::size_t base = list.size();
        const std::size_t first_new = list.size();
        SpanCode k = x;
        while (!in.test(k)) {
            for (std::size_t i = 0; i < base; ++i) {
                SpanCode e = ops.add(list[i], k);
                in.set(e);
                list.push_back(e);
            }
            k = ops.add(k, x);
        }
        for (std::size_t i = first_new; i < list.size(); ++i)
            for (int f = 0; f < ops.endo_count(); ++f) work.push_back(ops.endo(f, list[i]));
    }
}

template <class Ops>
std::vector<SpanCode> span_closed(const Ops& ops, const std::vector<SpanCode>& gens) {
    SpanBits in(ops.size());
    std::vector<SpanCode> list;
    in.set(0);
    list.push_back(0);
    std::vector<SpanCode> work = gens;
    span_close(ops, list, in, work);
    std::sort(list.begin(), list.end());
    return list;
}

template <class Ops>
std::vector<SpanCode> span_extend(const Ops& ops, const std::vector<SpanCode>& base,
                                  const std::vector<SpanCode>& extra, SpanBits& scratch) {
    scratch.reset(ops.size());
    std::vector<SpanCode> list;
    list.reserve(base.size() + 16);
    for (SpanCode b : base) {
        scratch.set(b);
        list.push_back(b);
    }
    if (!scratch.test(0)) {
        scratch.set(0);
        list.push_back(0);
    }
    std::vector<SpanCode> work = extra;
    span_close(ops, list, scratch, work);
    std::sort(list.begin(), list.end());
    return list;
}

struct SpanEntry {
    std::vector<SpanCode> elems;
    std::vector<SpanCode> gens;
};

/// All closed subsets, sorted by size then element list. Deduplication is
/// by membership bitset, so element lists stay unsorted until the end.
template <class Ops>
std::vector<SpanEntry> span_enumerate(const Ops& ops) {
    struct Entry {
        std::vector<SpanCode> elems; // unsorted during enumeration
        std::vector<std::uint64_t> bits;
        std::vector<SpanCode> gens;
    };
    std::vector<Entry> found;
    std::unordered_map<std::uint64_t, std::vector<std::size_t>> by_hash;
    auto hash_bits = [](const std::vector<std::uint64_t>& words) {
        std::uint64_t h = 1469598103934665603ull;
        for (std::uint64_t w : words) h = (h ^ (w + 0x9e3779b97f4a7c15ull)) * 1099511628211ull;
        return h;
    };

    SpanBits covered(ops.size()), scratch(ops.size());
    std::vector<SpanCode> list, queue;

    // seed: the zero span
    list.clear();
    scratch.reset(ops.size());
    scratch.set(0);
    list.push_back(0);
    span_close(ops, list, scratch, queue);
    found.push_back(Entry{list, scratch.words, {}});
    by_hash[hash_bits(scratch.words)].push_back(0);

    std::vector<std::size_t> work = {0};
    while (!work.empty()) {
        const std::size_t wi = work.back();
        work.pop_back();
        const std::vector<SpanCode> w = found[wi].elems;  // found may grow below
        const std::vector<std::uint64_t> wbits = found[wi].bits;
        const std::vector<SpanCode> gens = found[wi].gens;
        covered.words = wbits;
        for (SpanCode x = 0; x < ops.size(); ++x) {
            if (covered.test(x)) continue;
            // every element of the coset x + W spans the same extension
            for (SpanCode c : w) covered.set(ops.add(x, c));
            scratch.words = wbits;
            list = w;
            queue.clear();
            queue.push_back(x);
            span_close(ops, list, scratch, queue);
            auto& bucket = by_hash[hash_bits(scratch.words)];
            bool fresh = true;
            for (std::size_t i : bucket)
                if (found[i].bits == scratch.words) { fresh = false; break; }
            if (fresh) {
                std::vector<SpanCode> egens = gens;
                egens.push_back(x);
                bucket.push_back(found.size());
                work.push_back(found.size());
                found.push_back(Entry{list, scratch.words, std::move(egens)});
            }
        }
    }
    std::vector<SpanEntry> out;
    out.reserve(found.size());
    for (auto& entry : found) {
        std::sort(entry.elems.begin(), entry.elems.end());
        out.push_back(SpanEntry{std::move(entry.elems), std::move(entry.gens)});
    }
    std::sort(out.begin(), out.end(), [](const SpanEntry& a, const SpanEntry& b) {
        if (a.elems.size() != b.elems.size()) return a.elems.size() < b.elems.size();
        return a.elems < b.elems;
    });
    return out;
}

} // namespace gsm::detail
