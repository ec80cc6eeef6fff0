#include "cde/poset/enumeration.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>

#include "cde/core/errors.hpp"
#include "cde/poset/isomorphism.hpp"

namespace cde {

namespace {

using Invariant = std::vector<std::array<std::uint8_t, 4>>;

Invariant invariant_of(const FinitePoset& p) {
    OrderRelation rel(p);
    Invariant inv;
    for (Elem e = 0; e < p.size(); ++e)
        inv.push_back({static_cast<std::uint8_t>(rel.down_set(e).count()), static_cast<std::uint8_t>(rel.up_set(e).count()),
                       static_cast<std::uint8_t>(p.lower_covers(e).size()),
                       static_cast<std::uint8_t>(p.upper_covers(e).size())});
    std::sort(inv.begin(), inv.end());
    return inv;
}

}  // namespace

std::vector<FinitePoset> enumerate_posets(std::size_t n) {
    if (n > 9) throw SizeError("poset enumeration supports at most 9 elements");
    std::vector<FinitePoset> level{FinitePoset(0, {})};
    for (std::size_t k = 0; k < n; ++k) {
        std::map<Invariant, std::vector<FinitePoset>> buckets;
        std::vector<FinitePoset> next;
        for (const auto& p : level) {
            std::vector<std::uint32_t> below(k, 0), above(k, 0);
            for (const auto& [a, b] : p.covers()) {
                below[b] |= 1u << a;
                above[a] |= 1u << b;
            }
            for (std::uint32_t ideal = 0; ideal < (1u << k); ++ideal) {
                bool closed = true;
                for (std::size_t e = 0; e < k && closed; ++e)
                    if ((ideal >> e & 1) && (below[e] & ~ideal)) closed = false;
                if (!closed) continue;
                std::vector<Cover> covers = p.covers();
                for (std::size_t e = 0; e < k; ++e)
                    if ((ideal >> e & 1) && !(above[e] & ideal)) covers.emplace_back(static_cast<Elem>(e), static_cast<Elem>(k));
                FinitePoset q(k + 1, std::move(covers));
                auto& bucket = buckets[invariant_of(q)];
                if (std::none_of(bucket.begin(), bucket.end(), [&](const FinitePoset& r) { return isomorphic(q, r); })) {
                    bucket.push_back(q);
                    next.push_back(std::move(q));
                }
            }
        }
        level = std::move(next);
    }
    return level;
}

std::vector<FinitePoset> enumerate_forests(std::size_t n) {
    if (n > 16) throw SizeError("forest enumeration supports at most 16 elements");
    // Canonical strings: a tree is "(" + forest + ")", a forest is its
    // trees in sorted order.
    std::vector<std::set<std::string>> forests(n + 1);
    forests[0].insert("");
    std::vector<std::vector<std::string>> trees(n + 1);
    for (std::size_t m = 1; m <= n; ++m) {
        for (const auto& f : forests[m - 1]) trees[m].push_back("(" + f + ")");
        std::sort(trees[m].begin(), trees[m].end());
        // multisets of trees, nondecreasing in (size, string)
        std::function<void(std::size_t, std::size_t, std::size_t, std::string)> rec =
            [&](std::size_t left, std::size_t min_size, std::size_t min_index, std::string acc) {
                if (left == 0) {
                    forests[m].insert(acc);
                    return;
                }
                for (std::size_t s = min_size; s <= left; ++s)
                    for (std::size_t i = (s == min_size ? min_index : 0); i < trees[s].size(); ++i)
                        rec(left - s, s, i, acc + trees[s][i]);
            };
        rec(m, 1, 0, "");
    }
    std::vector<FinitePoset> out;
    for (const auto& f : forests[n]) {
        std::vector<Cover> covers;
        std::vector<Elem> stack;
        Elem next = 0;
        // Each "(" opens a node whose parent is the node below it on the stack.
        for (char c : f) {
            if (c == '(') {
                if (!stack.empty()) covers.emplace_back(next, stack.back());
                stack.push_back(next++);
            } else {
                stack.pop_back();
            }
        }
        out.emplace_back(n, std::move(covers));
    }
    return out;
}

}  // namespace cde
