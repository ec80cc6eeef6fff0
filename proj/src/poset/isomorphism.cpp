#include "cde/poset/isomorphism.hpp"

#include <algorithm>
#include <map>

#include "cde/core/errors.hpp"

namespace cde {
namespace {

class IsoSearch {
public:
    IsoSearch(const FinitePoset& p, const FinitePoset& q, std::size_t budget)
        : p_(p), q_(q), np_(p.size()), budget_(budget) {
        const std::size_t n = p.size() + q.size();
        up_.resize(n);
        down_.resize(n);
        for (const auto& [a, b] : p.covers()) {
            up_[a].push_back(b);
            down_[b].push_back(a);
        }
        for (const auto& [a, b] : q.covers()) {
            up_[a + np_].push_back(b + np_);
            down_[b + np_].push_back(a + np_);
        }
    }

    std::optional<std::vector<Elem>> run() {
        if (p_.size() != q_.size() || p_.edge_count() != q_.edge_count()) return std::nullopt;
        std::vector<int> colour(up_.size(), 0);
        return search(std::move(colour));
    }

private:
    // Refines to a stable colouring; false if some class is unbalanced.
    bool refine(std::vector<int>& colour) const {
        const std::size_t n = colour.size();
        std::size_t classes = 0;
        for (;;) {
            std::vector<std::vector<int>> sig(n);
            for (std::size_t v = 0; v < n; ++v) {
                std::vector<int> u, d;
                for (Elem w : up_[v]) u.push_back(colour[w]);
                for (Elem w : down_[v]) d.push_back(colour[w]);
                std::sort(u.begin(), u.end());
                std::sort(d.begin(), d.end());
                auto& s = sig[v];
                s.push_back(colour[v]);
                s.push_back(static_cast<int>(u.size()));
                s.insert(s.end(), u.begin(), u.end());
                s.push_back(-1);
                s.insert(s.end(), d.begin(), d.end());
            }
            std::map<std::vector<int>, int> names;
            for (const auto& s : sig) names.emplace(s, 0);
            int next = 0;
            for (auto& [s, id] : names) id = next++;
            for (std::size_t v = 0; v < n; ++v) colour[v] = names[sig[v]];
            if (names.size() == classes) break;
            classes = names.size();
        }
        std::vector<int> balance(classes, 0);
        for (std::size_t v = 0; v < n; ++v) balance[colour[v]] += v < np_ ? 1 : -1;
        return std::all_of(balance.begin(), balance.end(), [](int b) { return b == 0; });
    }

    std::optional<std::vector<Elem>> search(std::vector<int> colour) {
        if (++nodes_ > budget_) throw CapacityError("isomorphism search exceeded its node budget");
        if (!refine(colour)) return std::nullopt;
        const std::size_t n = colour.size();
        std::vector<int> count(n, 0);
        for (std::size_t v = 0; v < np_; ++v) ++count[colour[v]];
        // Pick the smallest non-singleton class.
        int target = -1;
        for (std::size_t c = 0; c < n; ++c)
            if (count[c] > 1 && (target < 0 || count[c] < count[target])) target = static_cast<int>(c);
        if (target < 0) return extract(colour);

        Elem v = 0;
        while (colour[v] != target) ++v;
        const int fresh = *std::max_element(colour.begin(), colour.end()) + 1;
        for (std::size_t w = np_; w < n; ++w) {
            if (colour[w] != target) continue;
            std::vector<int> next = colour;
            next[v] = next[w] = fresh;
            if (auto found = search(std::move(next))) return found;
        }
        return std::nullopt;
    }

    std::optional<std::vector<Elem>> extract(const std::vector<int>& colour) const {
        std::vector<Elem> by_colour(colour.size());
        for (std::size_t w = np_; w < colour.size(); ++w) by_colour[colour[w]] = static_cast<Elem>(w - np_);
        std::vector<Elem> map(np_);
        for (std::size_t v = 0; v < np_; ++v) map[v] = by_colour[colour[v]];
        for (const auto& [a, b] : p_.covers())
            if (!q_.is_cover(map[a], map[b])) return std::nullopt;
        return map;
    }

    const FinitePoset& p_;
    const FinitePoset& q_;
    std::size_t np_;
    std::size_t budget_;
    std::size_t nodes_ = 0;
    std::vector<std::vector<Elem>> up_, down_;
};

}  // namespace

std::optional<std::vector<Elem>> find_isomorphism(const FinitePoset& p, const FinitePoset& q,
                                                  std::size_t node_budget) {
    return IsoSearch(p, q, node_budget).run();
}

bool isomorphic(const FinitePoset& p, const FinitePoset& q, std::size_t node_budget) {
    return find_isomorphism(p, q, node_budget).has_value();
}

}  // namespace cde
