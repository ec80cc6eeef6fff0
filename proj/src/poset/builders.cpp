#include "cde/poset/builders.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <unordered_map>

#include "cde/core/capacity.hpp"
#include "cde/core/errors.hpp"

namespace cde {
namespace {

void require_positive(std::size_t v, const char* what) {
    if (v == 0) throw SizeError(std::string(what) + " requires a positive size");
}

std::vector<std::string> labels_or_ids(const FinitePoset& p) {
    std::vector<std::string> r(p.size());
    for (Elem e = 0; e < p.size(); ++e) r[e] = p.label(e);
    return r;
}

}  // namespace

FinitePoset chain(std::size_t a) {
    require_positive(a, "chain");
    check_capacity(a, "chain");
    std::vector<Cover> covers;
    for (Elem i = 0; i + 1 < a; ++i) covers.emplace_back(i, i + 1);
    return FinitePoset(a, std::move(covers));
}

FinitePoset antichain(std::size_t a) {
    require_positive(a, "antichain");
    check_capacity(a, "antichain");
    return FinitePoset(a, {});
}

FinitePoset boolean_lattice(std::size_t n) {
    require_positive(n, "boolean");
    if (n >= 40) throw CapacityError("boolean lattice of rank " + std::to_string(n));
    const std::size_t size = std::size_t{1} << n;
    check_capacity(size, "boolean lattice");
    std::vector<Cover> covers;
    std::vector<std::string> labels(size);
    for (std::size_t s = 0; s < size; ++s) {
        std::string l = "{";
        for (std::size_t i = 0; i < n; ++i) {
            if (s >> i & 1) {
                if (l.size() > 1) l += ",";
                l += std::to_string(i + 1);
            } else {
                covers.emplace_back(static_cast<Elem>(s), static_cast<Elem>(s | (std::size_t{1} << i)));
            }
        }
        labels[s] = l + "}";
    }
    return FinitePoset(size, std::move(covers), std::move(labels));
}

FinitePoset product(const FinitePoset& p, const FinitePoset& q) {
    const std::size_t n = p.size() * q.size();
    check_capacity(n, "product");
    const std::size_t m = q.size();
    std::vector<Cover> covers;
    for (const auto& [a, b] : p.covers())
        for (Elem y = 0; y < m; ++y) covers.emplace_back(static_cast<Elem>(a * m + y), static_cast<Elem>(b * m + y));
    for (Elem x = 0; x < p.size(); ++x)
        for (const auto& [a, b] : q.covers()) covers.emplace_back(static_cast<Elem>(x * m + a), static_cast<Elem>(x * m + b));
    std::vector<std::string> labels(n);
    for (Elem x = 0; x < p.size(); ++x)
        for (Elem y = 0; y < m; ++y) labels[x * m + y] = "(" + p.label(x) + "," + q.label(y) + ")";
    return FinitePoset(n, std::move(covers), std::move(labels));
}

FinitePoset disjoint_union(const FinitePoset& p, const FinitePoset& q) {
    const std::size_t n = p.size() + q.size();
    check_capacity(n, "disjoint union");
    const Elem off = static_cast<Elem>(p.size());
    std::vector<Cover> covers = p.covers();
    for (const auto& [a, b] : q.covers()) covers.emplace_back(a + off, b + off);
    std::vector<std::string> labels = labels_or_ids(p);
    for (Elem e = 0; e < q.size(); ++e) labels.push_back(q.label(e) + "'");
    return FinitePoset(n, std::move(covers), std::move(labels));
}

FinitePoset ordinal_sum(const FinitePoset& p, const FinitePoset& q) {
    const std::size_t n = p.size() + q.size();
    check_capacity(n, "ordinal sum");
    const Elem off = static_cast<Elem>(p.size());
    std::vector<Cover> covers = p.covers();
    for (const auto& [a, b] : q.covers()) covers.emplace_back(a + off, b + off);
    for (Elem top : p.maximal_elements())
        for (Elem bottom : q.minimal_elements()) covers.emplace_back(top, bottom + off);
    std::vector<std::string> labels = labels_or_ids(p);
    for (Elem e = 0; e < q.size(); ++e) labels.push_back(q.label(e) + "'");
    return FinitePoset(n, std::move(covers), std::move(labels));
}

FinitePoset dual(const FinitePoset& p) {
    std::vector<Cover> covers;
    covers.reserve(p.edge_count());
    for (const auto& [a, b] : p.covers()) covers.emplace_back(b, a);
    return FinitePoset(p.size(), std::move(covers), p.labels());
}

FinitePoset pabcd(std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
    if (a == 0 || b == 0 || c == 0 || d == 0) throw SizeError("pabcd requires positive parameters");
    const std::size_t n = a + b + c + d;
    check_capacity(n, "pabcd");
    std::vector<Cover> covers;
    std::vector<std::string> labels;
    const Elem w0 = 0, x0 = static_cast<Elem>(a), y0 = static_cast<Elem>(a + b),
               z0 = static_cast<Elem>(a + b + c);
    auto add_chain = [&](Elem start, std::size_t len, const std::string& name) {
        for (std::size_t i = 0; i < len; ++i) {
            labels.push_back(name + std::to_string(i + 1));
            if (i + 1 < len) covers.emplace_back(start + i, start + i + 1);
        }
    };
    add_chain(w0, a, "w");
    add_chain(x0, b, "x");
    add_chain(y0, c, "y");
    add_chain(z0, d, "z");
    covers.emplace_back(x0 - 1, x0);
    covers.emplace_back(x0 - 1, y0);
    covers.emplace_back(y0 - 1, z0);
    covers.emplace_back(z0 - 1, z0);
    return FinitePoset(n, std::move(covers), std::move(labels));
}

FinitePoset tamari(std::size_t n) {
    if (n < 3) throw SizeError("tamari requires n >= 3");
    if (n > 20) throw CapacityError("tamari(" + std::to_string(n) + ") is too large");
    using Diagonal = std::pair<int, int>;
    using Triangulation = std::vector<Diagonal>;

    // Triangulations of the polygon on consecutive vertices lo..hi.
    std::map<std::pair<int, int>, std::vector<Triangulation>> memo;
    std::function<const std::vector<Triangulation>&(int, int)> tri = [&](int lo, int hi)
        -> const std::vector<Triangulation>& {
        auto key = std::make_pair(lo, hi);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        std::vector<Triangulation> out;
        if (hi - lo < 2) {
            out.emplace_back();
        } else {
            for (int apex = lo + 1; apex < hi; ++apex) {
                const auto& left = tri(lo, apex);
                const auto& right = tri(apex, hi);
                for (const auto& l : left)
                    for (const auto& r : right) {
                        Triangulation t = l;
                        t.insert(t.end(), r.begin(), r.end());
                        if (apex - lo >= 2) t.emplace_back(lo, apex);
                        if (hi - apex >= 2) t.emplace_back(apex, hi);
                        out.push_back(std::move(t));
                    }
            }
        }
        check_capacity(out.size(), "tamari");
        return memo.emplace(key, std::move(out)).first->second;
    };

    std::vector<Triangulation> all = tri(1, static_cast<int>(n));
    for (auto& t : all) std::sort(t.begin(), t.end());
    std::sort(all.begin(), all.end());
    std::map<Triangulation, Elem> index;
    for (std::size_t i = 0; i < all.size(); ++i) index.emplace(all[i], static_cast<Elem>(i));

    const int N = static_cast<int>(n);
    std::vector<Cover> covers;
    std::vector<std::string> labels;
    for (std::size_t idx = 0; idx < all.size(); ++idx) {
        const Triangulation& t = all[idx];
        std::vector<std::vector<char>> edge(N + 1, std::vector<char>(N + 1, 0));
        auto mark = [&](int u, int v) { edge[u][v] = edge[v][u] = 1; };
        for (int v = 1; v < N; ++v) mark(v, v + 1);
        mark(1, N);
        for (const auto& [u, v] : t) mark(u, v);
        std::string l;
        for (const auto& [u, v] : t) {
            if (!l.empty()) l += " ";
            l += std::to_string(u) + "-" + std::to_string(v);
        }
        labels.push_back(l);
        for (std::size_t k = 0; k < t.size(); ++k) {
            const auto [i, kk] = t[k];
            int inner = 0, outer = 0;
            for (int v = 1; v <= N; ++v) {
                if (v == i || v == kk || !edge[i][v] || !edge[kk][v]) continue;
                if (v > i && v < kk) inner = v;
                else outer = v;
            }
            if (outer > kk) {
                Triangulation flipped = t;
                flipped[k] = {inner, outer};
                std::sort(flipped.begin(), flipped.end());
                covers.emplace_back(static_cast<Elem>(idx), index.at(flipped));
            }
        }
    }
    return FinitePoset(all.size(), std::move(covers), std::move(labels));
}

FinitePoset m3_lattice() {
    return FinitePoset(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}}, {"0", "a", "b", "c", "1"});
}

IdealLattice build_ideal_lattice(const FinitePoset& base) {
    const std::size_t n = base.size();
    if (n > 63) throw CapacityError("order ideal lattice supports at most 63 base elements");
    std::vector<std::uint64_t> below(n, 0);
    for (Elem e = 0; e < n; ++e)
        for (Elem c : base.lower_covers(e)) below[e] |= std::uint64_t{1} << c;

    std::vector<std::uint64_t> ideals{0};
    std::unordered_map<std::uint64_t, Elem> index{{0, 0}};
    std::vector<Cover> covers;
    for (std::size_t head = 0; head < ideals.size(); ++head) {
        const std::uint64_t I = ideals[head];
        for (Elem e = 0; e < n; ++e) {
            const std::uint64_t bit = std::uint64_t{1} << e;
            if ((I & bit) || (below[e] & ~I)) continue;
            const std::uint64_t J = I | bit;
            auto [it, inserted] = index.emplace(J, static_cast<Elem>(ideals.size()));
            if (inserted) {
                ideals.push_back(J);
                check_capacity(ideals.size(), "order ideal lattice");
            }
            covers.emplace_back(static_cast<Elem>(head), it->second);
        }
    }
    std::vector<std::string> labels;
    labels.reserve(ideals.size());
    for (std::uint64_t I : ideals) {
        std::string l = "{";
        for (Elem e = 0; e < n; ++e)
            if (I >> e & 1) {
                if (l.size() > 1) l += ",";
                l += base.label(e);
            }
        labels.push_back(l + "}");
    }
    return IdealLattice{FinitePoset(ideals.size(), std::move(covers), std::move(labels)), std::move(ideals)};
}

FinitePoset order_ideal_lattice(const FinitePoset& base) { return build_ideal_lattice(base).lattice; }

}  // namespace cde
