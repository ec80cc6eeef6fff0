#include "cde/poset/statistics.hpp"

#include <algorithm>
#include <unordered_map>

#include "cde/core/capacity.hpp"
#include "cde/core/errors.hpp"
#include "cde/poset/builders.hpp"
#include "cde/poset/isomorphism.hpp"

namespace cde {
namespace {

void require_nonempty(const FinitePoset& p, const char* what) {
    if (p.empty()) throw EmptyPosetError(std::string(what) + " of the empty poset");
}

BigRational weighted_down_degree(const FinitePoset& p, const std::vector<BigInt>& weight) {
    BigInt num = 0, den = 0;
    for (Elem e = 0; e < p.size(); ++e) {
        den += weight[e];
        num += weight[e] * static_cast<unsigned long>(p.lower_covers(e).size());
    }
    return BigRational(num, den);
}

// Sum of f over the elements of a bitset, optionally excluding one index.
BigInt sum_over(const boost::dynamic_bitset<>& set, const std::vector<BigInt>& f, std::size_t skip) {
    BigInt s = 0;
    for (auto i = set.find_first(); i != boost::dynamic_bitset<>::npos; i = set.find_next(i))
        if (i != skip) s += f[i];
    return s;
}

}  // namespace

BigRational expectation_X(const FinitePoset& p) {
    require_nonempty(p, "expectation_X");
    return BigRational(BigInt(static_cast<unsigned long>(p.edge_count())),
                       BigInt(static_cast<unsigned long>(p.size())));
}

std::vector<BigInt> chains_from_bottom(const FinitePoset& p) {
    std::vector<BigInt> down(p.size(), BigInt(0));
    for (Elem v : p.topological_order()) {
        if (p.lower_covers(v).empty()) down[v] = 1;
        for (Elem c : p.lower_covers(v)) down[v] += down[c];
    }
    return down;
}

std::vector<BigInt> chains_to_top(const FinitePoset& p) {
    std::vector<BigInt> up(p.size(), BigInt(0));
    const auto& topo = p.topological_order();
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
        Elem v = *it;
        if (p.upper_covers(v).empty()) up[v] = 1;
        for (Elem c : p.upper_covers(v)) up[v] += up[c];
    }
    return up;
}

BigRational expectation_Y(const FinitePoset& p) {
    require_nonempty(p, "expectation_Y");
    auto down = chains_from_bottom(p);
    auto up = chains_to_top(p);
    std::vector<BigInt> through(p.size());
    for (Elem e = 0; e < p.size(); ++e) through[e] = down[e] * up[e];
    return weighted_down_degree(p, through);
}

std::vector<BigInt> multichain_weights(const FinitePoset& p, unsigned m) {
    if (m == 0) throw DomainError("multichains need m >= 1");
    const std::size_t n = p.size();
    OrderRelation rel(p);
    // g[q]: (j)-multichains with top q.  D[j][q]: j-multichains strictly below q.
    // h[q]: (j)-multichains with bottom q.  U[j][q]: j-multichains weakly above q.
    std::vector<std::vector<BigInt>> D(m, std::vector<BigInt>(n)), U(m, std::vector<BigInt>(n));
    std::vector<BigInt> g(n, BigInt(1)), h(n, BigInt(1));
    for (Elem q = 0; q < n; ++q) D[0][q] = U[0][q] = 1;
    for (unsigned j = 1; j < m; ++j) {
        for (Elem q = 0; q < n; ++q) {
            D[j][q] = sum_over(rel.down_set(q), g, q);
            U[j][q] = sum_over(rel.up_set(q), h, n);
        }
        for (Elem q = 0; q < n; ++q) {
            g[q] += D[j][q];
            h[q] = U[j][q];
        }
    }
    std::vector<BigInt> w(n, BigInt(0));
    for (Elem q = 0; q < n; ++q)
        for (unsigned k = 1; k <= m; ++k) w[q] += D[k - 1][q] * U[m - k][q];
    return w;
}

BigRational expectation_Xm(const FinitePoset& p, unsigned m) {
    require_nonempty(p, "expectation_Xm");
    if (m == 1) return expectation_X(p);
    return weighted_down_degree(p, multichain_weights(p, m));
}

bool is_CDE(const FinitePoset& p) { return expectation_X(p) == expectation_Y(p); }

bool is_mCDE_upto(const FinitePoset& p, unsigned M) {
    const BigRational first = expectation_X(p);
    for (unsigned m = 2; m <= M; ++m)
        if (expectation_Xm(p, m) != first) return false;
    return true;
}

PosetStats stats(const FinitePoset& p) {
    require_nonempty(p, "stats");
    auto down = chains_from_bottom(p);
    auto up = chains_to_top(p);
    std::vector<BigInt> through(p.size());
    for (Elem e = 0; e < p.size(); ++e) through[e] = down[e] * up[e];

    PosetStats s;
    s.EX = expectation_X(p);
    s.EY = weighted_down_degree(p, through);
    s.edge_count = p.edge_count();
    s.maximal_chain_count = 0;
    for (Elem e : p.maximal_elements()) s.maximal_chain_count += down[e];

    // Shortest and longest saturated chain from a minimal element.
    std::vector<std::size_t> lo(p.size(), 0), hi(p.size(), 0);
    for (Elem v : p.topological_order()) {
        bool first = true;
        for (Elem c : p.lower_covers(v)) {
            lo[v] = first ? lo[c] + 1 : std::min(lo[v], lo[c] + 1);
            hi[v] = std::max(hi[v], hi[c] + 1);
            first = false;
        }
    }
    std::optional<std::size_t> rank;
    bool graded = true;
    for (Elem e : p.maximal_elements()) {
        if (lo[e] != hi[e] || (rank && *rank != lo[e])) graded = false;
        rank = lo[e];
    }
    if (graded) s.rank = rank;
    return s;
}

bool is_forest(const FinitePoset& p) {
    for (Elem e = 0; e < p.size(); ++e)
        if (p.upper_covers(e).size() > 1) return false;
    return true;
}

namespace {

std::vector<BigInt> forest_down_sizes(const FinitePoset& p) {
    std::vector<BigInt> size(p.size(), BigInt(1));
    for (Elem v : p.topological_order())
        for (Elem c : p.lower_covers(v)) size[v] += size[c];
    return size;
}

}  // namespace

BigInt forest_linear_extension_count(const FinitePoset& p) {
    if (!is_forest(p)) throw DomainError("hook-length formula needs a forest poset");
    BigInt denom = 1;
    for (const auto& s : forest_down_sizes(p)) denom *= s;
    return factorial(static_cast<unsigned>(p.size())) / denom;
}

BigInt ideal_linear_extension_count(const FinitePoset& p) {
    const std::size_t n = p.size();
    if (n > 63) throw CapacityError("linear extension DP supports at most 63 elements");
    std::vector<std::uint64_t> below(n, 0);
    for (Elem e = 0; e < n; ++e)
        for (Elem c : p.lower_covers(e)) below[e] |= std::uint64_t{1} << c;
    std::unordered_map<std::uint64_t, BigInt> level{{0, BigInt(1)}};
    std::size_t visited = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::unordered_map<std::uint64_t, BigInt> next;
        for (const auto& [I, count] : level)
            for (Elem e = 0; e < n; ++e) {
                const std::uint64_t bit = std::uint64_t{1} << e;
                if ((I & bit) || (below[e] & ~I)) continue;
                next[I | bit] += count;
            }
        visited += next.size();
        check_capacity(visited, "linear extension DP");
        level = std::move(next);
    }
    return level.empty() ? BigInt(1) : level.begin()->second;
}

BigInt linear_extension_count(const FinitePoset& p) {
    if (is_forest(p)) return forest_linear_extension_count(p);
    return ideal_linear_extension_count(p);
}

FinitePoset quotient_cover(const FinitePoset& p, Elem i, Elem j) {
    if (i >= p.size() || j >= p.size() || !p.is_cover(i, j))
        throw NotCoverError(std::to_string(i) + " is not covered by " + std::to_string(j));
    const std::size_t n = p.size();
    OrderRelation rel(p);
    auto relabel = [&](std::size_t x) -> std::size_t {
        if (x == j) return i;
        return x > j ? x - 1 : x;
    };
    // x <= y in the quotient iff x <= y, or x <= j and i <= y.
    std::vector<boost::dynamic_bitset<>> up(n - 1, boost::dynamic_bitset<>(n - 1));
    for (std::size_t x = 0; x < n; ++x) {
        boost::dynamic_bitset<> s = rel.up_set(static_cast<Elem>(x));
        if (rel.leq(static_cast<Elem>(x), j)) s |= rel.up_set(i);
        for (auto y = s.find_first(); y != boost::dynamic_bitset<>::npos; y = s.find_next(y))
            up[relabel(x)].set(relabel(y));
    }
    std::vector<Cover> covers;
    for (std::size_t x = 0; x + 1 < n; ++x) {
        boost::dynamic_bitset<> strict = up[x];
        strict.reset(x);
        boost::dynamic_bitset<> implied(n - 1);
        for (auto y = strict.find_first(); y != boost::dynamic_bitset<>::npos; y = strict.find_next(y)) {
            boost::dynamic_bitset<> above = up[y];
            above.reset(y);
            implied |= above;
        }
        strict -= implied;
        for (auto y = strict.find_first(); y != boost::dynamic_bitset<>::npos; y = strict.find_next(y))
            covers.emplace_back(static_cast<Elem>(x), static_cast<Elem>(y));
    }
    std::vector<std::string> labels;
    for (std::size_t x = 0; x < n; ++x) {
        if (x == j) continue;
        if (x == i) labels.push_back("{" + p.label(i) + "," + p.label(j) + "}");
        else labels.push_back(p.label(static_cast<Elem>(x)));
    }
    return FinitePoset(n - 1, std::move(covers), std::move(labels));
}

BigRational hook_cancellation_ratio(const FinitePoset& p, Elem i, Elem j) {
    if (!is_forest(p)) throw DomainError("hook cancellation needs a forest poset");
    if (i >= p.size() || j >= p.size() || !p.is_cover(i, j))
        throw NotCoverError(std::to_string(i) + " is not covered by " + std::to_string(j));
    auto size = forest_down_sizes(p);
    BigRational r(size[i], BigInt(static_cast<unsigned long>(p.size())));
    // In a forest the elements above i form the chain of its ancestors.
    for (Elem k = j;;) {
        r *= BigRational(size[k], size[k] - 1);
        if (p.upper_covers(k).empty()) break;
        k = p.upper_covers(k).front();
    }
    return r;
}

bool toggle_symmetry_check(const FinitePoset& base, unsigned m) {
    if (base.empty()) throw EmptyPosetError("toggle symmetry of the empty poset");
    IdealLattice J = build_ideal_lattice(base);
    auto w = multichain_weights(J.lattice, m);
    for (Elem e = 0; e < base.size(); ++e) {
        std::uint64_t above = 0, below = 0;
        for (Elem c : base.upper_covers(e)) above |= std::uint64_t{1} << c;
        for (Elem c : base.lower_covers(e)) below |= std::uint64_t{1} << c;
        const std::uint64_t bit = std::uint64_t{1} << e;
        BigInt in_max = 0, in_min = 0;
        for (std::size_t k = 0; k < J.ideals.size(); ++k) {
            const std::uint64_t I = J.ideals[k];
            if ((I & bit) && !(I & above)) in_max += w[k];
            if (!(I & bit) && (below & ~I) == 0) in_min += w[k];
        }
        if (in_max != in_min) return false;
    }
    return true;
}

std::optional<BigRational> self_dual_regular_check(const FinitePoset& p, std::size_t node_budget) {
    if (p.empty()) throw EmptyPosetError("self_dual_regular_check of the empty poset");
    const std::size_t delta = p.upper_covers(0).size() + p.lower_covers(0).size();
    for (Elem e = 1; e < p.size(); ++e)
        if (p.upper_covers(e).size() + p.lower_covers(e).size() != delta) return std::nullopt;
    if (!isomorphic(p, dual(p), node_budget)) return std::nullopt;
    return BigRational(BigInt(static_cast<unsigned long>(delta)), BigInt(2));
}

}  // namespace cde
