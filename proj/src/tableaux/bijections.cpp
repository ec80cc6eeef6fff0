#include "cde/tableaux/bijections.hpp"

#include <algorithm>
#include <map>

#include "cde/core/capacity.hpp"
#include "cde/core/errors.hpp"

namespace cde {
namespace {

// Shape occupied by the cells whose (single) value satisfies pred.
template <typename Pred>
Partition occupied(const std::vector<std::vector<int>>& values, Pred pred) {
    std::vector<int> parts;
    for (const auto& row : values) {
        int len = 0;
        while (len < static_cast<int>(row.size()) && pred(row[len])) ++len;
        for (int j = len; j < static_cast<int>(row.size()); ++j)
            if (pred(row[j])) throw MalformedInputError("values do not occupy a partition shape");
        parts.push_back(len);
    }
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    return Partition(parts);
}

Cell single_difference(const Partition& big, const Partition& small) {
    if (!big.contains(small) || big.size() != small.size() + 1)
        throw MalformedInputError("shapes do not differ by one cell");
    for (int i = 1; i <= big.length(); ++i)
        if (big.row(i) != small.row(i)) return {i, big.row(i)};
    throw MalformedInputError("shapes do not differ by one cell");
}

void check_chain(const ShapeChain& chain) {
    if (chain.empty() || !chain.front().empty()) throw MalformedInputError("chain must start at the empty shape");
    for (std::size_t k = 1; k < chain.size(); ++k) single_difference(chain[k], chain[k - 1]);
}

// Standard filling of the final shape: the cell added at step i gets i.
std::vector<std::vector<int>> chain_values(const ShapeChain& chain) {
    check_chain(chain);
    const Partition& lambda = chain.back();
    std::vector<std::vector<int>> values;
    for (int r = 1; r <= lambda.length(); ++r) values.emplace_back(static_cast<std::size_t>(lambda.row(r)), 0);
    for (std::size_t k = 1; k < chain.size(); ++k) {
        Cell c = single_difference(chain[k], chain[k - 1]);
        values[c.row - 1][c.col - 1] = static_cast<int>(k);
    }
    return values;
}

struct Doubleton {
    Cell cell;
    int a = 0, b = 0;
};

Doubleton standard_doubleton(const SetValuedTableau& t) {
    if (!t.is_barely_set_valued() || !t.is_standard())
        throw MalformedInputError("expected a standard barely set-valued tableau");
    Cell c = t.multi_cells().front();
    return {c, t.at(c)[0], t.at(c)[1]};
}

// Cell values with `removed` deleted from the doubleton and the remaining
// values renumbered to 1..n.
std::vector<std::vector<int>> squeeze(const SetValuedTableau& t, const Doubleton& d, int removed) {
    std::vector<std::vector<int>> values;
    for (const auto& row : t.rows()) {
        values.emplace_back();
        for (const auto& s : row) {
            int v = s.size() == 1 ? s[0] : (removed == d.a ? d.b : d.a);
            values.back().push_back(v > removed ? v - 1 : v);
        }
    }
    return values;
}

SetValuedTableau expand(std::vector<std::vector<int>> values, int inserted, const Cell& cell) {
    std::vector<std::vector<EntrySet>> rows;
    for (auto& row : values) {
        rows.emplace_back();
        for (int v : row) rows.back().push_back({v >= inserted ? v + 1 : v});
    }
    auto& s = rows[cell.row - 1][cell.col - 1];
    s.push_back(inserted);
    std::sort(s.begin(), s.end());
    return SetValuedTableau(std::move(rows));
}

}  // namespace

ShapeChain standard_to_chain(const SetValuedTableau& t) {
    if (!t.is_single_valued() || !t.is_standard()) throw MalformedInputError("expected a standard tableau");
    std::vector<std::vector<int>> values;
    for (const auto& row : t.rows()) {
        values.emplace_back();
        for (const auto& s : row) values.back().push_back(s[0]);
    }
    ShapeChain chain;
    for (int i = 0; i <= t.shape().size(); ++i) chain.push_back(occupied(values, [i](int v) { return v <= i; }));
    return chain;
}

SetValuedTableau chain_to_standard(const ShapeChain& chain) {
    return SetValuedTableau::from_entries(chain_values(chain));
}

ChainTriple barely_to_triple(const SetValuedTableau& t) {
    const Doubleton d = standard_doubleton(t);
    auto values = squeeze(t, d, d.b);
    ShapeChain chain;
    const int n = t.shape().size();
    for (int i = 0; i <= n; ++i) chain.push_back(occupied(values, [i](int v) { return v <= i; }));
    Partition mu = chain[static_cast<std::size_t>(d.b - 1)];
    return {chain, mu, mu.remove(d.cell)};
}

SetValuedTableau triple_to_barely(const ChainTriple& triple) {
    auto values = chain_values(triple.chain);
    auto pos = std::find(triple.chain.begin(), triple.chain.end(), triple.mu);
    if (pos == triple.chain.end()) throw MalformedInputError("mu is not on the chain");
    const Cell x0 = single_difference(triple.mu, triple.nu);
    const int b0 = static_cast<int>(pos - triple.chain.begin()) + 1;
    return expand(std::move(values), b0, x0);
}

ChainTriple barely_to_dual_triple(const SetValuedTableau& t) {
    const Doubleton d = standard_doubleton(t);
    auto values = squeeze(t, d, d.a);
    ShapeChain chain;
    const int n = t.shape().size();
    for (int i = 0; i <= n; ++i) chain.push_back(occupied(values, [n, i](int v) { return v <= n - i; }));
    Partition mu = chain[static_cast<std::size_t>(n - (d.a - 1))];
    return {chain, mu, mu.add(d.cell)};
}

SetValuedTableau dual_triple_to_barely(const ChainTriple& triple) {
    ShapeChain forward(triple.chain.rbegin(), triple.chain.rend());
    auto values = chain_values(forward);
    if (std::find(forward.begin(), forward.end(), triple.mu) == forward.end())
        throw MalformedInputError("mu is not on the chain");
    const Cell x0 = single_difference(triple.nu, triple.mu);
    const int a0 = triple.mu.size() + 1;
    return expand(std::move(values), a0, x0);
}

Partition flagged_to_shape(const SetValuedTableau& t) {
    if (!t.is_single_valued()) throw MalformedInputError("expected a single-valued tableau");
    std::vector<std::vector<int>> own;
    for (std::size_t r = 0; r < t.rows().size(); ++r) {
        own.emplace_back();
        for (const auto& s : t.rows()[r]) {
            const int i = static_cast<int>(r + 1);
            if (s[0] != i && s[0] != i + 1) throw MalformedInputError("tableau is not flagged by (2,3,4,...)");
            own.back().push_back(s[0] == i ? 1 : 0);
        }
    }
    return occupied(own, [](int v) { return v == 1; });
}

SetValuedTableau shape_to_flagged(const Partition& lambda, const Partition& mu) {
    if (!lambda.contains(mu)) throw MalformedInputError("mu is not inside lambda");
    std::vector<std::vector<int>> rows;
    for (int i = 1; i <= lambda.length(); ++i) {
        rows.emplace_back();
        for (int j = 1; j <= lambda.row(i); ++j) rows.back().push_back(mu.contains(Cell{i, j}) ? i : i + 1);
    }
    return SetValuedTableau::from_entries(rows);
}

std::pair<Partition, Partition> flagged_barely_to_cover(const SetValuedTableau& t) {
    if (!t.is_barely_set_valued()) throw MalformedInputError("expected a barely set-valued tableau");
    const Cell x0 = t.multi_cells().front();
    if (t.at(x0) != EntrySet{x0.row, x0.row + 1}) throw MalformedInputError("tableau is not flagged by (2,3,4,...)");
    std::vector<std::vector<int>> own;
    for (std::size_t r = 0; r < t.rows().size(); ++r) {
        own.emplace_back();
        for (const auto& s : t.rows()[r]) {
            const int i = static_cast<int>(r + 1);
            if (s.size() == 1 && s[0] != i && s[0] != i + 1)
                throw MalformedInputError("tableau is not flagged by (2,3,4,...)");
            own.back().push_back(s.size() == 2 ? 2 : (s[0] == i ? 1 : 0));
        }
    }
    Partition nu = occupied(own, [](int v) { return v == 1; });
    Partition mu = occupied(own, [](int v) { return v >= 1; });
    return {nu, mu};
}

SetValuedTableau cover_to_flagged_barely(const Partition& lambda, const Partition& nu, const Partition& mu) {
    if (!lambda.contains(mu)) throw MalformedInputError("mu is not inside lambda");
    const Cell x0 = single_difference(mu, nu);
    std::vector<std::vector<EntrySet>> rows;
    for (int i = 1; i <= lambda.length(); ++i) {
        rows.emplace_back();
        for (int j = 1; j <= lambda.row(i); ++j) {
            const Cell c{i, j};
            if (c == x0) rows.back().push_back({i, i + 1});
            else rows.back().push_back({nu.contains(c) ? i : i + 1});
        }
    }
    return SetValuedTableau(std::move(rows));
}

std::vector<ShapeChain> maximal_chains(const Partition& lambda) {
    std::vector<ShapeChain> out;
    ShapeChain cur{Partition()};
    auto rec = [&](auto&& self) -> void {
        if (cur.back() == lambda) {
            out.push_back(cur);
            check_capacity(out.size(), "maximal chain enumeration");
            return;
        }
        for (const Cell& x : cur.back().outer_corners()) {
            if (!lambda.contains(x)) continue;
            cur.push_back(cur.back().add(x));
            self(self);
            cur.pop_back();
        }
    };
    rec(rec);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace cde
