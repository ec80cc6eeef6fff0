#include "cde/tableaux/crowding.hpp"

#include <algorithm>

#include "cde/core/errors.hpp"

namespace cde {

UncrowdResult uncrowd(const SetValuedTableau& t) {
    if (!t.is_barely_set_valued()) throw NotBarelySetValuedError("tableau is not barely set-valued");
    const Cell x0 = t.multi_cells().front();
    auto rows = t.rows();
    int value = rows[x0.row - 1][x0.col - 1].back();
    rows[x0.row - 1][x0.col - 1].pop_back();

    for (std::size_t r = static_cast<std::size_t>(x0.row);; ++r) {
        if (r == rows.size()) rows.emplace_back();
        auto& row = rows[r];
        auto it = std::find_if(row.begin(), row.end(), [&](const EntrySet& s) { return s.front() > value; });
        if (it == row.end()) {
            row.push_back({value});
            const Cell corner{static_cast<int>(r + 1), static_cast<int>(row.size())};
            return UncrowdResult{SetValuedTableau(std::move(rows)), corner, x0.row};
        }
        std::swap(value, it->front());
    }
}

SetValuedTableau crowd(const SetValuedTableau& t_plus, const Cell& x, int i0) {
    if (!t_plus.is_single_valued()) throw MalformedInputError("crowd expects a single-valued tableau");
    const Partition& shape = t_plus.shape();
    if (x.row < 1 || x.row > shape.length() || x.col != shape.row(x.row) || shape.row(x.row + 1) >= x.col)
        throw NotCornerError("cell (" + std::to_string(x.row) + "," + std::to_string(x.col) +
                             ") is not an inner corner");
    if (i0 < 1 || i0 >= x.row) throw RangeError("crowding row must lie strictly above the corner");

    auto rows = t_plus.rows();
    int value = rows[x.row - 1].back().front();
    rows[x.row - 1].pop_back();
    if (rows[x.row - 1].empty()) rows.pop_back();

    // largest entry strictly smaller than value in a row
    auto target = [&](std::vector<EntrySet>& row) {
        auto it = std::find_if(row.rbegin(), row.rend(), [&](const EntrySet& s) { return s.back() < value; });
        if (it == row.rend()) throw ConsistencyError("crowd: nothing to bump");
        return std::prev(it.base());
    };
    for (int r = x.row - 1; r > i0; --r) {
        auto it = target(rows[r - 1]);
        std::swap(value, it->front());
    }
    auto it = target(rows[i0 - 1]);
    it->push_back(value);
    return SetValuedTableau(std::move(rows));
}

}  // namespace cde
