#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cde/tableaux/partition.hpp"

namespace cde {

// Sorted, nonempty set of positive entries.
using EntrySet = std::vector<int>;

// Column-strict set-valued tableau: along rows max T(x) <= min T(x'),
// down columns max T(x) < min T(x'). Ordinary tableaux have singleton cells.
class SetValuedTableau {
public:
    SetValuedTableau() = default;
    // Rows top to bottom; validated.
    explicit SetValuedTableau(std::vector<std::vector<EntrySet>> rows);
    // Ordinary tableau from single entries.
    static SetValuedTableau from_entries(const std::vector<std::vector<int>>& rows);

    // Text grid: one line per row, tab-separated cells "{a,b}"; bare
    // integers are accepted for singletons.
    static SetValuedTableau parse(const std::string& text);
    std::string str() const;

    const Partition& shape() const { return shape_; }
    const std::vector<std::vector<EntrySet>>& rows() const { return rows_; }
    const EntrySet& at(const Cell& c) const { return rows_[c.row - 1][c.col - 1]; }

    int entry_count() const;
    // Cells whose set has two or more entries, row-major.
    std::vector<Cell> multi_cells() const;
    // Exactly one cell holds two entries, all others one.
    bool is_barely_set_valued() const;
    bool is_single_valued() const;
    // Entries are exactly 1..entry_count(), each used once.
    bool is_standard() const;
    // Every entry of row i is at most bounds[i-1].
    bool is_flagged(const std::vector<int>& bounds) const;

    friend bool operator==(const SetValuedTableau&, const SetValuedTableau&) = default;
    // Row-major comparison of the entry sets, each compared lexicographically.
    friend auto operator<=>(const SetValuedTableau& a, const SetValuedTableau& b) { return a.rows_ <=> b.rows_; }

private:
    Partition shape_;
    std::vector<std::vector<EntrySet>> rows_;
};

// Row bounds for flagged tableaux. Must cover every row of the shape it is
// used with; extra bounds are ignored.
struct Flag {
    std::vector<int> bounds;

    // (1+offset, 2+offset, ..., rows+offset).
    static Flag shifted_identity(int rows, int offset);
    // Truncates to the shape's rows; MalformedInputError if too short or nonpositive.
    std::vector<int> for_shape(const Partition& shape) const;
    std::string str() const;
};

}  // namespace cde
