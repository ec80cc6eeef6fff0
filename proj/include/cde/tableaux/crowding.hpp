#pragma once

#include "cde/tableaux/tableau.hpp"

namespace cde {

struct UncrowdResult {
    SetValuedTableau tableau;  // single-valued, shape lambda + corner
    Cell corner;               // the new cell
    int row = 0;               // row of the removed doubleton
};

// Removes the larger entry of the unique doubleton and row-inserts it into
// the rows below, bumping the leftmost strictly larger entry each time.
// NotBarelySetValuedError unless exactly one cell holds two entries.
UncrowdResult uncrowd(const SetValuedTableau& t);

// Inverse: reverse row insertion from the inner corner x up to row i0+1,
// after which the travelling entry joins the cell of row i0 that it would
// have bumped. NotCornerError if x is not an inner corner; RangeError unless
// 1 <= i0 < x.row.
SetValuedTableau crowd(const SetValuedTableau& t_plus, const Cell& x, int i0);

}  // namespace cde
