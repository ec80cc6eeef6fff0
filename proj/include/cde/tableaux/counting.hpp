#pragma once

#include <vector>

#include "cde/core/rational.hpp"
#include "cde/tableaux/tableau.hpp"

namespace cde {

// Column-strict set-valued tableaux of shape lambda flagged by phi with
// exactly j entries, in row-major lexicographic order of the cell sets.
// CapacityError if the list would exceed the capacity bound.
std::vector<SetValuedTableau> enumerate_ssyt(const Partition& lambda, const Flag& phi, int j);

// Same count without listing: a row-major transfer computation that only
// remembers the largest entry of the most recent cell in each column.
BigInt count_ssyt(const Partition& lambda, const Flag& phi, int j);
// Counts for j = |lambda|, ..., j_max (index k holds j = |lambda| + k).
std::vector<BigInt> count_ssyt_by_entries(const Partition& lambda, const Flag& phi, int j_max);

// Standard set-valued tableaux of shape lambda using 1..|lambda|+extra, in
// the same deterministic order as enumerate_ssyt.
std::vector<SetValuedTableau> enumerate_standard_set_valued(const Partition& lambda, int extra);

}  // namespace cde
