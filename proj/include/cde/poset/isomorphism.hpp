#pragma once

#include <optional>
#include <vector>

#include "cde/poset/poset.hpp"

namespace cde {

// Finds an order isomorphism p -> q (as a map of element ids) or reports
// that none exists. Colour refinement on the disjoint union prunes a
// backtracking search; CapacityError when the search visits more than
// `node_budget` nodes.
std::optional<std::vector<Elem>> find_isomorphism(const FinitePoset& p, const FinitePoset& q,
                                                  std::size_t node_budget = 1'000'000);
bool isomorphic(const FinitePoset& p, const FinitePoset& q, std::size_t node_budget = 1'000'000);

}  // namespace cde
