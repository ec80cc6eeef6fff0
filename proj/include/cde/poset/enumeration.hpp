#pragma once

#include <vector>

#include "cde/poset/poset.hpp"

namespace cde {

// One representative of every isomorphism class of n-element posets
// (1, 1, 2, 5, 16, 63, 318, 2045, 16999 for n = 0..8). Built by adding a
// new maximal element over every order ideal and discarding isomorphic
// copies. SizeError above 9 elements.
std::vector<FinitePoset> enumerate_posets(std::size_t n);

// One representative of every n-element forest, each element having at
// most one upper cover (1, 1, 2, 4, 9, 20, 48, 115, 286, 719 for n = 0..9).
std::vector<FinitePoset> enumerate_forests(std::size_t n);

}  // namespace cde
