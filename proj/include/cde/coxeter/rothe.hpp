#pragma once

#include <set>
#include <utility>

#include "cde/coxeter/permutation.hpp"
#include "cde/tableaux/tableau.hpp"

namespace cde {

struct RotheData {
    // Cells (i, j) with w(i) > j and w^{-1}(j) > i.
    std::set<std::pair<int, int>> diagram;
    Partition lambda_w;
    // Smallest Ferrers shape containing the diagram.
    Partition mu_w;
    // One entry per nonzero part of lambda_w.
    Flag flag_w;
};

std::set<std::pair<int, int>> rothe_diagram(const Permutation& w);
// Smallest Ferrers shape containing the Rothe diagram; defined for every w.
Partition rothe_hull(const Permutation& w);
// NotVexillaryError unless w avoids 2143.
RotheData rothe(const Permutation& w);

}  // namespace cde
