#include "cde/coxeter/rothe.hpp"

#include <algorithm>

#include "cde/core/errors.hpp"

namespace cde {

std::set<std::pair<int, int>> rothe_diagram(const Permutation& w) {
    const Permutation winv = w.inverse();
    std::set<std::pair<int, int>> d;
    for (int i = 1; i <= w.size(); ++i)
        for (int j = 1; j < w(i); ++j)
            if (winv(j) > i) d.emplace(i, j);
    return d;
}

Partition rothe_hull(const Permutation& w) {
    std::vector<int> widest(static_cast<std::size_t>(w.size()) + 1, 0);
    for (const auto& [i, j] : rothe_diagram(w)) widest[static_cast<std::size_t>(i - 1)] = std::max(widest[static_cast<std::size_t>(i - 1)], j);
    for (int i = w.size() - 1; i >= 0; --i)
        widest[static_cast<std::size_t>(i)] = std::max(widest[static_cast<std::size_t>(i)], widest[static_cast<std::size_t>(i) + 1]);
    while (!widest.empty() && widest.back() == 0) widest.pop_back();
    return Partition(widest);
}

RotheData rothe(const Permutation& w) {
    RotheData data;
    data.lambda_w = vexillary_shape(w);
    data.diagram = rothe_diagram(w);
    data.mu_w = rothe_hull(w);
    const Partition& mu = data.mu_w;
    for (int i = 1; i <= data.lambda_w.length(); ++i) {
        // diagonal col - row of the last box in row i of lambda
        const int diag = data.lambda_w.row(i) - i;
        int phi = 0;
        for (int r = std::max(1, 1 - diag); r <= mu.length(); ++r)
            if (mu.row(r) >= r + diag) phi = r;
        if (phi == 0) throw ConsistencyError("flag diagonal misses the hull of " + w.str());
        data.flag_w.bounds.push_back(phi);
    }
    return data;
}

}  // namespace cde
