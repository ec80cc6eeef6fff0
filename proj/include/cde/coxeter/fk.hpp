#pragma once

#include <optional>
#include <vector>

#include "cde/core/polynomial.hpp"
#include "cde/coxeter/permutation.hpp"

namespace cde {

enum class FkRoute { words, tableaux };

// Sum over 0-Hecke words (i_1..i_L) for w of (x+i_1)...(x+i_L).
// The words route runs a dynamic program over [e, w]; the tableaux route
// evaluates the flagged set-valued tableau formula at L+2 integer points
// and interpolates (NotVexillaryError for non-vexillary w).
IntPolynomial fk_polynomial(const Permutation& w, int L, FkRoute via = FkRoute::words);

struct FkConjectureResult {
    int d = 0, a = 0, b = 0;
    int ell = 0;
    FkRoute route = FkRoute::words;
    IntPolynomial fk_ell, fk_next;
    // FK(w, ell+1) / FK(w, ell) when the division is exact in Q[x].
    std::optional<PolyQuotient> quotient;
    // binom(ell+1, 2) (4x / (d(a+b)) + 1) with a common denominator.
    PolyQuotient predicted;
    bool divisibility_matches = false;
    // #SSYT(lambda, phi+x, ell+1) / #SSYT(lambda, phi+x, ell) against
    // 2 ell x / (d(a+b)) for x = 1..4.
    std::vector<bool> ratio_matches;
    bool consistent() const;
};

// Tests the predicted quotient for the dominant permutation of shape
// rect_staircase(d, a, b). Reports; never asserts the prediction. Uses the
// words route while [e, w] has at most kFkWordsRouteLimit elements.
inline constexpr long kFkWordsRouteLimit = 200000;
FkConjectureResult conjecture_fk_check(int d, int a, int b);

}  // namespace cde
