#pragma once

#include <optional>
#include <vector>

#include "cde/core/rational.hpp"
#include "cde/poset/poset.hpp"

namespace cde {

struct PosetStats {
    BigRational EX;
    BigRational EY;
    std::size_t edge_count = 0;
    BigInt maximal_chain_count;
    std::optional<std::size_t> rank;  // present iff all maximal chains have rank+1 elements
};

// Edge density: number of covers over number of elements.
BigRational expectation_X(const FinitePoset& p);
// Down-degree expectation when an element is drawn from a uniformly random
// maximal chain.
BigRational expectation_Y(const FinitePoset& p);
// Down-degree expectation when an element is drawn from a uniformly random
// multichain p_1 <= ... <= p_m.
BigRational expectation_Xm(const FinitePoset& p, unsigned m);

// Saturated chains from a minimal element up to e, and from e to a maximal element.
std::vector<BigInt> chains_from_bottom(const FinitePoset& p);
std::vector<BigInt> chains_to_top(const FinitePoset& p);
// Number of m-element multichains containing each element.
std::vector<BigInt> multichain_weights(const FinitePoset& p, unsigned m);

bool is_CDE(const FinitePoset& p);
// Bounded certificate: E(X^(m)) is the same for m = 1..M.
bool is_mCDE_upto(const FinitePoset& p, unsigned M);

PosetStats stats(const FinitePoset& p);

// Each element is covered by at most one element.
bool is_forest(const FinitePoset& p);
// n! / prod #P_{<=i}; DomainError when p is not a forest.
BigInt forest_linear_extension_count(const FinitePoset& p);
// Maximal chains of J(P) by dynamic programming over order ideals.
BigInt ideal_linear_extension_count(const FinitePoset& p);
// Uses the forest formula when applicable, the ideal DP otherwise.
BigInt linear_extension_count(const FinitePoset& p);

// P/{i,j} for a cover i < j: the two elements are identified. The merged
// element takes index i (indices above j shift down by one).
FinitePoset quotient_cover(const FinitePoset& p, Elem i, Elem j);

// For a forest poset and a cover i < j, the closed form of
// #L(P/{i,j}) / #L(P) from cancelling hook factors.
BigRational hook_cancellation_ratio(const FinitePoset& p, Elem i, Elem j);

// Compares, for each base element e and the multichain measure on J(base),
// the probability that e is a maximal element of the ideal with the
// probability that e is a minimal element of its complement.
bool toggle_symmetry_check(const FinitePoset& base, unsigned m);

// Delta/2 when p is self-dual and every element has Hasse degree Delta.
std::optional<BigRational> self_dual_regular_check(const FinitePoset& p,
                                                   std::size_t node_budget = 1'000'000);

}  // namespace cde
