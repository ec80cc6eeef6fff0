#pragma once

#include <vector>

#include "cde/core/rational.hpp"
#include "cde/coxeter/permutation.hpp"
#include "cde/poset/poset.hpp"

namespace cde {

// The lower interval [e, w] of the right weak order together with the
// 0-Hecke action restricted to it.
struct WeakInterval {
    // Sorted by length, then lexicographically; elements.front() is e and
    // elements.back() is w.
    std::vector<Permutation> elements;
    // step[u][s-1]: index of T_u T_s when it stays inside [e, w], or -1.
    std::vector<std::vector<int>> step;
    // Covers u < us; labels are one-line strings.
    FinitePoset poset;

    std::size_t index_of(const Permutation& u) const;  // size() when absent
    std::size_t size() const { return elements.size(); }
};

// CapacityError when the interval exceeds capacity_limit().
WeakInterval build_weak_interval(const Permutation& w);
FinitePoset weak_interval(const Permutation& w);
FinitePoset weak_order_full(int n);
// Strong Bruhat order on S_n; covers u < ut with l(ut) = l(u) + 1.
FinitePoset strong_bruhat(int n);

// #[e, w], computed as the linear extensions of the noninversion poset.
BigInt weak_interval_size(const Permutation& w);

// Maximal chains of [e, w].
BigInt count_reduced(const Permutation& w);
// 0-Hecke words of length l(w) + 1: the sum over maximal chains of the
// number of descents of each chain element.
BigInt count_nearly_reduced(const Permutation& w);
// 0-Hecke words for w of the given length, pruned by the weak interval.
std::vector<HeckeWord> enumerate_hecke_words(const Permutation& w, int length);

// #Red^(+1)(w) / ((l(w) + 1) #Red(w)).
BigRational expectation_Y_words(const Permutation& w);
// (1/2)(#S - (1/#[e,w]) sum_u #{s : u < us, us not <= w}).
BigRational expectation_X_complementary(const Permutation& w);

// i < j in the poset iff i < j as integers and w^{-1}(i) < w^{-1}(j).
// Element k-1 carries label k.
FinitePoset noninversion_poset(const Permutation& w);
// E(X) on [e, w] from quotients of the noninversion poset; uses hook
// cancellation when that poset is a forest.
BigRational expectation_X_noninversion(const Permutation& w);

// E(X) for the dominant permutation of shape rect_staircase(d, a, b) by the
// closed forms of the theta sums. DomainError unless d >= 2 and a, b >= 1.
BigRational dominant_EX_closed_form(int d, int a, int b);

}  // namespace cde
