#pragma once

#include <cstdint>
#include <vector>

#include "cde/poset/poset.hpp"

namespace cde {

FinitePoset chain(std::size_t a);
FinitePoset antichain(std::size_t a);
// Subsets of an n-set ordered by inclusion.
FinitePoset boolean_lattice(std::size_t n);
FinitePoset product(const FinitePoset& p, const FinitePoset& q);
FinitePoset disjoint_union(const FinitePoset& p, const FinitePoset& q);
// Every element of q lies above every element of p.
FinitePoset ordinal_sum(const FinitePoset& p, const FinitePoset& q);
FinitePoset dual(const FinitePoset& p);
// A chain of a elements, two parallel chains of b and c elements above it,
// and a chain of d elements above both.
FinitePoset pabcd(std::size_t a, std::size_t b, std::size_t c, std::size_t d);
// Triangulations of a convex n-gon with vertices 1..n; flipping {i,k} to
// {j,l} for i<j<k<l goes up. Labels list the diagonals.
FinitePoset tamari(std::size_t n);
// Five-element lattice with three atoms.
FinitePoset m3_lattice();

// J(P) together with the ideal represented by each lattice element.
struct IdealLattice {
    FinitePoset lattice;
    std::vector<std::uint64_t> ideals;  // bit e set when base element e is in the ideal
};
IdealLattice build_ideal_lattice(const FinitePoset& base);
FinitePoset order_ideal_lattice(const FinitePoset& base);

}  // namespace cde
