#pragma once

#include <utility>
#include <vector>

#include "cde/tableaux/partition.hpp"
#include "cde/tableaux/tableau.hpp"

namespace cde {

// A saturated chain of shapes, listed in the order of the chain.
using ShapeChain = std::vector<Partition>;

// (a) standard tableau <-> maximal chain of [empty, lambda]; step i is the
// shape occupied by 1..i.
ShapeChain standard_to_chain(const SetValuedTableau& t);
SetValuedTableau chain_to_standard(const ShapeChain& chain);

// (b) standard barely set-valued tableau <-> (c, mu, nu) with c a maximal
// chain of [empty, lambda], mu in c and nu covered by mu.
struct ChainTriple {
    ShapeChain chain;
    Partition mu;
    Partition nu;
    friend bool operator==(const ChainTriple&, const ChainTriple&) = default;
};
ChainTriple barely_to_triple(const SetValuedTableau& t);
SetValuedTableau triple_to_barely(const ChainTriple& triple);

// (c) the same for the dual interval: the chain runs from lambda down to
// empty, mu lies in it and nu covers mu in the dual (nu = mu plus one cell).
ChainTriple barely_to_dual_triple(const SetValuedTableau& t);
SetValuedTableau dual_triple_to_barely(const ChainTriple& triple);

// (d) tableau of shape lambda flagged by (2,3,4,...) <-> mu inside lambda:
// mu is the set of cells holding their own row index.
Partition flagged_to_shape(const SetValuedTableau& t);
SetValuedTableau shape_to_flagged(const Partition& lambda, const Partition& mu);

// (e) barely set-valued tableau flagged by (2,3,4,...) <-> cover nu < mu
// inside lambda; the doubleton {i,i+1} sits in the cell mu minus nu.
std::pair<Partition, Partition> flagged_barely_to_cover(const SetValuedTableau& t);
SetValuedTableau cover_to_flagged_barely(const Partition& lambda, const Partition& nu, const Partition& mu);

// All maximal chains of [empty, lambda], ordered lexicographically.
std::vector<ShapeChain> maximal_chains(const Partition& lambda);

}  // namespace cde
