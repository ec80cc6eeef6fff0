#pragma once

#include "cde/core/polynomial.hpp"
#include "cde/core/rational.hpp"
#include "cde/poset/poset.hpp"
#include "cde/tableaux/partition.hpp"

namespace cde {

// [empty, lambda] in Young's lattice; labels are partitions.
FinitePoset young_interval(const Partition& lambda);
// Strict partitions inside lambda, ordered by containment of shifted diagrams.
FinitePoset shifted_interval(const ShiftedPartition& lambda);

// Sum over mu inside lambda of q^|mu|, from the outside-corner recurrence.
IntPolynomial rank_generating_function(const Partition& lambda);
// Same polynomial by listing every subshape.
IntPolynomial rank_generating_function_direct(const Partition& lambda);

// The two skew pieces cut out by an outside corner x = (i,j): the rows
// below x, and the rows above x with their first j columns removed.
Partition lower_piece(const Partition& lambda, const Cell& x);
Partition upper_piece(const Partition& lambda, const Cell& x);

// Number of standard tableaux by the hook-length formula.
BigInt hook_f(const Partition& lambda);
// Standard barely set-valued tableaux: sum over outside corners (i-1) f^{lambda + x}.
BigInt f_plus_one(const Partition& lambda);
// Sum over outside corners of content(x) f^{lambda + x} vanishes.
bool kerov_mean_zero_check(const Partition& lambda);
// Column-strict tableaux with entries at most t: prod (t + c(y)) / h(y).
BigInt hook_content_count(const Partition& lambda, long t);

// R(lambda) = #[empty, lambda] and R+(lambda) = number of its covers.
struct RPair {
    BigInt R;
    BigInt Rplus;
};
// Each value is computed by a recurrence and, independently, by counting
// flagged tableaux; ConsistencyError if the routes disagree.
RPair R_and_Rplus(const Partition& lambda);
BigInt Rplus_recurrence(const Partition& lambda);

// E(X) = R+/R and E(Y) = f+/((|lambda|+1) f) on [empty, lambda].
BigRational young_EX(const Partition& lambda);
BigRational young_EY(const Partition& lambda);

}  // namespace cde
