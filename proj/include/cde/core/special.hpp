#pragma once

#include "cde/core/rational.hpp"

namespace cde {

// Stirling number of the second kind S(L, j); zero outside 0 <= j <= L
// except S(0,0) = 1. Backed by a shared triangle that grows on demand.
BigInt stirling2(unsigned L, unsigned j);

// Rising factorial z(z+1)...(z+j-1).
BigRational pochhammer(const BigRational& z, unsigned j);

// Compares the terminating sum  sum_k (-m)_k (B)_k / ((C)_k k!)  with
// (C-B)_m / (C)_m. DomainError if some (C)_k with k <= m vanishes.
bool chu_vandermonde_check(unsigned m, const BigRational& B, const BigRational& C);

}  // namespace cde
