#pragma once

#include <string>

#include "cde/poset/poset.hpp"

namespace cde::lab {

// Builds a poset from a short spec:
//   chain:n  antichain:n  boolean:n  tamari:n  weakfull:n  bruhat:n  m3
//   pabcd:a.b.c.d  young:3.1.1  shifted:3.1  weak:4231  noninv:4231
//   duality-example
//   prod(A,B,...)  union(A,B,...)  osum(A,B,...)  dual(A)  J(A)
// Part lists may use ',' at the top level ("young:3,1,1"); inside an
// operator use '.' instead. ParseError on malformed specs.
FinitePoset parse_poset_spec(const std::string& spec);

}  // namespace cde::lab
