#pragma once

#include <cstddef>
#include <string>

namespace cde {

// Global bound on the number of elements any builder or enumerator may
// materialise. Defaults to 2'000'000 and is read once from CDE_CAPACITY.
std::size_t capacity_limit();
void set_capacity_limit(std::size_t limit);

// Throws CapacityError when `count` exceeds the limit.
void check_capacity(std::size_t count, const std::string& what);

}  // namespace cde
