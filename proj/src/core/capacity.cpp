#include "cde/core/capacity.hpp"

#include <atomic>
#include <cstdlib>

#include "cde/core/errors.hpp"

namespace cde {
namespace {

std::size_t initial_limit() {
    constexpr std::size_t kDefault = 2'000'000;
    const char* env = std::getenv("CDE_CAPACITY");
    if (env == nullptr || *env == '\0') return kDefault;
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0) return kDefault;
    return static_cast<std::size_t>(v);
}

std::atomic<std::size_t>& limit_ref() {
    static std::atomic<std::size_t> limit{initial_limit()};
    return limit;
}

}  // namespace

std::size_t capacity_limit() { return limit_ref().load(); }

void set_capacity_limit(std::size_t limit) { limit_ref().store(limit); }

void check_capacity(std::size_t count, const std::string& what) {
    if (count > capacity_limit()) {
        throw CapacityError(what + ": " + std::to_string(count) +
                            " exceeds capacity " + std::to_string(capacity_limit()));
    }
}

}  // namespace cde
