#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "cde/lab/manifest.hpp"
#include "cde/lab/report.hpp"
#include "cde/poset/poset.hpp"

namespace cde::lab {

// Suite ids in canonical order.
const std::vector<std::string>& suite_ids();
// Suites whose checks concern open conjectures or questions; they never
// report "pass".
bool is_conjecture_suite(const std::string& id);

// Runs every grid point of the suite, in manifest order. Points reached after
// the budget is spent, and points hitting CapacityError or running out of
// memory, are reported as skipped(capacity); a point already running is not
// interrupted. Other library errors become failed checks; ParseError for
// malformed grid points. UnknownSuiteError for ids outside suite_ids().
std::vector<CheckReport> run_suite(const std::string& suite_id, std::chrono::milliseconds budget,
                                   const Manifest& manifest = Manifest::embedded());

struct McdeProductWitness {
    FinitePoset left, right;
    // First m with E(X^(m)) on the product different from E(X^(1)).
    unsigned m = 0;
};

// Among all pairs of posets with 1..max_elems elements whose E(X^(m)) is
// constant for m = 1..M, looks for a product where it is not.
std::optional<McdeProductWitness> search_mcde_product_counterexample(std::size_t max_elems, unsigned M = 4);
// Same search over an explicit candidate list.
std::optional<McdeProductWitness> search_mcde_product_counterexample(const std::vector<FinitePoset>& candidates,
                                                                     unsigned M = 4);

}  // namespace cde::lab
