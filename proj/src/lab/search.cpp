#include "cde/core/errors.hpp"
#include "cde/lab/suites.hpp"
#include "cde/poset/builders.hpp"
#include "cde/poset/enumeration.hpp"
#include "cde/poset/statistics.hpp"

namespace cde::lab {

std::optional<McdeProductWitness> search_mcde_product_counterexample(const std::vector<FinitePoset>& candidates,
                                                                     unsigned M) {
    std::vector<const FinitePoset*> mcde;
    for (const auto& p : candidates)
        if (!p.empty() && is_mCDE_upto(p, M)) mcde.push_back(&p);
    for (std::size_t i = 0; i < mcde.size(); ++i)
        for (std::size_t j = i; j < mcde.size(); ++j) {
            FinitePoset prod = product(*mcde[i], *mcde[j]);
            const BigRational first = expectation_Xm(prod, 1);
            for (unsigned m = 2; m <= M; ++m)
                if (expectation_Xm(prod, m) != first) return McdeProductWitness{*mcde[i], *mcde[j], m};
        }
    return std::nullopt;
}

std::optional<McdeProductWitness> search_mcde_product_counterexample(std::size_t max_elems, unsigned M) {
    std::vector<FinitePoset> candidates;
    for (std::size_t n = 1; n <= max_elems; ++n)
        for (auto& p : enumerate_posets(n)) candidates.push_back(std::move(p));
    return search_mcde_product_counterexample(candidates, M);
}

}  // namespace cde::lab
