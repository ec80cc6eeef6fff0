#include "cde/tableaux/young.hpp"

#include <map>
#include <mutex>

#include "cde/core/capacity.hpp"
#include "cde/core/errors.hpp"
#include "cde/tableaux/counting.hpp"
#include "cde/tableaux/tableau.hpp"

namespace cde {

FinitePoset young_interval(const Partition& lambda) {
    const BigInt count = rank_generating_function(lambda).evaluate(BigInt(1));
    if (count > BigInt(static_cast<unsigned long>(capacity_limit())))
        throw CapacityError("young interval of (" + lambda.str() + ") has " + count.get_str() + " elements");
    std::vector<Partition> elems = subpartitions(lambda);
    std::map<Partition, Elem> index;
    for (std::size_t k = 0; k < elems.size(); ++k) index.emplace(elems[k], static_cast<Elem>(k));
    std::vector<Cover> covers;
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < elems.size(); ++k) {
        labels.push_back(elems[k].empty() ? "()" : "(" + elems[k].str() + ")");
        for (const Cell& x : elems[k].outer_corners())
            if (lambda.contains(x)) covers.emplace_back(static_cast<Elem>(k), index.at(elems[k].add(x)));
    }
    return FinitePoset(elems.size(), std::move(covers), std::move(labels));
}

FinitePoset shifted_interval(const ShiftedPartition& lambda) {
    std::vector<std::vector<int>> elems;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int i) -> void {
        elems.push_back(cur);
        check_capacity(elems.size(), "shifted interval");
        if (i >= lambda.length()) return;
        int top = lambda.parts()[i];
        if (i > 0) top = std::min(top, cur.back() - 1);
        for (int v = 1; v <= top; ++v) {
            cur.push_back(v);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    std::sort(elems.begin(), elems.end());
    std::map<std::vector<int>, Elem> index;
    for (std::size_t k = 0; k < elems.size(); ++k) index.emplace(elems[k], static_cast<Elem>(k));
    std::vector<Cover> covers;
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < elems.size(); ++k) {
        const auto& mu = elems[k];
        labels.push_back("(" + ShiftedPartition(mu).str() + ")");
        const int len = static_cast<int>(mu.size());
        for (int i = 0; i <= len && i < lambda.length(); ++i) {
            std::vector<int> nu = mu;
            if (i == len) {
                if (len > 0 && mu.back() < 2) continue;
                nu.push_back(1);
            } else {
                if (mu[i] + 1 > lambda.parts()[i] || (i > 0 && mu[i - 1] <= mu[i] + 1)) continue;
                ++nu[i];
            }
            covers.emplace_back(static_cast<Elem>(k), index.at(nu));
        }
    }
    return FinitePoset(elems.size(), std::move(covers), std::move(labels));
}

Partition lower_piece(const Partition& lambda, const Cell& x) {
    std::vector<int> p;
    for (int r = x.row + 1; r <= lambda.length(); ++r) p.push_back(lambda.row(r));
    return Partition(std::move(p));
}

Partition upper_piece(const Partition& lambda, const Cell& x) {
    std::vector<int> p;
    for (int r = 1; r < x.row; ++r) p.push_back(lambda.row(r) - x.col);
    return Partition(std::move(p));
}

namespace {

std::mutex g_rgf_mutex;
std::map<Partition, IntPolynomial> g_rgf_memo;

}  // namespace

IntPolynomial rank_generating_function(const Partition& lambda) {
    if (lambda.empty()) return IntPolynomial{1};
    {
        std::lock_guard<std::mutex> lock(g_rgf_mutex);
        auto it = g_rgf_memo.find(lambda);
        if (it != g_rgf_memo.end()) return it->second;
    }
    IntPolynomial total;
    for (const Cell& x : lambda.outer_corners()) {
        IntPolynomial term = rank_generating_function(lower_piece(lambda, x)) *
                             rank_generating_function(upper_piece(lambda, x));
        total += IntPolynomial::monomial(1, static_cast<std::size_t>(x.row * (x.col - 1))) * term;
    }
    std::lock_guard<std::mutex> lock(g_rgf_mutex);
    g_rgf_memo.emplace(lambda, total);
    return total;
}

IntPolynomial rank_generating_function_direct(const Partition& lambda) {
    std::vector<BigInt> c(static_cast<std::size_t>(lambda.size()) + 1, BigInt(0));
    for (const auto& mu : subpartitions(lambda)) c[static_cast<std::size_t>(mu.size())] += 1;
    return IntPolynomial(std::move(c));
}

BigInt hook_f(const Partition& lambda) {
    BigInt denom = 1;
    for (const Cell& c : lambda.cells()) denom *= lambda.hook(c);
    return factorial(static_cast<unsigned>(lambda.size())) / denom;
}

BigInt f_plus_one(const Partition& lambda) {
    BigInt s = 0;
    for (const Cell& x : lambda.outer_corners()) s += BigInt(x.row - 1) * hook_f(lambda.add(x));
    return s;
}

bool kerov_mean_zero_check(const Partition& lambda) {
    BigInt s = 0;
    for (const Cell& x : lambda.outer_corners()) s += BigInt(x.col - x.row) * hook_f(lambda.add(x));
    return s == 0;
}

BigInt hook_content_count(const Partition& lambda, long t) {
    BigInt num = 1, den = 1;
    for (const Cell& c : lambda.cells()) {
        num *= BigInt(t + c.col - c.row);
        den *= lambda.hook(c);
    }
    return num / den;
}

BigInt Rplus_recurrence(const Partition& lambda) {
    BigInt s = 0;
    for (const Cell& x : lambda.outer_corners()) {
        if (x.row == 1) continue;
        s += BigInt(x.row - 1) * rank_generating_function(lower_piece(lambda, x)).evaluate(BigInt(1)) *
             rank_generating_function(upper_piece(lambda, x)).evaluate(BigInt(1));
    }
    return s;
}

RPair R_and_Rplus(const Partition& lambda) {
    const Flag phi = Flag::shifted_identity(lambda.length(), 1);
    RPair r{rank_generating_function(lambda).evaluate(BigInt(1)), Rplus_recurrence(lambda)};
    auto counted = count_ssyt_by_entries(lambda, phi, lambda.size() + 1);
    if (counted[0] != r.R)
        throw ConsistencyError("R(" + lambda.str() + "): recurrence " + r.R.get_str() + " vs tableaux " +
                               counted[0].get_str());
    if (counted[1] != r.Rplus)
        throw ConsistencyError("R+(" + lambda.str() + "): recurrence " + r.Rplus.get_str() + " vs tableaux " +
                               counted[1].get_str());
    return r;
}

BigRational young_EX(const Partition& lambda) {
    return BigRational(Rplus_recurrence(lambda), rank_generating_function(lambda).evaluate(BigInt(1)));
}

BigRational young_EY(const Partition& lambda) {
    return BigRational(f_plus_one(lambda), BigInt(lambda.size() + 1) * hook_f(lambda));
}

}  // namespace cde
