#include "cde/core/special.hpp"

#include <mutex>
#include <vector>

#include "cde/core/errors.hpp"

namespace cde {
namespace {

std::mutex g_stirling_mutex;
std::vector<std::vector<BigInt>> g_stirling{{BigInt(1)}};

}  // namespace

BigInt stirling2(unsigned L, unsigned j) {
    if (j > L) return 0;
    std::lock_guard<std::mutex> lock(g_stirling_mutex);
    while (g_stirling.size() <= L) {
        const auto& prev = g_stirling.back();
        const std::size_t n = g_stirling.size();
        std::vector<BigInt> row(n + 1, BigInt(0));
        for (std::size_t k = 1; k <= n; ++k) {
            BigInt v = prev[k - 1];
            if (k < prev.size()) v += BigInt(static_cast<unsigned long>(k)) * prev[k];
            row[k] = v;
        }
        g_stirling.push_back(std::move(row));
    }
    return g_stirling[L][j];
}

BigRational pochhammer(const BigRational& z, unsigned j) {
    BigRational r = 1;
    for (unsigned i = 0; i < j; ++i) r *= z + BigRational(static_cast<long>(i));
    return r;
}

bool chu_vandermonde_check(unsigned m, const BigRational& B, const BigRational& C) {
    for (unsigned i = 0; i < m; ++i)
        if ((C + BigRational(static_cast<long>(i))).is_zero())
            throw DomainError("chu_vandermonde_check: (C)_k vanishes");
    const BigRational minus_m(-static_cast<long>(m));
    BigRational sum = 0;
    for (unsigned k = 0; k <= m; ++k) {
        sum += pochhammer(minus_m, k) * pochhammer(B, k) /
               (pochhammer(C, k) * BigRational(factorial(k)));
    }
    return sum == pochhammer(C - B, m) / pochhammer(C, m);
}

}  // namespace cde
