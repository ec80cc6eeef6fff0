#include "cde/coxeter/weak_order.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "cde/core/capacity.hpp"
#include "cde/core/errors.hpp"
#include "cde/poset/statistics.hpp"

namespace cde {

namespace {

std::string key_of(const Permutation& u) {
    std::string k;
    for (int v : u.one_line()) k.push_back(static_cast<char>(v));
    return k;
}

}  // namespace

std::size_t WeakInterval::index_of(const Permutation& u) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), u, [](const Permutation& a, const Permutation& b) {
        const int la = length(a), lb = length(b);
        return la != lb ? la < lb : a < b;
    });
    return it != elements.end() && *it == u ? static_cast<std::size_t>(it - elements.begin()) : elements.size();
}

WeakInterval build_weak_interval(const Permutation& w) {
    const int n = w.size();
    const Permutation winv = w.inverse();
    WeakInterval result;
    std::vector<Permutation> level{Permutation::identity(n)};
    while (!level.empty()) {
        std::set<Permutation> next;
        for (const auto& u : level) {
            result.elements.push_back(u);
            for (int s = 1; s < n; ++s)
                if (u(s) < u(s + 1) && winv(u(s + 1)) < winv(u(s))) next.insert(u.times_generator(s));
        }
        check_capacity(result.elements.size() + next.size(), "weak interval");
        level.assign(next.begin(), next.end());
    }

    std::unordered_map<std::string, int> index;
    index.reserve(result.elements.size());
    for (std::size_t i = 0; i < result.elements.size(); ++i) index.emplace(key_of(result.elements[i]), static_cast<int>(i));

    std::vector<Cover> covers;
    std::vector<std::string> labels;
    result.step.assign(result.elements.size(), std::vector<int>(static_cast<std::size_t>(std::max(n - 1, 0)), -1));
    for (std::size_t i = 0; i < result.elements.size(); ++i) {
        const Permutation& u = result.elements[i];
        labels.push_back(u.str());
        for (int s = 1; s < n; ++s) {
            int& target = result.step[i][static_cast<std::size_t>(s - 1)];
            if (u(s) > u(s + 1)) {
                target = static_cast<int>(i);
            } else if (auto it = index.find(key_of(u.times_generator(s))); it != index.end()) {
                target = it->second;
                covers.emplace_back(static_cast<Elem>(i), static_cast<Elem>(it->second));
            }
        }
    }
    result.poset = FinitePoset(result.elements.size(), std::move(covers), std::move(labels));
    return result;
}

FinitePoset weak_interval(const Permutation& w) { return build_weak_interval(w).poset; }

FinitePoset weak_order_full(int n) {
    if (n < 1) throw SizeError("weak order needs n >= 1");
    return weak_interval(Permutation::longest(n));
}

FinitePoset strong_bruhat(int n) {
    if (n < 1) throw SizeError("Bruhat order needs n >= 1");
    std::size_t total = 1;
    for (int k = 2; k <= n; ++k) {
        total *= static_cast<std::size_t>(k);
        check_capacity(total, "strong Bruhat order");
    }
    std::vector<Permutation> perms;
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
    do perms.emplace_back(v);
    while (std::next_permutation(v.begin(), v.end()));

    std::unordered_map<std::string, Elem> index;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < perms.size(); ++i) {
        index.emplace(key_of(perms[i]), static_cast<Elem>(i));
        labels.push_back(perms[i].str());
    }
    std::vector<Cover> covers;
    for (std::size_t k = 0; k < perms.size(); ++k) {
        const auto& u = perms[k].one_line();
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                if (u[i] > u[j]) continue;
                bool gap = true;
                for (int m = i + 1; m < j && gap; ++m)
                    if (u[m] > u[i] && u[m] < u[j]) gap = false;
                if (!gap) continue;
                auto t = u;
                std::swap(t[i], t[j]);
                covers.emplace_back(static_cast<Elem>(k), index.at(key_of(Permutation(t))));
            }
    }
    return FinitePoset(perms.size(), std::move(covers), std::move(labels));
}

BigInt weak_interval_size(const Permutation& w) { return linear_extension_count(noninversion_poset(w)); }

BigInt count_reduced(const Permutation& w) {
    auto I = build_weak_interval(w);
    return chains_from_bottom(I.poset).back();
}

BigInt count_nearly_reduced(const Permutation& w) {
    auto I = build_weak_interval(w);
    auto from = chains_from_bottom(I.poset);
    auto to = chains_to_top(I.poset);
    BigInt total = 0;
    for (std::size_t i = 0; i < I.size(); ++i) {
        long des = std::count(I.step[i].begin(), I.step[i].end(), static_cast<int>(i));
        total += from[i] * to[i] * des;
    }
    return total;
}

std::vector<HeckeWord> enumerate_hecke_words(const Permutation& w, int len) {
    auto I = build_weak_interval(w);
    const int lw = length(w);
    const int top = static_cast<int>(I.size()) - 1;
    std::vector<HeckeWord> out;
    HeckeWord word;
    auto rec = [&](auto&& self, int u) -> void {
        const int left = len - static_cast<int>(word.size());
        if (lw - length(I.elements[static_cast<std::size_t>(u)]) > left) return;
        if (left == 0) {
            if (u == top) {
                out.push_back(word);
                check_capacity(out.size(), "0-Hecke word enumeration");
            }
            return;
        }
        for (int s = 1; s < w.size(); ++s) {
            const int v = I.step[static_cast<std::size_t>(u)][static_cast<std::size_t>(s - 1)];
            if (v < 0) continue;
            word.letters.push_back(s);
            self(self, v);
            word.letters.pop_back();
        }
    };
    if (len >= 0) rec(rec, 0);
    return out;
}

BigRational expectation_Y_words(const Permutation& w) {
    return BigRational(count_nearly_reduced(w), count_reduced(w) * (length(w) + 1));
}

BigRational expectation_X_complementary(const Permutation& w) {
    auto I = build_weak_interval(w);
    BigInt leaving = 0;
    for (std::size_t i = 0; i < I.size(); ++i)
        for (int s = 1; s < w.size(); ++s)
            if (I.elements[i](s) < I.elements[i](s + 1) && I.step[i][static_cast<std::size_t>(s - 1)] < 0) ++leaving;
    BigRational deficiency(leaving, BigInt(static_cast<unsigned long>(I.size())));
    return (BigRational(w.size() - 1) - deficiency) / BigRational(2);
}

FinitePoset noninversion_poset(const Permutation& w) {
    const int n = w.size();
    const Permutation winv = w.inverse();
    auto less = [&](int i, int j) { return i < j && winv(i) < winv(j); };
    std::vector<Cover> covers;
    std::vector<std::string> labels;
    for (int i = 1; i <= n; ++i) {
        labels.push_back(std::to_string(i));
        for (int j = i + 1; j <= n; ++j) {
            if (!less(i, j)) continue;
            bool cover = true;
            for (int k = i + 1; k < j && cover; ++k)
                if (less(i, k) && less(k, j)) cover = false;
            if (cover) covers.emplace_back(static_cast<Elem>(i - 1), static_cast<Elem>(j - 1));
        }
    }
    return FinitePoset(static_cast<std::size_t>(n), std::move(covers), std::move(labels));
}

BigRational expectation_X_noninversion(const Permutation& w) {
    FinitePoset P = noninversion_poset(w);
    BigRational sum;
    if (is_forest(P)) {
        for (const auto& [i, j] : P.covers()) sum += hook_cancellation_ratio(P, i, j);
    } else {
        const BigInt total = linear_extension_count(P);
        for (const auto& [i, j] : P.covers()) sum += BigRational(linear_extension_count(quotient_cover(P, i, j)), total);
    }
    return (BigRational(w.size() - 1) - sum) / BigRational(2);
}

BigRational dominant_EX_closed_form(int d, int a, int b) {
    if (d < 2 || a < 1 || b < 1) throw DomainError("closed form needs d >= 2 and a, b >= 1");
    const BigRational A(a), B(b);
    const BigRational N = A + BigRational(d - 1) * B;
    auto c = [&](int j) { return BigRational(j) * B / (A + BigRational(j - 1) * B); };
    BigRational theta_sum;
    for (int l = 0; l <= d - 2; ++l) {
        BigRational t = A * A + BigRational(l) * B * (B - A);
        for (int j = l + 1; j <= d - 1; ++j) t *= c(j);
        theta_sum += t;
    }
    theta_sum += A * A + BigRational(d - 1) * B * (B - A) - N;
    return (N - BigRational(1) - theta_sum / N) / BigRational(2);
}

}  // namespace cde
