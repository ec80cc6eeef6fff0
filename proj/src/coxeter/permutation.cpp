#include "cde/coxeter/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "cde/core/errors.hpp"

namespace cde {

Permutation::Permutation(std::vector<int> one_line) : w_(std::move(one_line)) {
    std::vector<bool> seen(w_.size() + 1, false);
    for (int v : w_) {
        if (v < 1 || v > static_cast<int>(w_.size()) || seen[static_cast<std::size_t>(v)])
            throw DomainError("not a permutation of 1.." + std::to_string(w_.size()));
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
    return Permutation(std::move(v));
}

Permutation Permutation::longest(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = n - i;
    return Permutation(std::move(v));
}

Permutation Permutation::parse(const std::string& text) {
    std::vector<int> v;
    const bool separated = text.find_first_of(", ") != std::string::npos;
    if (separated) {
        std::string token;
        std::string cleaned = text;
        std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
        std::istringstream words(cleaned);
        while (words >> token) {
            if (!std::all_of(token.begin(), token.end(), [](unsigned char c) { return std::isdigit(c); }))
                throw ParseError("bad permutation entry '" + token + "'");
            v.push_back(std::stoi(token));
        }
    } else {
        for (char c : text) {
            if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("bad permutation '" + text + "'");
            v.push_back(c - '0');
        }
    }
    if (v.empty()) throw ParseError("empty permutation");
    return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(w_.size());
    for (std::size_t i = 0; i < w_.size(); ++i) inv[static_cast<std::size_t>(w_[i] - 1)] = static_cast<int>(i + 1);
    Permutation p;
    p.w_ = std::move(inv);
    return p;
}

Permutation operator*(const Permutation& u, const Permutation& v) {
    if (u.size() != v.size()) throw DomainError("composing permutations of different sizes");
    std::vector<int> out(v.w_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = u(v.w_[i]);
    Permutation p;
    p.w_ = std::move(out);
    return p;
}

Permutation Permutation::times_generator(int i) const {
    if (i < 1 || i >= size()) throw RangeError("generator s_" + std::to_string(i) + " outside S_" + std::to_string(size()));
    Permutation p = *this;
    std::swap(p.w_[static_cast<std::size_t>(i - 1)], p.w_[static_cast<std::size_t>(i)]);
    return p;
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
        if (w_[i] != static_cast<int>(i + 1)) return false;
    return true;
}

std::string Permutation::str() const {
    std::string s;
    for (std::size_t i = 0; i < w_.size(); ++i) {
        if (w_.size() > 9 && i > 0) s += ',';
        s += std::to_string(w_[i]);
    }
    return s;
}

HeckeWord HeckeWord::parse(const std::string& text) {
    HeckeWord word;
    std::string cleaned = text;
    std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
    std::istringstream in(cleaned);
    std::string token;
    while (in >> token) {
        if (!std::all_of(token.begin(), token.end(), [](unsigned char c) { return std::isdigit(c); }))
            throw ParseError("bad generator '" + token + "'");
        word.letters.push_back(std::stoi(token));
    }
    return word;
}

std::string HeckeWord::str() const {
    std::string s;
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(letters[i]);
    }
    return s;
}

int length(const Permutation& w) {
    int count = 0;
    for (int i = 1; i <= w.size(); ++i)
        for (int j = i + 1; j <= w.size(); ++j)
            if (w(i) > w(j)) ++count;
    return count;
}

std::vector<int> descents(const Permutation& w) {
    std::vector<int> d;
    for (int i = 1; i < w.size(); ++i)
        if (w(i) > w(i + 1)) d.push_back(i);
    return d;
}

std::vector<std::pair<int, int>> inversions(const Permutation& w) {
    std::vector<std::pair<int, int>> inv;
    for (int i = 1; i <= w.size(); ++i)
        for (int j = i + 1; j <= w.size(); ++j)
            if (w(i) > w(j)) inv.emplace_back(w(j), w(i));
    std::sort(inv.begin(), inv.end());
    return inv;
}

std::vector<int> lehmer_code(const Permutation& w) {
    std::vector<int> c(static_cast<std::size_t>(w.size()), 0);
    for (int i = 1; i <= w.size(); ++i)
        for (int j = i + 1; j <= w.size(); ++j)
            if (w(j) < w(i)) ++c[static_cast<std::size_t>(i - 1)];
    return c;
}

Permutation from_lehmer_code(const std::vector<int>& code, int n) {
    if (static_cast<int>(code.size()) > n) throw DomainError("code longer than n");
    std::vector<int> unused;
    for (int v = 1; v <= n; ++v) unused.push_back(v);
    std::vector<int> w;
    for (int i = 0; i < n; ++i) {
        const int c = i < static_cast<int>(code.size()) ? code[static_cast<std::size_t>(i)] : 0;
        if (c < 0 || c >= static_cast<int>(unused.size()))
            throw DomainError("entry " + std::to_string(i + 1) + " of the code is out of range");
        w.push_back(unused[static_cast<std::size_t>(c)]);
        unused.erase(unused.begin() + c);
    }
    return Permutation(std::move(w));
}

namespace {

bool contains_2143(const Permutation& w) {
    const int n = w.size();
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) {
            if (w(b) >= w(a)) continue;
            for (int c = b + 1; c <= n; ++c) {
                if (w(c) <= w(a)) continue;
                for (int d = c + 1; d <= n; ++d)
                    if (w(d) > w(a) && w(d) < w(c)) return true;
            }
        }
    return false;
}

bool contains_132(const Permutation& w) {
    const int n = w.size();
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) {
            if (w(b) <= w(a)) continue;
            for (int c = b + 1; c <= n; ++c)
                if (w(c) > w(a) && w(c) < w(b)) return true;
        }
    return false;
}

Partition sorted_code(const Permutation& w) {
    auto c = lehmer_code(w);
    std::sort(c.begin(), c.end(), std::greater<>());
    return Partition(c);
}

}  // namespace

bool is_vexillary(const Permutation& w) { return !contains_2143(w); }
bool is_dominant(const Permutation& w) { return !contains_132(w); }

Classification classify(const Permutation& w) {
    Classification c;
    c.vexillary = is_vexillary(w);
    c.dominant = is_dominant(w);
    c.grassmannian = descents(w).size() <= 1;
    c.inverse_grassmannian = descents(w.inverse()).size() <= 1;
    if (c.vexillary) c.shape = sorted_code(w);
    return c;
}

Partition vexillary_shape(const Permutation& w) {
    if (!is_vexillary(w)) throw NotVexillaryError(w.str() + " contains the pattern 2143");
    return sorted_code(w);
}

Permutation dominant_of_shape(const Partition& lambda) {
    int n = 1;
    for (int i = 1; i <= lambda.length(); ++i) n = std::max(n, lambda.row(i) + i);
    return from_lehmer_code(lambda.parts(), n);
}

Permutation grassmannian_of_shape(const Partition& lambda) {
    const int l = lambda.length();
    if (l == 0) return Permutation::identity(1);
    const int n = l + lambda.row(1);
    std::vector<int> w;
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    for (int i = 1; i <= l; ++i) {
        w.push_back(lambda.row(l - i + 1) + i);
        used[static_cast<std::size_t>(w.back())] = true;
    }
    for (int v = 1; v <= n; ++v)
        if (!used[static_cast<std::size_t>(v)]) w.push_back(v);
    return Permutation(std::move(w));
}

Permutation inverse_grassmannian_of_shape(const Partition& lambda) {
    return grassmannian_of_shape(lambda.transpose()).inverse();
}

Permutation embed_identity(const Permutation& w, int N) {
    if (N < 0) throw DomainError("negative embedding shift");
    std::vector<int> v;
    for (int i = 1; i <= N; ++i) v.push_back(i);
    for (int x : w.one_line()) v.push_back(x + N);
    return Permutation(std::move(v));
}

Permutation hecke_product(const Permutation& u, int s) {
    if (s < 1 || s >= u.size()) throw RangeError("generator s_" + std::to_string(s) + " outside S_" + std::to_string(u.size()));
    return u(s) < u(s + 1) ? u.times_generator(s) : u;
}

Permutation word_to_hecke(const HeckeWord& word, int n) {
    Permutation u = Permutation::identity(n);
    for (int s : word.letters) u = hecke_product(u, s);
    return u;
}

HeckeWord reduced_word(const Permutation& w) {
    HeckeWord word;
    Permutation u = w;
    while (!u.is_identity()) {
        const int s = descents(u).front();
        word.letters.push_back(s);
        u = u.times_generator(s);
    }
    std::reverse(word.letters.begin(), word.letters.end());
    return word;
}

bool left_factor_check(const Permutation& u, const Permutation& w) {
    if (u.size() != w.size()) throw DomainError("permutations live in different symmetric groups");
    const Permutation winv = w.inverse();
    for (const auto& [a, b] : inversions(u))
        if (winv(b) > winv(a)) return false;
    return true;
}

}  // namespace cde
