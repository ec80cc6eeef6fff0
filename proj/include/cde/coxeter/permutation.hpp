#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "cde/tableaux/partition.hpp"

namespace cde {

// A permutation of {1..n} in one-line notation. Positions and values are
// 1-based; w(i) is the value at position i.
class Permutation {
public:
    Permutation() = default;
    // DomainError unless the list is a bijection of {1..n}.
    explicit Permutation(std::vector<int> one_line);
    static Permutation identity(int n);
    static Permutation longest(int n);
    // "4231" (single digits, n <= 9) or comma/space separated "4,2,3,1".
    static Permutation parse(const std::string& text);

    int size() const { return static_cast<int>(w_.size()); }
    int operator()(int i) const { return w_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<int>& one_line() const { return w_; }

    Permutation inverse() const;
    // (u * v)(i) = u(v(i)).
    friend Permutation operator*(const Permutation& u, const Permutation& v);
    // w s_i: swaps positions i and i+1.
    Permutation times_generator(int i) const;
    bool is_identity() const;

    // Digits when n <= 9, otherwise comma separated.
    std::string str() const;

    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> w_;
};

// A word in the generators s_1..s_{n-1} (1-based indices).
struct HeckeWord {
    std::vector<int> letters;

    std::size_t size() const { return letters.size(); }
    // "1,2,1"; the empty string is the empty word.
    static HeckeWord parse(const std::string& text);
    std::string str() const;
    friend auto operator<=>(const HeckeWord&, const HeckeWord&) = default;
};

int length(const Permutation& w);
// Right descents i with w(i) > w(i+1).
std::vector<int> descents(const Permutation& w);
// Pairs (a, b) of values with a < b and b to the left of a.
std::vector<std::pair<int, int>> inversions(const Permutation& w);
// c_i = #{j > i : w(j) < w(i)}, full length n.
std::vector<int> lehmer_code(const Permutation& w);
// Inverse of the Lehmer code; the code is padded with zeros to length n.
Permutation from_lehmer_code(const std::vector<int>& code, int n);

struct Classification {
    bool vexillary = false;
    bool dominant = false;
    bool grassmannian = false;
    bool inverse_grassmannian = false;
    // Sorted Lehmer code, present iff vexillary.
    std::optional<Partition> shape;
};

Classification classify(const Permutation& w);
bool is_vexillary(const Permutation& w);
bool is_dominant(const Permutation& w);
// Shape of a vexillary permutation; NotVexillaryError otherwise.
Partition vexillary_shape(const Permutation& w);

// The dominant permutation with code lambda in the smallest S_n holding it.
Permutation dominant_of_shape(const Partition& lambda);

// The Grassmannian permutation of shape lambda in S_{l + lambda_1}, with
// its single descent at l = length of lambda.
Permutation grassmannian_of_shape(const Partition& lambda);
// Inverse of the Grassmannian permutation of the transpose; it has shape lambda.
Permutation inverse_grassmannian_of_shape(const Partition& lambda);

// 1^N x w = (1, ..., N, N + w(1), ..., N + w(n)).
Permutation embed_identity(const Permutation& w, int N);

// 0-Hecke action: T_u T_s is T_{us} when l(us) > l(u) and T_u otherwise.
// RangeError unless 1 <= s < n.
Permutation hecke_product(const Permutation& u, int s);
// Folds a word starting from the identity of S_n.
Permutation word_to_hecke(const HeckeWord& word, int n);
// One reduced word (lexicographically chosen by smallest descents).
HeckeWord reduced_word(const Permutation& w);

// u <=_R w in the right weak order, via containment of left inversion sets.
bool left_factor_check(const Permutation& u, const Permutation& w);

}  // namespace cde
