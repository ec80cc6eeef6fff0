#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "cde/core/capacity.hpp"
#include "cde/core/errors.hpp"
#include "cde/poset/builders.hpp"
#include "cde/poset/enumeration.hpp"
#include "cde/poset/isomorphism.hpp"
#include "cde/poset/statistics.hpp"
#include "doctest.h"

using namespace cde;

namespace {

// All maximal chains by explicit depth-first enumeration.
std::vector<std::vector<Elem>> brute_maximal_chains(const FinitePoset& p) {
    std::vector<std::vector<Elem>> out;
    std::vector<Elem> cur;
    auto rec = [&](auto&& self, Elem v) -> void {
        cur.push_back(v);
        if (p.upper_covers(v).empty()) out.push_back(cur);
        for (Elem w : p.upper_covers(v)) self(self, w);
        cur.pop_back();
    };
    for (Elem v : p.minimal_elements()) rec(rec, v);
    return out;
}

BigRational brute_EY(const FinitePoset& p) {
    long num = 0, den = 0;
    for (const auto& c : brute_maximal_chains(p))
        for (Elem e : c) {
            num += static_cast<long>(p.lower_covers(e).size());
            ++den;
        }
    return BigRational(num, den);
}

// Explicit enumeration of all m-multichains; each element is weighted by
// the number of multichains containing it.
BigRational brute_EXm(const FinitePoset& p, unsigned m) {
    OrderRelation rel(p);
    std::vector<long> containing(p.size(), 0);
    std::vector<Elem> cur;
    auto rec = [&](auto&& self) -> void {
        if (cur.size() == m) {
            std::vector<Elem> s = cur;
            s.erase(std::unique(s.begin(), s.end()), s.end());
            for (Elem e : s) ++containing[e];
            return;
        }
        for (Elem v = 0; v < p.size(); ++v)
            if (cur.empty() || rel.leq(cur.back(), v)) {
                cur.push_back(v);
                self(self);
                cur.pop_back();
            }
    };
    rec(rec);
    long num = 0, den = 0;
    for (Elem e = 0; e < p.size(); ++e) {
        den += containing[e];
        num += containing[e] * static_cast<long>(p.lower_covers(e).size());
    }
    return BigRational(num, den);
}

long brute_linear_extensions(const FinitePoset& p) {
    OrderRelation rel(p);
    std::vector<Elem> perm(p.size());
    std::iota(perm.begin(), perm.end(), 0);
    long count = 0;
    do {
        bool ok = true;
        for (std::size_t a = 0; a < perm.size() && ok; ++a)
            for (std::size_t b = a + 1; b < perm.size() && ok; ++b)
                if (rel.less(perm[b], perm[a])) ok = false;
        count += ok;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

FinitePoset random_poset(std::mt19937& rng, std::size_t n, double density) {
    // Naturally labelled: relations only from smaller to larger ids.
    std::vector<boost::dynamic_bitset<>> rel(n, boost::dynamic_bitset<>(n));
    std::bernoulli_distribution coin(density);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i)
            if (coin(rng)) rel[i].set(j);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (rel[i][k]) rel[i] |= rel[k];
    std::vector<Cover> covers;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (!rel[i][j]) continue;
            bool implied = false;
            for (std::size_t k = 0; k < n && !implied; ++k) implied = rel[i][k] && rel[k][j];
            if (!implied) covers.emplace_back(static_cast<Elem>(i), static_cast<Elem>(j));
        }
    return FinitePoset(n, covers);
}

FinitePoset v_poset() { return FinitePoset(3, {{0, 1}, {0, 2}}); }

}  // namespace

TEST_CASE("validation") {
    CHECK_NOTHROW(chain(3));
    CHECK_THROWS_AS(FinitePoset(2, {{0, 1}, {1, 0}}), CycleError);
    CHECK_THROWS_AS(FinitePoset(3, {{0, 1}, {1, 2}, {0, 2}}), NotReducedError);
    // ungraded but reduced: pentagon
    CHECK_NOTHROW(FinitePoset(5, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}}));
    // ungraded and not reduced
    CHECK_THROWS_AS(FinitePoset(5, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}, {0, 4}}), NotReducedError);
    CHECK_THROWS_AS(FinitePoset(2, {{0, 2}}), DomainError);
    CHECK_THROWS_AS(expectation_X(FinitePoset()), EmptyPosetError);
    CHECK_THROWS_AS(expectation_Y(FinitePoset()), EmptyPosetError);
    CHECK_THROWS_AS(chain(0), SizeError);
    CHECK_THROWS_AS(tamari(2), SizeError);
    CHECK_THROWS_AS(pabcd(1, 0, 1, 1), SizeError);
}

TEST_CASE("capacity bound") {
    const auto saved = capacity_limit();
    set_capacity_limit(10);
    CHECK_THROWS_AS(boolean_lattice(4), CapacityError);
    CHECK_THROWS_AS(tamari(6), CapacityError);
    set_capacity_limit(saved);
    CHECK(boolean_lattice(4).size() == 16);
}

TEST_CASE("basic expectations") {
    for (std::size_t n = 1; n <= 6; ++n) CHECK(expectation_X(chain(n)) == BigRational(n - 1, n));
    auto m3 = m3_lattice();
    CHECK(expectation_X(m3) == BigRational(6, 5));
    CHECK(expectation_Y(m3) == BigRational(4, 3));
    CHECK(brute_EY(m3) == BigRational(4, 3));
    auto os = ordinal_sum(antichain(1), antichain(2));
    CHECK(expectation_X(os) == BigRational(2, 3));
    CHECK(expectation_Y(os) == BigRational(1, 2));
    CHECK_FALSE(is_CDE(os));
    CHECK(is_CDE(pabcd(2, 1, 3, 2)));
    CHECK(is_mCDE_upto(pabcd(2, 1, 3, 2), 6));
    auto st = stats(pabcd(2, 2, 3, 1));
    CHECK(st.EX == 1);
    CHECK(st.EY == 1);
    CHECK_FALSE(st.rank);
    auto b3 = stats(boolean_lattice(3));
    CHECK(b3.EX == BigRational(3, 2));
    CHECK(b3.EY == BigRational(3, 2));
    REQUIRE(b3.rank);
    CHECK(*b3.rank == 3);
    CHECK(b3.maximal_chain_count == 6);
    CHECK(expectation_Xm(boolean_lattice(2), 5) == 1);
}

TEST_CASE("pentagon of the family is the five-element Tamari lattice") {
    CHECK(isomorphic(pabcd(1, 1, 2, 1), tamari(5)));
}

TEST_CASE("tamari") {
    const long catalan[] = {1, 1, 2, 5, 14, 42, 132, 429};
    for (std::size_t n = 3; n <= 9; ++n) {
        auto t = tamari(n);
        CHECK(t.size() == static_cast<std::size_t>(catalan[n - 2]));
        auto s = stats(t);
        CHECK(s.EX == BigRational(static_cast<long>(n) - 3, 2));
        CHECK(s.EY == BigRational(static_cast<long>(n) - 3, 2));
        CHECK(s.maximal_chain_count == static_cast<long>(brute_maximal_chains(t).size()));
    }
    CHECK(tamari(5).size() == 5);
    CHECK(stats(tamari(5)).maximal_chain_count == 2);
    CHECK(self_dual_regular_check(tamari(6)) == BigRational(3, 2));
}

TEST_CASE("expectation_Y and expectation_Xm agree with brute-force enumeration") {
    std::mt19937 rng(5);
    for (int t = 0; t < 40; ++t) {
        auto p = random_poset(rng, 2 + rng() % 6, 0.3 + 0.1 * (t % 4));
        CHECK(expectation_Y(p) == brute_EY(p));
        CHECK(expectation_Xm(p, 1) == expectation_X(p));
        for (unsigned m = 1; m <= 4; ++m) CHECK(expectation_Xm(p, m) == brute_EXm(p, m));
        CHECK(expectation_X(p) == expectation_X(dual(p)));
    }
}

TEST_CASE("multichain expectation tends to the chain expectation on graded posets") {
    for (const auto& p : {boolean_lattice(2), product(chain(2), chain(3)), m3_lattice(),
                          pabcd(1, 2, 2, 1), ordinal_sum(antichain(2), antichain(3))}) {
        const BigRational ey = expectation_Y(p);
        auto dist = [&](unsigned m) {
            BigRational d = expectation_Xm(p, m) - ey;
            return d.sign() < 0 ? -d : d;
        };
        BigRational d5 = dist(5), d20 = dist(20), d50 = dist(50);
        CHECK(d20 <= d5);
        CHECK(d50 <= d20);
        CHECK(d50 < BigRational(1, 10));
    }
}

TEST_CASE("product law") {
    std::vector<FinitePoset> graded{chain(1), chain(3), boolean_lattice(2), m3_lattice(), v_poset(),
                                    pabcd(1, 1, 1, 2), ordinal_sum(antichain(2), antichain(3))};
    std::vector<FinitePoset> any = graded;
    any.push_back(pabcd(1, 1, 2, 1));
    any.push_back(disjoint_union(chain(2), chain(1)));
    for (const auto& p : any)
        for (const auto& q : any) {
            auto pq = product(p, q);
            CHECK(expectation_X(pq) == expectation_X(p) + expectation_X(q));
        }
    for (const auto& p : graded)
        for (const auto& q : graded) {
            auto pq = product(p, q);
            CHECK(expectation_Y(pq) == expectation_Y(p) + expectation_Y(q));
        }
    CHECK(isomorphic(product(chain(2), chain(2)), boolean_lattice(2)));
    // the graded hypothesis matters
    auto bad = product(disjoint_union(chain(2), chain(1)), chain(2));
    CHECK(expectation_Y(bad) != expectation_Y(disjoint_union(chain(2), chain(1))) + expectation_Y(chain(2)));
}

TEST_CASE("toggle symmetry") {
    CHECK(toggle_symmetry_check(chain(2), 3));
    CHECK(toggle_symmetry_check(antichain(3), 2));
    CHECK(toggle_symmetry_check(product(chain(2), chain(2)), 4));
    std::mt19937 rng(9);
    for (int t = 0; t < 15; ++t) {
        auto p = random_poset(rng, 3 + rng() % 6, 0.35);
        for (unsigned m = 1; m <= 4; ++m) CHECK(toggle_symmetry_check(p, m));
    }
}

TEST_CASE("self-dual regular posets") {
    CHECK(self_dual_regular_check(boolean_lattice(3)) == BigRational(3, 2));
    CHECK_FALSE(self_dual_regular_check(ordinal_sum(antichain(1), antichain(2))));
    CHECK_FALSE(self_dual_regular_check(m3_lattice()));  // degrees 3 and 2
    // hexagon
    FinitePoset hex(6, {{0, 1}, {0, 2}, {1, 3}, {2, 4}, {3, 5}, {4, 5}});
    CHECK(self_dual_regular_check(hex) == 1);
    // regular but not self-dual: the disjoint union of two chains is regular of
    // valence 1 only for 2-chains, which are self-dual; use a check on dual mismatch
    FinitePoset vee = v_poset();
    CHECK_FALSE(isomorphic(vee, dual(vee)));
}

TEST_CASE("isomorphism search") {
    auto j = order_ideal_lattice(product(chain(2), chain(3)));
    CHECK(j.size() == 10);
    auto perm_of = [](const FinitePoset& p, std::vector<Elem> perm) {
        std::vector<Cover> c;
        for (const auto& [a, b] : p.covers()) c.emplace_back(perm[a], perm[b]);
        return FinitePoset(p.size(), c);
    };
    std::mt19937 rng(2);
    for (int t = 0; t < 20; ++t) {
        auto p = random_poset(rng, 4 + rng() % 8, 0.3);
        std::vector<Elem> perm(p.size());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        auto q = perm_of(p, perm);
        auto iso = find_isomorphism(p, q);
        REQUIRE(iso);
        for (const auto& [a, b] : p.covers()) CHECK(q.is_cover((*iso)[a], (*iso)[b]));
    }
    CHECK_FALSE(isomorphic(chain(3), antichain(3)));
    CHECK_FALSE(isomorphic(tamari(5), boolean_lattice(2)));
    CHECK(isomorphic(boolean_lattice(4), product(boolean_lattice(2), boolean_lattice(2))));
}

TEST_CASE("linear extensions") {
    CHECK(linear_extension_count(antichain(3)) == 6);
    CHECK(linear_extension_count(FinitePoset()) == 1);
    // two chains 1..7 and 8..10
    auto p2 = disjoint_union(chain(7), chain(3));
    CHECK(forest_linear_extension_count(p2) == 120);
    CHECK(ideal_linear_extension_count(p2) == 120);
    std::mt19937 rng(4);
    for (int t = 0; t < 40; ++t) {
        auto p = random_poset(rng, 1 + rng() % 7, 0.3);
        long brute = brute_linear_extensions(p);
        CHECK(ideal_linear_extension_count(p) == brute);
        CHECK(linear_extension_count(p) == brute);
        if (is_forest(p)) CHECK(forest_linear_extension_count(p) == brute);
    }
    CHECK_THROWS_AS(forest_linear_extension_count(v_poset()), DomainError);
}

TEST_CASE("quotient by a cover") {
    auto q = quotient_cover(chain(3), 1, 2);
    CHECK(isomorphic(q, chain(2)));
    auto v = quotient_cover(v_poset(), 0, 1);
    CHECK(v.size() == 2);
    CHECK(v.is_cover(0, 1));
    CHECK_THROWS_AS(quotient_cover(chain(3), 0, 2), NotCoverError);
    // closed form of the ratio on forests
    std::mt19937 rng(12);
    int tested = 0;
    while (tested < 30) {
        auto p = random_poset(rng, 2 + rng() % 7, 0.25);
        if (!is_forest(p) || p.covers().empty()) continue;
        ++tested;
        for (const auto& [i, j] : p.covers()) {
            BigRational ratio(ideal_linear_extension_count(quotient_cover(p, i, j)),
                              ideal_linear_extension_count(p));
            CHECK(hook_cancellation_ratio(p, i, j) == ratio);
        }
    }
}

TEST_CASE("poset file round trip") {
    auto t = tamari(6);
    std::istringstream in(write_poset(t));
    auto back = read_poset(in);
    CHECK(back.covers() == t.covers());
    CHECK(back.labels() == t.labels());
    std::istringstream bad("n 2\ncover 0 1\ncover 1 0\n");
    CHECK_THROWS_AS(read_poset(bad), CycleError);
    std::istringstream junk("n 2\nedge 0 1\n");
    CHECK_THROWS_AS(read_poset(junk), ParseError);
    auto m3 = load_poset_file(std::string(CDE_DATA_DIR) + "/m3.poset");
    CHECK(isomorphic(m3, m3_lattice()));
}

TEST_CASE("non-CDE witnesses") {
    auto j222 = order_ideal_lattice(product(product(chain(2), chain(2)), chain(2)));
    CHECK(j222.size() == 20);
    CHECK_FALSE(is_CDE(j222));
}

TEST_CASE("enumeration up to isomorphism") {
    const std::vector<std::size_t> posets{1, 1, 2, 5, 16, 63, 318};
    for (std::size_t n = 0; n < posets.size(); ++n) CHECK(enumerate_posets(n).size() == posets[n]);
    const std::vector<std::size_t> forests{1, 1, 2, 4, 9, 20, 48, 115, 286, 719};
    for (std::size_t n = 0; n < forests.size(); ++n) {
        auto fs = enumerate_forests(n);
        CHECK(fs.size() == forests[n]);
        for (const auto& f : fs) CHECK(is_forest(f));
    }
    auto five = enumerate_posets(5);
    for (std::size_t i = 0; i < five.size(); ++i)
        for (std::size_t j = i + 1; j < five.size(); ++j) CHECK_FALSE(isomorphic(five[i], five[j]));
}
