#include <algorithm>
#include <set>

#include "cde/core/errors.hpp"
#include "cde/poset/builders.hpp"
#include "cde/poset/isomorphism.hpp"
#include "cde/poset/statistics.hpp"
#include "cde/tableaux/bijections.hpp"
#include "cde/tableaux/counting.hpp"
#include "cde/tableaux/crowding.hpp"
#include "cde/tableaux/young.hpp"
#include "doctest.h"

using namespace cde;

namespace {

SetValuedTableau grid(const std::string& text) { return SetValuedTableau::parse(text); }

// Gaussian binomial [n choose k]_q by the q-Pascal rule.
IntPolynomial q_binomial(int n, int k) {
    if (k < 0 || k > n) return {};
    if (k == 0 || k == n) return IntPolynomial{1};
    return q_binomial(n - 1, k - 1) + IntPolynomial::monomial(1, static_cast<std::size_t>(k)) * q_binomial(n - 1, k);
}

std::vector<Partition> shapes_up_to(int n) {
    std::vector<Partition> all;
    for (int k = 0; k <= n; ++k)
        for (const auto& p : partitions_of(k)) all.push_back(p);
    return all;
}

}  // namespace

TEST_CASE("partitions") {
    CHECK(rect_staircase(4, 2, 4) == Partition{12, 12, 8, 8, 4, 4});
    CHECK(rect_staircase(2, 3, 5) == Partition{5, 5, 5});
    CHECK(rect_staircase(5, 1, 1) == Partition{4, 3, 2, 1});
    CHECK(rect_staircase(1, 2, 2).empty());
    auto p = as_rect_staircase(Partition{12, 12, 8, 8, 4, 4});
    REQUIRE(p);
    CHECK(p->d == 4);
    CHECK(p->a == 2);
    CHECK(p->b == 4);
    CHECK_FALSE(as_rect_staircase(Partition{3, 1, 1}));
    CHECK(Partition::parse("3,1,1") == Partition{3, 1, 1});
    CHECK(Partition::parse("").empty());
    CHECK(Partition{3, 1, 1}.transpose() == Partition{3, 1, 1});
    CHECK(Partition{4, 2}.transpose() == Partition{2, 2, 1, 1});
    CHECK_THROWS_AS(Partition({1, 2}), DomainError);
    CHECK_THROWS_AS(ShiftedPartition({2, 2}), DomainError);
    CHECK(partitions_of(6).size() == 11);
    CHECK(partitions_of(10).size() == 42);
}

TEST_CASE("shifted families") {
    CHECK(shifted_falling_by_twos(8, 2) == ShiftedPartition{8, 6, 4});
    CHECK(shifted_falling_by_twos(9, 3) == ShiftedPartition{9, 7, 5, 3});
    CHECK(shifted_square_staircase(8, 3, 2) == ShiftedPartition{11, 10, 7, 6, 3, 2, 1});
    for (int N = 1; N <= 5; ++N)
        CHECK(shifted_falling_by_twos(2 * N - 1, N - 1) == shifted_square_staircase(N + 1, N, 1));
    CHECK_THROWS_AS(shifted_falling_by_twos(4, 2), DomainError);
    CHECK_THROWS_AS(shifted_square_staircase(3, 3, 1), DomainError);
}

TEST_CASE("young intervals") {
    CHECK(isomorphic(young_interval(Partition{1}), chain(2)));
    auto y21 = young_interval(Partition{2, 1});
    CHECK(y21.size() == 5);
    CHECK(y21.edge_count() == 5);
    auto s = stats(young_interval(Partition{3, 1, 1}));
    CHECK(s.EX == BigRational(13, 10));
    CHECK(s.EY == BigRational(23, 18));
    CHECK(isomorphic(order_ideal_lattice(product(chain(2), chain(3))), young_interval(Partition{3, 3})));
    for (const auto& lambda : shapes_up_to(8)) {
        auto y = young_interval(lambda);
        CHECK(young_EX(lambda) == expectation_X(y));
        CHECK(young_EY(lambda) == expectation_Y(y));
        CHECK(young_EX(lambda) == expectation_X(dual(y)));
        CHECK(young_EY(lambda) == expectation_Y(dual(y)));
    }
}

TEST_CASE("shifted intervals") {
    CHECK(isomorphic(shifted_interval(ShiftedPartition{1}), chain(2)));
    CHECK(isomorphic(shifted_interval(ShiftedPartition{2, 1}), chain(4)));
    auto s31 = shifted_interval(ShiftedPartition{3, 1});
    // (), (1), (2), (3), (2,1), (3,1)
    CHECK(s31.size() == 6);
    CHECK(expectation_X(s31) == 1);
    CHECK(expectation_Y(s31) == 1);
}

TEST_CASE("rank generating function") {
    CHECK(rank_generating_function(Partition{1}) == IntPolynomial{1, 1});
    CHECK(rank_generating_function(Partition{2, 1}) == IntPolynomial{1, 1, 2, 1});
    for (const auto& lambda : shapes_up_to(12))
        CHECK(rank_generating_function(lambda) == rank_generating_function_direct(lambda));
    for (const auto& lambda : {Partition{6, 5, 3, 3, 2, 1}, Partition{7, 7, 4, 2}, Partition{10, 6, 4},
                               Partition{5, 5, 5, 5}, rect_staircase(3, 2, 3)})
        CHECK(rank_generating_function(lambda) == rank_generating_function_direct(lambda));
    for (int a = 1; a <= 5; ++a)
        for (int b = 1; b <= 5; ++b)
            CHECK(rank_generating_function(Partition(std::vector<int>(a, b))) == q_binomial(a + b, a));
}

TEST_CASE("standard and barely set-valued counts") {
    CHECK(hook_f(Partition{2, 1}) == 2);
    CHECK(hook_f(Partition{2, 2}) == 2);
    CHECK(hook_f(Partition{7}) == 1);
    CHECK(f_plus_one(Partition{2, 1}) == 8);
    CHECK(f_plus_one(Partition{1}) == 1);
    for (const auto& lambda : shapes_up_to(8)) {
        CHECK(hook_f(lambda) == static_cast<long>(enumerate_standard_set_valued(lambda, 0).size()));
        CHECK(f_plus_one(lambda) == static_cast<long>(enumerate_standard_set_valued(lambda, 1).size()));
        CHECK(f_plus_one(lambda) == f_plus_one(lambda.transpose()));
        CHECK(rank_generating_function(lambda) == rank_generating_function(lambda.transpose()));
        CHECK(Rplus_recurrence(lambda) == Rplus_recurrence(lambda.transpose()));
    }
}

TEST_CASE("the eight barely set-valued tableaux of shape (2,1)") {
    auto list = enumerate_standard_set_valued(Partition{2, 1}, 1);
    std::set<SetValuedTableau> got(list.begin(), list.end());
    std::set<SetValuedTableau> expected{
        grid("{1,2}\t3\n4"), grid("{1,2}\t4\n3"), grid("1\t{2,3}\n4"), grid("1\t4\n{2,3}"),
        grid("1\t{2,4}\n3"), grid("1\t3\n{2,4}"), grid("1\t2\n{3,4}"), grid("1\t{3,4}\n2")};
    CHECK(got == expected);
    CHECK(std::is_sorted(list.begin(), list.end()));
}

TEST_CASE("kerov identity") {
    for (const auto& lambda : shapes_up_to(12)) CHECK(kerov_mean_zero_check(lambda));
    CHECK(kerov_mean_zero_check(Partition{5, 3, 3, 1}));
}

TEST_CASE("hook-content formula") {
    CHECK(hook_content_count(Partition{1}, 3) == 3);
    CHECK(hook_content_count(Partition{2, 1}, 2) == 2);
    for (const auto& lambda : shapes_up_to(6))
        for (int t = 1; t <= 5; ++t) {
            Flag f{std::vector<int>(static_cast<std::size_t>(std::max(lambda.length(), 1)), t)};
            CHECK(hook_content_count(lambda, t) == count_ssyt(lambda, f, lambda.size()));
        }
    // (b^a,1) against b^a at t = x + a
    BigRational ratio(hook_content_count(Partition{3, 3, 1}, 6), hook_content_count(Partition{3, 3}, 6));
    CHECK(ratio == BigRational(12, 5));
}

TEST_CASE("flagged set-valued tableaux") {
    Flag phi{{2, 3}};
    CHECK(enumerate_ssyt(Partition{2, 1}, phi, 3).size() == 5);
    CHECK(enumerate_ssyt(Partition{2, 1}, phi, 4).size() == 5);
    CHECK(enumerate_ssyt(Partition{2, 1}, phi, 2).empty());
    CHECK(count_ssyt(Partition{2, 1}, phi, 3) == 5);
    CHECK(count_ssyt(Partition{2, 1}, phi, 4) == 5);
    CHECK(count_ssyt(Partition{2, 1}, phi, 2) == 0);
    CHECK_THROWS_AS(count_ssyt(Partition{2, 1}, Flag{{2}}, 3), MalformedInputError);
    CHECK(count_ssyt(Partition{2, 1}, Flag{{2, 3, 1}}, 3) == 5);  // longer flags are truncated

    for (const auto& lambda : shapes_up_to(5))
        for (int offset = 0; offset <= 2; ++offset) {
            Flag f = Flag::shifted_identity(lambda.length(), offset + 1);
            for (int j = lambda.size(); j <= lambda.size() + 2; ++j) {
                auto list = enumerate_ssyt(lambda, f, j);
                CHECK(count_ssyt(lambda, f, j) == static_cast<long>(list.size()));
                CHECK(std::is_sorted(list.begin(), list.end()));
                for (const auto& t : list) {
                    CHECK(t.entry_count() == j);
                    CHECK(t.is_flagged(f.bounds));
                }
            }
        }
}

TEST_CASE("R and R+") {
    auto r1 = R_and_Rplus(Partition{1});
    CHECK(r1.R == 2);
    CHECK(r1.Rplus == 1);
    auto r21 = R_and_Rplus(Partition{2, 1});
    CHECK(r21.R == 5);
    CHECK(r21.Rplus == 5);
    auto r42 = R_and_Rplus(rect_staircase(3, 1, 2));
    CHECK(BigRational(r42.Rplus, r42.R) == BigRational(4, 3));
    for (const auto& lambda : shapes_up_to(10)) {
        auto r = R_and_Rplus(lambda);
        auto y = young_interval(lambda);
        CHECK(r.R == static_cast<long>(y.size()));
        CHECK(r.Rplus == static_cast<long>(y.edge_count()));
    }
}

TEST_CASE("rectangular staircases") {
    for (int d = 2; d <= 4; ++d)
        for (int a = 1; a <= 3; ++a)
            for (int b = 1; b <= 3; ++b) {
                Partition lambda = rect_staircase(d, a, b);
                BigRational expected(static_cast<long>((d - 1) * a * b), static_cast<long>(a + b));
                CHECK(young_EX(lambda) == expected);
                CHECK(young_EY(lambda) == expected);
                CHECK(BigRational(f_plus_one(lambda)) ==
                      BigRational(lambda.size() + 1) * expected * BigRational(hook_f(lambda)));
            }
}

TEST_CASE("uncrowding fixture") {
    auto t = grid("1\t1\t2\t2\t4\n2\t3\t{3,4}\t4\n4\t5\t5\t7\n5\t6\t6\n6");
    auto plus = grid("1\t1\t2\t2\t4\n2\t3\t3\t4\n4\t4\t5\t7\n5\t5\t6\n6\t6");
    auto u = uncrowd(t);
    CHECK(u.tableau == plus);
    CHECK(u.corner == Cell{5, 2});
    CHECK(u.row == 2);
    CHECK(crowd(plus, {5, 2}, 2) == t);
    CHECK(crowd(plus, {5, 2}, 4) == grid("1\t1\t2\t2\t4\n2\t3\t3\t4\n4\t4\t5\t7\n5\t{5,6}\t6\n6"));
    CHECK(crowd(plus, {5, 2}, 3) == grid("1\t1\t2\t2\t4\n2\t3\t3\t4\n4\t{4,5}\t5\t7\n5\t6\t6\n6"));
    CHECK(crowd(plus, {5, 2}, 1) == grid("1\t1\t2\t{2,3}\t4\n2\t3\t4\t4\n4\t5\t5\t7\n5\t6\t6\n6"));
    CHECK_THROWS_AS(crowd(plus, {5, 2}, 5), RangeError);
    CHECK_THROWS_AS(crowd(plus, {5, 2}, 0), RangeError);
    CHECK_THROWS_AS(crowd(plus, {4, 2}, 1), NotCornerError);
    CHECK_THROWS_AS(uncrowd(plus), NotBarelySetValuedError);

    auto single = uncrowd(grid("{1,2}"));
    CHECK(single.tableau == grid("1\n2"));
    CHECK(single.corner == Cell{2, 1});
    CHECK(single.row == 1);
}

TEST_CASE("uncrowd and crowd are inverse bijections") {
    for (int n = 1; n <= 7; ++n)
        for (const auto& lambda : partitions_of(n)) {
            // standard barely set-valued tableaux
            std::set<std::tuple<SetValuedTableau, Cell, int>> images;
            auto domain = enumerate_standard_set_valued(lambda, 1);
            for (const auto& t : domain) {
                auto u = uncrowd(t);
                CHECK(u.tableau.is_standard());
                CHECK(u.tableau.shape() == lambda.add(u.corner));
                CHECK(crowd(u.tableau, u.corner, u.row) == t);
                images.emplace(u.tableau, u.corner, u.row);
            }
            CHECK(images.size() == domain.size());
            // every triple is hit: count triples over the standard tableaux of lambda + x
            std::size_t triples = 0;
            for (const Cell& x : lambda.outer_corners())
                triples += static_cast<std::size_t>(x.row - 1) *
                           enumerate_standard_set_valued(lambda.add(x), 0).size();
            CHECK(triples == domain.size());
        }
    // column-strict (non-standard) barely set-valued tableaux with small entries
    for (int n = 1; n <= 5; ++n)
        for (const auto& lambda : partitions_of(n)) {
            Flag f{std::vector<int>(static_cast<std::size_t>(lambda.length()), 4)};
            for (const auto& t : enumerate_ssyt(lambda, f, n + 1)) {
                if (!t.is_barely_set_valued()) continue;
                auto u = uncrowd(t);
                CHECK(crowd(u.tableau, u.corner, u.row) == t);
            }
        }
}

TEST_CASE("chain bijections on examples") {
    auto t = grid("1\t3\t5\n2\t6\n4");
    ShapeChain c = standard_to_chain(t);
    ShapeChain expected{Partition{}, Partition{1}, Partition{1, 1}, Partition{2, 1},
                        Partition{2, 1, 1}, Partition{3, 1, 1}, Partition{3, 2, 1}};
    CHECK(c == expected);
    CHECK(chain_to_standard(c) == t);

    auto b = grid("1\t{2,5}\t6\n3\t7\n4");
    auto triple = barely_to_triple(b);
    CHECK(triple.chain == ShapeChain{Partition{}, Partition{1}, Partition{2}, Partition{2, 1},
                                     Partition{2, 1, 1}, Partition{3, 1, 1}, Partition{3, 2, 1}});
    CHECK(triple.mu == Partition{2, 1, 1});
    CHECK(triple.nu == Partition{1, 1, 1});
    CHECK(triple_to_barely(triple) == b);

    auto dual_triple = barely_to_dual_triple(b);
    CHECK(dual_triple.chain == ShapeChain{Partition{3, 2, 1}, Partition{3, 1, 1}, Partition{2, 1, 1},
                                          Partition{1, 1, 1}, Partition{1, 1}, Partition{1}, Partition{}});
    CHECK(dual_triple.mu == Partition{1});
    CHECK(dual_triple.nu == Partition{2});
    CHECK(dual_triple_to_barely(dual_triple) == b);

    auto flagged = grid("1\t2\t2\n2\t3\n4");
    CHECK(flagged_to_shape(flagged) == Partition{1, 1});
    CHECK(shape_to_flagged(Partition{3, 2, 1}, Partition{1, 1}) == flagged);

    auto fb = grid("1\t1\t2\t2\n2\t{2,3}\t3\n4");
    auto [nu, mu] = flagged_barely_to_cover(fb);
    CHECK(nu == Partition{2, 1});
    CHECK(mu == Partition{2, 2});
    CHECK(cover_to_flagged_barely(Partition{4, 3, 1}, nu, mu) == fb);

    CHECK_THROWS_AS(standard_to_chain(b), MalformedInputError);
    CHECK_THROWS_AS(flagged_to_shape(grid("1\t3")), MalformedInputError);
    CHECK_THROWS_AS(triple_to_barely(ChainTriple{expected, Partition{5}, Partition{4}}), MalformedInputError);
}

TEST_CASE("chain bijections on full domains") {
    for (const auto& lambda : shapes_up_to(6)) {
        auto chains = maximal_chains(lambda);
        auto standard = enumerate_standard_set_valued(lambda, 0);
        CHECK(chains.size() == standard.size());
        std::set<ShapeChain> seen;
        for (const auto& t : standard) {
            seen.insert(standard_to_chain(t));
            CHECK(chain_to_standard(standard_to_chain(t)) == t);
        }
        CHECK(seen.size() == chains.size());

        // (b) and (c): count the triple domain directly
        auto barely = enumerate_standard_set_valued(lambda, 1);
        std::size_t triples = 0;
        for (const auto& ch : chains)
            for (const auto& m : ch) triples += m.inner_corners().size();
        CHECK(triples == barely.size());
        std::set<std::tuple<ShapeChain, Partition, Partition>> b_img, c_img;
        for (const auto& t : barely) {
            auto tb = barely_to_triple(t);
            CHECK(triple_to_barely(tb) == t);
            b_img.emplace(tb.chain, tb.mu, tb.nu);
            auto tc = barely_to_dual_triple(t);
            CHECK(dual_triple_to_barely(tc) == t);
            c_img.emplace(tc.chain, tc.mu, tc.nu);
        }
        CHECK(b_img.size() == barely.size());
        CHECK(c_img.size() == barely.size());

        // (d) and (e)
        Flag phi = Flag::shifted_identity(lambda.length(), 1);
        auto flagged = enumerate_ssyt(lambda, phi, lambda.size());
        auto subs = subpartitions(lambda);
        CHECK(flagged.size() == subs.size());
        for (const auto& t : flagged) CHECK(shape_to_flagged(lambda, flagged_to_shape(t)) == t);
        auto flagged_barely = enumerate_ssyt(lambda, phi, lambda.size() + 1);
        CHECK(flagged_barely.size() == young_interval(lambda).edge_count());
        for (const auto& t : flagged_barely) {
            auto [nu, mu] = flagged_barely_to_cover(t);
            CHECK(cover_to_flagged_barely(lambda, nu, mu) == t);
        }
    }
}

TEST_CASE("tableau text format") {
    auto t = grid("1\t{2,5}\t6\n3\t7\n4");
    CHECK(t.str() == "{1}\t{2,5}\t{6}\n{3}\t{7}\n{4}\n");
    CHECK(SetValuedTableau::parse(t.str()) == t);
    CHECK_THROWS_AS(grid("2\t1"), MalformedInputError);
    CHECK_THROWS_AS(grid("1\n1"), MalformedInputError);
    CHECK_THROWS_AS(grid("{1,x}"), ParseError);
}
