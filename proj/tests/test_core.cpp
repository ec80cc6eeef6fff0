#include <random>
#include <vector>

#include "cde/core/errors.hpp"
#include "cde/core/polynomial.hpp"
#include "cde/core/rational.hpp"
#include "cde/core/special.hpp"
#include "doctest.h"

using namespace cde;

namespace {

// Counts set partitions of {0..n-1} into exactly k blocks via restricted
// growth strings.
long brute_set_partitions(int n, int k) {
    std::vector<int> a(n, 0);
    long count = 0;
    auto rec = [&](auto&& self, int i, int blocks) -> void {
        if (i == n) {
            if (blocks == k) ++count;
            return;
        }
        for (int b = 0; b <= blocks; ++b) {
            a[i] = b;
            self(self, i + 1, b == blocks ? blocks + 1 : blocks);
        }
    };
    if (n == 0) return k == 0 ? 1 : 0;
    rec(rec, 0, 0);
    return count;
}

BigRational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-30, 30), den(1, 12);
    return BigRational(num(rng), den(rng));
}

}  // namespace

TEST_CASE("rational canonical form") {
    BigRational r(6, -4);
    CHECK(r.numerator() == -3);
    CHECK(r.denominator() == 2);
    CHECK(BigRational(0, 5).str() == "0");
    CHECK(BigRational(0, 5).denominator() == 1);
    CHECK(BigRational::parse("13/10") == BigRational(13, 10));
    CHECK(BigRational::parse("-4") == BigRational(-4));
    CHECK_THROWS_AS(BigRational(1, 0), DomainError);
    CHECK_THROWS_AS(BigRational(1) / BigRational(0), DomainError);
    CHECK_THROWS_AS(BigRational::parse("x/2"), ParseError);
}

TEST_CASE("stirling numbers agree with set-partition enumeration") {
    CHECK(stirling2(0, 0) == 1);
    CHECK(stirling2(3, 5) == 0);
    for (int n = 0; n <= 8; ++n)
        for (int k = 0; k <= n; ++k) CHECK(stirling2(n, k) == brute_set_partitions(n, k));
    // frozen from the enumeration above
    CHECK(stirling2(5, 2) == 15);
    CHECK(stirling2(4, 3) == 6);
    for (unsigned l = 1; l <= 15; ++l) CHECK(stirling2(l + 1, l) == binomial(l + 1, 2));
}

TEST_CASE("surjection decomposition of n^L") {
    for (unsigned L = 0; L <= 12; ++L)
        for (long n = 0; n <= 6; ++n) {
            BigInt s = 0;
            for (unsigned j = 0; j <= L; ++j) s += stirling2(L, j) * factorial(j) * binomial(n, j);
            BigInt p;
            mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(n), L);
            CHECK(s == p);
        }
}

TEST_CASE("pochhammer") {
    CHECK(pochhammer(BigRational(1, 2), 0) == 1);
    CHECK(pochhammer(BigRational(1, 2), 2) == BigRational(3, 4));
    CHECK(pochhammer(BigRational(-3), 5) == 0);
    std::mt19937 rng(7);
    for (int t = 0; t < 200; ++t) {
        BigRational z = random_rational(rng);
        unsigned j = rng() % 9, k = rng() % 9;
        CHECK(pochhammer(z, j) * pochhammer(z + BigRational(static_cast<long>(j)), k) ==
              pochhammer(z, j + k));
    }
}

TEST_CASE("chu-vandermonde") {
    CHECK(chu_vandermonde_check(0, BigRational(7, 3), BigRational(1)));
    CHECK(chu_vandermonde_check(2, BigRational(3, 2), BigRational(5, 2)));
    CHECK(chu_vandermonde_check(5, BigRational(1, 3), BigRational(7, 3)));
    CHECK_THROWS_AS(chu_vandermonde_check(3, BigRational(1), BigRational(-1)), DomainError);
    std::mt19937 rng(11);
    int checked = 0;
    while (checked < 100) {
        unsigned m = rng() % 9;
        BigRational B = random_rational(rng), C = random_rational(rng);
        bool valid = true;
        for (unsigned i = 0; i < m; ++i)
            if ((C + BigRational(static_cast<long>(i))).is_zero()) valid = false;
        if (!valid) continue;
        CHECK(chu_vandermonde_check(m, B, C));
        ++checked;
    }
}

TEST_CASE("polynomial arithmetic and division") {
    IntPolynomial x1{1, 1};
    CHECK((x1 * x1) == IntPolynomial{1, 2, 1});
    CHECK(IntPolynomial{0, 0}.is_zero());
    CHECK(IntPolynomial{6, 13, 9, 2}.str() == "2x^3 + 9x^2 + 13x + 6");
    CHECK(IntPolynomial{6, 13, 9, 2}.list_str() == "[6, 13, 9, 2]");

    auto q = poly_divides(x1, IntPolynomial{1, 2, 1});
    REQUIRE(q);
    CHECK(q->numerator == x1);
    CHECK(q->denominator == 1);
    CHECK_FALSE(poly_divides(x1, IntPolynomial{2, 1}));
    CHECK_THROWS_AS(poly_divides(IntPolynomial{}, x1), DomainError);

    // (x+1)(x+2)(2x+3) divides 2(x+1)(x+2)(2x+3)^2 with quotient 4x+6
    IntPolynomial a = IntPolynomial{1, 1} * IntPolynomial{2, 1} * IntPolynomial{3, 2};
    IntPolynomial b = a * IntPolynomial{3, 2} * BigInt(2);
    auto r = poly_divides(a, b);
    REQUIRE(r);
    CHECK(r->numerator == IntPolynomial{6, 4});
    CHECK(r->denominator == 1);

    // rational quotient: (x^2 + x) / (2x) = (x + 1)/2
    auto h = poly_divides(IntPolynomial{0, 2}, IntPolynomial{0, 1, 1});
    REQUIRE(h);
    CHECK(h->numerator == IntPolynomial{1, 1});
    CHECK(h->denominator == 2);

    std::mt19937 rng(3);
    for (int t = 0; t < 100; ++t) {
        std::vector<BigInt> pc, rc;
        for (int i = 0; i < 1 + static_cast<int>(rng() % 4); ++i) pc.emplace_back(static_cast<long>(rng() % 7) - 3);
        for (int i = 0; i < 1 + static_cast<int>(rng() % 4); ++i) rc.emplace_back(static_cast<long>(rng() % 7) - 3);
        IntPolynomial p(pc), rr(rc);
        if (p.is_zero()) continue;
        IntPolynomial prod = p * rr;
        auto d = poly_divides(p, prod);
        REQUIRE(d);
        CHECK(p * d->numerator == prod * d->denominator);
    }
}

TEST_CASE("interpolation") {
    IntPolynomial f{6, 13, 9, 2};
    std::vector<BigRational> xs, ys;
    for (long x = 1; x <= 5; ++x) {
        xs.emplace_back(x);
        ys.emplace_back(f.evaluate(BigInt(x)));
    }
    CHECK(interpolate_integer(xs, ys) == f);
}
