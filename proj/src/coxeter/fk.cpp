#include "cde/coxeter/fk.hpp"

#include "cde/core/errors.hpp"
#include "cde/core/special.hpp"
#include "cde/coxeter/rothe.hpp"
#include "cde/coxeter/weak_order.hpp"
#include "cde/tableaux/counting.hpp"
#include "cde/tableaux/partition.hpp"

namespace cde {

namespace {

IntPolynomial fk_words(const Permutation& w, int L) {
    auto I = build_weak_interval(w);
    std::vector<IntPolynomial> poly(I.size());
    poly[0] = IntPolynomial{1};
    std::vector<IntPolynomial> factor;
    for (int s = 1; s < w.size(); ++s) factor.push_back(IntPolynomial{s, 1});
    for (int step = 0; step < L; ++step) {
        std::vector<IntPolynomial> next(I.size());
        for (std::size_t u = 0; u < I.size(); ++u) {
            if (poly[u].is_zero()) continue;
            for (int s = 1; s < w.size(); ++s) {
                const int v = I.step[u][static_cast<std::size_t>(s - 1)];
                if (v >= 0) next[static_cast<std::size_t>(v)] += poly[u] * factor[static_cast<std::size_t>(s - 1)];
            }
        }
        poly = std::move(next);
    }
    return poly.back();
}

Flag shifted(const Flag& phi, int x) {
    Flag out = phi;
    for (int& v : out.bounds) v += x;
    return out;
}

IntPolynomial fk_tableaux(const Permutation& w, int L) {
    RotheData r = rothe(w);
    const Partition& lambda = r.lambda_w;
    const int n = lambda.size();
    if (L < n) return {};
    std::vector<BigRational> xs, ys;
    for (int x = 1; x <= L + 2; ++x) {
        auto counts = count_ssyt_by_entries(lambda, shifted(r.flag_w, x), L);
        BigInt total = 0;
        for (int j = n; j <= L; ++j)
            total += counts[static_cast<std::size_t>(j - n)] * factorial(static_cast<unsigned>(j)) *
                     stirling2(static_cast<unsigned>(L), static_cast<unsigned>(j));
        xs.emplace_back(x);
        ys.emplace_back(total);
    }
    return interpolate_integer(xs, ys);
}

}  // namespace

IntPolynomial fk_polynomial(const Permutation& w, int L, FkRoute via) {
    if (L < 0) throw DomainError("word length must be nonnegative");
    return via == FkRoute::words ? fk_words(w, L) : fk_tableaux(w, L);
}

bool FkConjectureResult::consistent() const {
    if (!divisibility_matches) return false;
    for (bool m : ratio_matches)
        if (!m) return false;
    return true;
}

FkConjectureResult conjecture_fk_check(int d, int a, int b) {
    if (d < 2 || a < 1 || b < 1) throw DomainError("conjecture check needs d >= 2 and a, b >= 1");
    FkConjectureResult r;
    r.d = d;
    r.a = a;
    r.b = b;
    const Partition lambda = rect_staircase(d, a, b);
    const Permutation w = dominant_of_shape(lambda);
    r.ell = lambda.size();
    r.route = weak_interval_size(w) <= kFkWordsRouteLimit ? FkRoute::words : FkRoute::tableaux;
    r.fk_ell = fk_polynomial(w, r.ell, r.route);
    r.fk_next = fk_polynomial(w, r.ell + 1, r.route);
    r.quotient = poly_divides(r.fk_ell, r.fk_next);

    const long da = static_cast<long>(d) * (a + b);
    const BigInt pairs = binomial(static_cast<unsigned>(r.ell + 1), 2);
    IntPolynomial num = IntPolynomial{da, 4} * pairs;
    BigInt den = da;
    BigInt g = gcd(den, gcd(num.coefficient(0), num.coefficient(1)));
    r.predicted = PolyQuotient{IntPolynomial{std::vector<BigInt>{num.coefficient(0) / g, num.coefficient(1) / g}}, den / g};
    if (r.quotient)
        r.divisibility_matches = r.quotient->numerator * r.predicted.denominator ==
                                 r.predicted.numerator * r.quotient->denominator;

    const Flag phi = Flag::shifted_identity(lambda.length(), 0);
    for (int x = 1; x <= 4; ++x) {
        auto counts = count_ssyt_by_entries(lambda, shifted(phi, x), r.ell + 1);
        BigRational ratio(counts[1], counts[0]);
        r.ratio_matches.push_back(ratio == BigRational(BigInt(2L * r.ell * x), BigInt(da)));
    }
    return r;
}

}  // namespace cde
