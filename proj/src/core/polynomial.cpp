#include "cde/core/polynomial.hpp"

#include <sstream>

#include "cde/core/errors.hpp"

namespace cde {

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients) : c_(std::move(coefficients)) {
    trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coefficients) {
    for (long v : coefficients) c_.emplace_back(v);
    trim();
}

IntPolynomial IntPolynomial::constant(const BigInt& c) { return IntPolynomial(std::vector<BigInt>{c}); }

IntPolynomial IntPolynomial::monomial(const BigInt& c, std::size_t degree) {
    std::vector<BigInt> v(degree + 1, BigInt(0));
    v[degree] = c;
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::linear(const BigInt& c) { return IntPolynomial(std::vector<BigInt>{c, 1}); }

void IntPolynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigInt IntPolynomial::evaluate(const BigInt& x) const {
    BigInt r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

BigRational IntPolynomial::evaluate(const BigRational& x) const {
    BigRational r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + BigRational(*it);
    return r;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), BigInt(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), BigInt(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator*=(const BigInt& s) {
    for (auto& v : c_) v *= s;
    trim();
    return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> r(a.c_.size() + b.c_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return IntPolynomial(std::move(r));
}

std::string IntPolynomial::str(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
        const BigInt& v = c_[k];
        if (v == 0) continue;
        BigInt mag = abs(v);
        if (first) {
            if (v < 0) os << "-";
        } else {
            os << (v < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0 || mag != 1) os << mag.get_str();
        if (k >= 1) os << var;
        if (k >= 2) os << "^" << k;
    }
    return os.str();
}

std::string IntPolynomial::list_str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) s += ", ";
        s += c_[i].get_str();
    }
    return s + "]";
}

namespace {

BigInt lcm_of_denominators(const std::vector<BigRational>& v) {
    BigInt l = 1;
    for (const auto& r : v) {
        BigInt d = r.denominator();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    return l;
}

}  // namespace

std::optional<PolyQuotient> poly_divides(const IntPolynomial& p, const IntPolynomial& q) {
    if (p.is_zero()) throw DomainError("poly_divides: divisor is the zero polynomial");
    if (q.is_zero()) return PolyQuotient{IntPolynomial{}, BigInt(1)};
    if (q.degree() < p.degree()) return std::nullopt;

    std::vector<BigRational> rem;
    for (const auto& c : q.coefficients()) rem.emplace_back(c);
    const auto& pc = p.coefficients();
    const std::size_t dp = pc.size() - 1;
    const BigRational lead(pc.back());
    std::vector<BigRational> quot(rem.size() - dp, BigRational(0));
    for (std::size_t k = rem.size(); k-- > dp;) {
        BigRational f = rem[k] / lead;
        quot[k - dp] = f;
        if (f.is_zero()) continue;
        for (std::size_t i = 0; i <= dp; ++i) rem[k - dp + i] -= f * BigRational(pc[i]);
    }
    for (std::size_t i = 0; i < dp; ++i)
        if (!rem[i].is_zero()) return std::nullopt;

    BigInt den = lcm_of_denominators(quot);
    std::vector<BigInt> num;
    for (const auto& f : quot) {
        BigRational scaled = f * BigRational(den);
        num.push_back(scaled.numerator());
    }
    return PolyQuotient{IntPolynomial(std::move(num)), den};
}

std::vector<BigRational> interpolate(const std::vector<BigRational>& xs,
                                     const std::vector<BigRational>& ys) {
    if (xs.size() != ys.size()) throw DomainError("interpolate: size mismatch");
    const std::size_t n = xs.size();
    std::vector<BigRational> result(n, BigRational(0));
    for (std::size_t i = 0; i < n; ++i) {
        // Basis polynomial prod_{j != i} (x - x_j) / (x_i - x_j).
        std::vector<BigRational> basis{BigRational(1)};
        BigRational denom = 1;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            if (xs[i] == xs[j]) throw DomainError("interpolate: repeated abscissa");
            std::vector<BigRational> next(basis.size() + 1, BigRational(0));
            for (std::size_t k = 0; k < basis.size(); ++k) {
                next[k + 1] += basis[k];
                next[k] -= basis[k] * xs[j];
            }
            basis = std::move(next);
            denom *= xs[i] - xs[j];
        }
        BigRational scale = ys[i] / denom;
        for (std::size_t k = 0; k < basis.size() && k < n; ++k) result[k] += basis[k] * scale;
    }
    return result;
}

IntPolynomial interpolate_integer(const std::vector<BigRational>& xs,
                                  const std::vector<BigRational>& ys) {
    std::vector<BigInt> c;
    for (const auto& r : interpolate(xs, ys)) {
        if (!r.is_integer()) throw ConsistencyError("interpolated polynomial has a non-integer coefficient");
        c.push_back(r.numerator());
    }
    return IntPolynomial(std::move(c));
}

}  // namespace cde
