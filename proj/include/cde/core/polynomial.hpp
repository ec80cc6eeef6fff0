#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "cde/core/rational.hpp"

namespace cde {

// Dense univariate polynomial with integer coefficients; coefficient i
// multiplies x^i. Trailing zeros are stripped, so zero is the empty list.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coefficients);
    IntPolynomial(std::initializer_list<long> coefficients);

    static IntPolynomial constant(const BigInt& c);
    static IntPolynomial monomial(const BigInt& c, std::size_t degree);
    // x + c
    static IntPolynomial linear(const BigInt& c);

    const std::vector<BigInt>& coefficients() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    // -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    BigInt coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }
    BigInt leading() const { return c_.empty() ? BigInt(0) : c_.back(); }

    BigInt evaluate(const BigInt& x) const;
    BigRational evaluate(const BigRational& x) const;

    IntPolynomial& operator+=(const IntPolynomial& o);
    IntPolynomial& operator-=(const IntPolynomial& o);
    IntPolynomial& operator*=(const BigInt& s);
    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(IntPolynomial a, const BigInt& s) { return a *= s; }
    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.c_ == b.c_; }

    // Human form such as "2x^3 + 9x^2 + 13x + 6".
    std::string str(const std::string& var = "x") const;
    // Coefficient list, low to high: "[6, 13, 9, 2]".
    std::string list_str() const;

private:
    void trim();
    std::vector<BigInt> c_;
};

// Quotient q/p over Q written as numerator / denominator with a positive,
// minimal denominator.
struct PolyQuotient {
    IntPolynomial numerator;
    BigInt denominator;
};

// Returns q/p when p divides q in Q[x], nothing otherwise. DomainError if p = 0.
std::optional<PolyQuotient> poly_divides(const IntPolynomial& p, const IntPolynomial& q);

// Coefficients (low to high) of the unique polynomial of degree < xs.size()
// through the given points. Abscissae must be distinct.
std::vector<BigRational> interpolate(const std::vector<BigRational>& xs,
                                     const std::vector<BigRational>& ys);

// Interpolates and requires every coefficient to be an integer.
IntPolynomial interpolate_integer(const std::vector<BigRational>& xs,
                                  const std::vector<BigRational>& ys);

}  // namespace cde
