#include "cde/core/rational.hpp"

#include <ostream>

#include "cde/core/errors.hpp"

namespace cde {

BigInt factorial(unsigned n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

std::string to_string(const BigInt& v) { return v.get_str(); }

BigRational::BigRational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

BigRational BigRational::parse(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return BigRational(BigInt(text));
        return BigRational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw ParseError("not a rational: '" + text + "'");
    }
}

std::string BigRational::str() const { return q_.get_str(); }

BigRational& BigRational::operator/=(const BigRational& o) {
    if (o.is_zero()) throw DomainError("division by zero");
    q_ /= o.q_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const BigRational& r) { return os << r.str(); }

}  // namespace cde
