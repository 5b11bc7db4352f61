#include "stokes/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace stokes {

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator)
{
    if (denominator == 0) {
        throw std::domain_error("Rational: zero denominator");
    }
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational Rational::parse(const std::string& text)
{
    const auto slash = text.find('/');
    mpz_class num;
    mpz_class den = 1;
    try {
        if (slash == std::string::npos) {
            num = mpz_class(text, 10);
        } else {
            num = mpz_class(text.substr(0, slash), 10);
            den = mpz_class(text.substr(slash + 1), 10);
        }
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("Rational::parse: malformed '" + text + "'");
    }
    if (den == 0) {
        throw std::invalid_argument("Rational::parse: zero denominator in '" + text + "'");
    }
    return Rational(num, den);
}

Rational Rational::inverse() const
{
    if (is_zero()) {
        throw std::domain_error("Rational: division by zero");
    }
    mpq_class inv = 1 / value_;
    return Rational(inv);
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero()) {
        throw std::domain_error("Rational: division by zero");
    }
    value_ /= o.value_;
    return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b)
{
    const int c = cmp(a.value_, b.value_);
    if (c < 0) {
        return std::strong_ordering::less;
    }
    if (c > 0) {
        return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::string Rational::str() const
{
    if (is_integer()) {
        return value_.get_num().get_str();
    }
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

mpz_class Rational::floor() const
{
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return q;
}

Rational Rational::mod(long modulus) const
{
    if (modulus <= 0) {
        throw std::invalid_argument("Rational::mod: modulus must be positive");
    }
    const Rational m(modulus);
    const Rational q = Rational(mpz_class(Rational(*this / m).floor()), mpz_class(1));
    return *this - q * m;
}

std::ostream& operator<<(std::ostream& os, const Rational& r)
{
    return os << r.str();
}

Rational binomial(long n, long k)
{
    if (n < 0 || k < 0 || k > n) {
        return Rational(0);
    }
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(out, mpz_class(1));
}

}  // namespace stokes
