#include "stokes/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>

namespace stokes {

long euler_phi(long m)
{
    if (m < 1) {
        throw std::invalid_argument("euler_phi: m must be positive");
    }
    long result = m;
    long x = m;
    for (long p = 2; p * p <= x; ++p) {
        if (x % p == 0) {
            while (x % p == 0) {
                x /= p;
            }
            result -= result / p;
        }
    }
    if (x > 1) {
        result -= result / x;
    }
    return result;
}

long lcm(long a, long b)
{
    return std::lcm(a, b);
}

namespace {

Polynomial compute_cyclotomic(long m);

// Phi_m is requested on every field operation; memoize behind a mutex.
const Polynomial& modulus(long m)
{
    static std::mutex mutex;
    static std::map<long, std::unique_ptr<const Polynomial>> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(m); it != cache.end()) {
            return *it->second;
        }
    }
    auto computed = std::make_unique<const Polynomial>(compute_cyclotomic(m));
    std::lock_guard lock(mutex);
    auto [it, inserted] = cache.emplace(m, std::move(computed));
    return *it->second;
}

Polynomial compute_cyclotomic(long m)
{
    Polynomial acc = Polynomial::monomial(1, static_cast<std::size_t>(m)) - Polynomial::constant(1);
    for (long d = 1; d < m; ++d) {
        if (m % d != 0) {
            continue;
        }
        auto [q, r] = acc.divmod(modulus(d));
        if (!r.is_zero()) {
            throw std::logic_error("cyclotomic_polynomial: inexact division");
        }
        acc = std::move(q);
    }
    return acc;
}

std::vector<Rational> padded(const Polynomial& p, long width)
{
    std::vector<Rational> out(static_cast<std::size_t>(width));
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        out[i] = p.coeffs()[i];
    }
    return out;
}

}  // namespace

Polynomial cyclotomic_polynomial(long m)
{
    if (m < 1) {
        throw std::invalid_argument("cyclotomic_polynomial: m must be positive");
    }
    return modulus(m);
}

Cyclotomic::Cyclotomic(const Rational& r) : order_(1), coeffs_{r} {}

Cyclotomic::Cyclotomic(long order, std::vector<Rational> coeffs) : order_(order)
{
    if (order < 1) {
        throw std::invalid_argument("Cyclotomic: order must be positive");
    }
    *this = from_polynomial(order, Polynomial(std::move(coeffs)));
}

Cyclotomic Cyclotomic::from_polynomial(long order, const Polynomial& p)
{
    if (order < 1) {
        throw std::invalid_argument("Cyclotomic: order must be positive");
    }
    Cyclotomic out;
    out.order_ = order;
    out.coeffs_ = padded(p % modulus(order), euler_phi(order));
    return out;
}

Cyclotomic Cyclotomic::zeta(long order, long k)
{
    if (order < 1) {
        throw std::invalid_argument("Cyclotomic::zeta: order must be positive");
    }
    long e = k % order;
    if (e < 0) {
        e += order;
    }
    return from_polynomial(order, Polynomial::monomial(1, static_cast<std::size_t>(e)));
}

bool Cyclotomic::is_zero() const
{
    for (const auto& c : coeffs_) {
        if (!c.is_zero()) {
            return false;
        }
    }
    return true;
}

bool Cyclotomic::is_rational() const
{
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        if (!coeffs_[i].is_zero()) {
            return false;
        }
    }
    return true;
}

Cyclotomic Cyclotomic::demoted() const
{
    if (order_ != 1 && is_rational()) {
        return Cyclotomic(coeffs_.front());
    }
    return *this;
}

Cyclotomic Cyclotomic::embed(long L) const
{
    if (L < 1 || L % order_ != 0) {
        throw OrderMismatch("Cyclotomic::embed: order " + std::to_string(order_) + " does not divide " +
                            std::to_string(L));
    }
    if (L == order_) {
        return *this;
    }
    return from_polynomial(L, as_polynomial().inflate(static_cast<std::size_t>(L / order_)));
}

Cyclotomic Cyclotomic::inverse() const
{
    if (is_zero()) {
        throw std::domain_error("Cyclotomic: division by zero");
    }
    // Extended Euclid on (Phi_m, a): track s with s * a == r (mod Phi_m).
    Polynomial r0 = modulus(order_);
    Polynomial r1 = as_polynomial();
    Polynomial s0;
    Polynomial s1 = Polynomial::constant(1);
    while (r1.degree() > 0) {
        auto [q, r] = r0.divmod(r1);
        Polynomial s = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r1.is_zero()) {
        throw std::logic_error("Cyclotomic::inverse: non-unit (modulus not irreducible?)");
    }
    return from_polynomial(order_, s1.scaled(r1.leading().inverse()));
}

Cyclotomic Cyclotomic::conjugate() const
{
    // zeta^i -> zeta^(m - i)
    std::vector<Rational> out(static_cast<std::size_t>(order_));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        out[(static_cast<long>(order_) - static_cast<long>(i)) % order_] += coeffs_[i];
    }
    return from_polynomial(order_, Polynomial(std::move(out)));
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o)
{
    if (o.order_ != order_) {
        const long L = lcm(order_, o.order_);
        *this = embed(L);
        return *this += o.embed(L);
    }
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] += o.coeffs_[i];
    }
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o)
{
    return *this += -o;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o)
{
    if (o.order_ != order_) {
        const long L = lcm(order_, o.order_);
        *this = embed(L);
        return *this *= o.embed(L);
    }
    if (order_ == 1) {
        coeffs_.front() *= o.coeffs_.front();
        return *this;
    }
    *this = from_polynomial(order_, as_polynomial() * o.as_polynomial());
    return *this;
}

Cyclotomic Cyclotomic::operator-() const
{
    Cyclotomic out = *this;
    for (auto& c : out.coeffs_) {
        c = -c;
    }
    return out;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b)
{
    if (a.order_ == b.order_) {
        return a.coeffs_ == b.coeffs_;
    }
    const long L = lcm(a.order_, b.order_);
    return a.embed(L).coeffs_ == b.embed(L).coeffs_;
}

std::string Cyclotomic::str(const std::string& symbol) const
{
    std::string out;
    for (int i = static_cast<int>(coeffs_.size()) - 1; i >= 0; --i) {
        const Rational& c = coeffs_[static_cast<std::size_t>(i)];
        if (c.is_zero()) {
            continue;
        }
        const bool negative = c.sign() < 0;
        if (out.empty()) {
            out += negative ? "-" : "";
        } else {
            out += negative ? "-" : "+";
        }
        const Rational mag = c.abs();
        if (mag != Rational(1) || i == 0) {
            out += mag.str();
        }
        if (i > 0) {
            out += symbol;
            if (i > 1) {
                out += "^" + std::to_string(i);
            }
        }
    }
    return out.empty() ? "0" : out;
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c)
{
    return os << c.str();
}

Cyclotomic cyclo_mul(const Cyclotomic& a, const Cyclotomic& b)
{
    if (a.order() != b.order()) {
        throw OrderMismatch("cyclo_mul: orders " + std::to_string(a.order()) + " and " +
                            std::to_string(b.order()) + " differ");
    }
    return a * b;
}

Cyclotomic cyclo_add(const Cyclotomic& a, const Cyclotomic& b)
{
    if (a.order() != b.order()) {
        throw OrderMismatch("cyclo_add: orders " + std::to_string(a.order()) + " and " +
                            std::to_string(b.order()) + " differ");
    }
    return a + b;
}

Cyclotomic cyclo_embed(const Cyclotomic& a, long L)
{
    return a.embed(L);
}

RootOfUnity::RootOfUnity(long order, long exponent)
{
    if (order < 1) {
        throw std::invalid_argument("RootOfUnity: order must be positive");
    }
    long e = exponent % order;
    if (e < 0) {
        e += order;
    }
    const long g = std::gcd(e, order);
    order_ = order / g;
    exponent_ = e / g;
}

RootOfUnity RootOfUnity::from_turns(const Rational& r)
{
    return RootOfUnity(r.denominator().get_si(), r.numerator().get_si());
}

Polynomial root_of_unity_char_poly(const std::vector<RootOfUnity>& roots)
{
    long L = 1;
    for (const auto& r : roots) {
        L = lcm(L, r.order());
    }
    // Coefficients of prod (lambda - root) in Q(zeta_L), lowest power first.
    std::vector<Cyclotomic> acc{Cyclotomic(Rational(1)).embed(L)};
    for (const auto& r : roots) {
        const Cyclotomic root = Cyclotomic::zeta(L, r.exponent() * (L / r.order()));
        std::vector<Cyclotomic> next(acc.size() + 1, Cyclotomic(Rational(0)).embed(L));
        for (std::size_t i = 0; i < acc.size(); ++i) {
            next[i + 1] += acc[i];
            next[i] -= acc[i] * root;
        }
        acc = std::move(next);
    }
    std::vector<Rational> out;
    out.reserve(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) {
        if (!acc[i].is_rational() || !acc[i].rational_part().is_integer()) {
            throw std::domain_error("root_of_unity_char_poly: coefficient of lambda^" + std::to_string(i) +
                                    " is " + acc[i].str() + ", not an integer");
        }
        out.push_back(acc[i].rational_part());
    }
    return Polynomial(std::move(out));
}

}  // namespace stokes
