#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "stokes/polynomial.hpp"
#include "stokes/rational.hpp"

namespace stokes {

class OrderMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

long euler_phi(long m);
long lcm(long a, long b);

/// The m-th cyclotomic polynomial, obtained by exact division of x^m - 1 by the
/// cyclotomic polynomials of the proper divisors of m.
Polynomial cyclotomic_polynomial(long m);

/**
 * Element of Q(zeta_m), zeta_m = exp(2 pi i / m), stored in the power basis
 * 1, zeta, ..., zeta^(phi(m)-1) modulo Phi_m. The representation is canonical, so equal
 * field elements of the same order have equal coefficient vectors.
 *
 * Arithmetic operators accept operands of different orders and embed both into Q(zeta_lcm).
 * The free functions cyclo_mul / cyclo_add are the strict variants.
 */
class Cyclotomic {
public:
    Cyclotomic() : Cyclotomic(Rational(0)) {}
    Cyclotomic(const Rational& r);  // NOLINT(google-explicit-constructor)
    Cyclotomic(int r) : Cyclotomic(Rational(r)) {}  // NOLINT(google-explicit-constructor)
    Cyclotomic(long order, std::vector<Rational> coeffs);

    /// zeta_m^k for any integer k.
    static Cyclotomic zeta(long order, long k = 1);
    /// Reduces an arbitrary polynomial in zeta_m.
    static Cyclotomic from_polynomial(long order, const Polynomial& p);

    long order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Polynomial as_polynomial() const { return Polynomial(coeffs_); }

    bool is_zero() const;
    bool is_rational() const;
    /// Constant coefficient; meaningful as the value only when is_rational().
    const Rational& rational_part() const { return coeffs_.front(); }

    /// Same element in Q(zeta_1) when rational, otherwise unchanged.
    Cyclotomic demoted() const;
    /// Same element in Q(zeta_L); requires order() | L.
    Cyclotomic embed(long L) const;

    Cyclotomic inverse() const;
    /// Complex conjugation zeta -> zeta^-1.
    Cyclotomic conjugate() const;

    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Cyclotomic& o);
    Cyclotomic& operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }
    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
    friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
    Cyclotomic operator-() const;

    /// Field equality; operands of different order are compared in Q(zeta_lcm).
    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

    /// Rendering such as "-9ζ+18" (highest power first).
    std::string str(const std::string& symbol = "ζ") const;

private:
    long order_ = 1;
    std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c);

/// Strict product: throws OrderMismatch unless a.order() == b.order().
Cyclotomic cyclo_mul(const Cyclotomic& a, const Cyclotomic& b);
Cyclotomic cyclo_add(const Cyclotomic& a, const Cyclotomic& b);
/// Strict embedding: throws OrderMismatch unless a.order() divides L.
Cyclotomic cyclo_embed(const Cyclotomic& a, long L);

/// exp(2 pi i exponent / order), normalized to the minimal order.
class RootOfUnity {
public:
    RootOfUnity(long order, long exponent);
    /// exp(2 pi i r) for a rational r.
    static RootOfUnity from_turns(const Rational& r);

    long order() const { return order_; }
    long exponent() const { return exponent_; }
    Cyclotomic value() const { return Cyclotomic::zeta(order_, exponent_); }
    Rational turns() const { return Rational(exponent_) / Rational(order_); }

    friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;

private:
    long order_;
    long exponent_;
};

/// prod (lambda - root) computed in Q(zeta_L), L the lcm of the orders.
/// Throws std::domain_error if a coefficient is not a rational integer.
Polynomial root_of_unity_char_poly(const std::vector<RootOfUnity>& roots);

}  // namespace stokes
