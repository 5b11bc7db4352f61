#pragma once

#include <string>
#include <utility>
#include <vector>

#include "stokes/rational.hpp"

namespace stokes {

/// Dense univariate polynomial over Q; coeffs[i] multiplies x^i. No trailing zeros are stored,
/// so the zero polynomial has an empty coefficient vector.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);

    static Polynomial constant(const Rational& c);
    static Polynomial monomial(const Rational& c, std::size_t degree);
    /// x - root
    static Polynomial linear_root(const Rational& root);

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
    Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }
    bool has_integer_coeffs() const;

    Rational evaluate(const Rational& x) const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial operator-() const;
    Polynomial scaled(const Rational& c) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

    /// Euclidean division; throws std::domain_error when the divisor is zero.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;
    Polynomial operator%(const Polynomial& divisor) const { return divmod(divisor).second; }

    /// Substitutes x -> x^k.
    Polynomial inflate(std::size_t k) const;

    /// Human-readable rendering in the given variable, highest power first.
    std::string str(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// (a^k) computed by repeated squaring.
Polynomial pow(const Polynomial& a, unsigned k);

}  // namespace stokes
