#include "stokes/polynomial.hpp"

#include <stdexcept>

namespace stokes {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    trim();
}

Polynomial Polynomial::constant(const Rational& c)
{
    return Polynomial(std::vector<Rational>{c});
}

Polynomial Polynomial::monomial(const Rational& c, std::size_t degree)
{
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::linear_root(const Rational& root)
{
    return Polynomial({-root, Rational(1)});
}

void Polynomial::trim()
{
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

bool Polynomial::has_integer_coeffs() const
{
    for (const auto& c : coeffs_) {
        if (!c.is_integer()) {
            return false;
        }
    }
    return true;
}

Rational Polynomial::evaluate(const Rational& x) const
{
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& o)
{
    if (o.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(o.coeffs_.size());
    }
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
        coeffs_[i] += o.coeffs_[i];
    }
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o)
{
    if (o.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(o.coeffs_.size());
    }
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
        coeffs_[i] -= o.coeffs_[i];
    }
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-() const
{
    Polynomial out = *this;
    for (auto& c : out.coeffs_) {
        c = -c;
    }
    return out;
}

Polynomial Polynomial::scaled(const Rational& c) const
{
    std::vector<Rational> out = coeffs_;
    for (auto& v : out) {
        v *= c;
    }
    return Polynomial(std::move(out));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const
{
    if (divisor.is_zero()) {
        throw std::domain_error("Polynomial::divmod: division by zero polynomial");
    }
    std::vector<Rational> rem = coeffs_;
    const int dd = divisor.degree();
    if (degree() < dd) {
        return {Polynomial(), *this};
    }
    std::vector<Rational> quot(static_cast<std::size_t>(degree() - dd + 1));
    const Rational lead_inv = divisor.leading().inverse();
    for (int i = degree(); i >= dd; --i) {
        const Rational c = rem[static_cast<std::size_t>(i)] * lead_inv;
        if (c.is_zero()) {
            continue;
        }
        quot[static_cast<std::size_t>(i - dd)] = c;
        for (int j = 0; j <= dd; ++j) {
            rem[static_cast<std::size_t>(i - dd + j)] -= c * divisor.coeffs_[static_cast<std::size_t>(j)];
        }
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial Polynomial::inflate(std::size_t k) const
{
    if (k == 0) {
        throw std::invalid_argument("Polynomial::inflate: k must be positive");
    }
    if (is_zero()) {
        return {};
    }
    std::vector<Rational> out((coeffs_.size() - 1) * k + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        out[i * k] = coeffs_[i];
    }
    return Polynomial(std::move(out));
}

std::string Polynomial::str(const std::string& var) const
{
    if (is_zero()) {
        return "0";
    }
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = coeffs_[static_cast<std::size_t>(i)];
        if (c.is_zero()) {
            continue;
        }
        const bool negative = c.sign() < 0;
        if (out.empty()) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        const Rational mag = c.abs();
        const bool unit = mag == Rational(1);
        if (!unit || i == 0) {
            out += mag.str();
        }
        if (i > 0) {
            out += unit ? var : "*" + var;
            if (i > 1) {
                out += "^" + std::to_string(i);
            }
        }
    }
    return out;
}

Polynomial pow(const Polynomial& a, unsigned k)
{
    Polynomial result = Polynomial::constant(1);
    Polynomial base = a;
    while (k > 0) {
        if (k & 1U) {
            result = result * base;
        }
        k >>= 1U;
        if (k > 0) {
            base = base * base;
        }
    }
    return result;
}

}  // namespace stokes
