#pragma once

#include <compare>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "stokes/cyclotomic.hpp"

namespace stokes {

/// A Stokes unknown: x_{l,k} (entry l <- k between ramified eigenvalues), y_j (map into f_j),
/// z_j (map out of f_j).
struct Unknown {
    enum class Kind { X, Y, Z };
    Kind kind = Kind::X;
    int first = 0;
    int second = 0;

    static Unknown x(int l, int k) { return {Kind::X, l, k}; }
    static Unknown y(int j) { return {Kind::Y, j, 0}; }
    static Unknown z(int j) { return {Kind::Z, j, 0}; }

    std::string str() const;
    friend auto operator<=>(const Unknown&, const Unknown&) = default;
};

/// Sorted multiset of unknowns; the empty monomial is 1.
using Monomial = std::vector<Unknown>;

using Bindings = std::map<Unknown, Cyclotomic>;

/// Sparse multivariate polynomial with Cyclotomic coefficients. Zero coefficients are never stored.
class SymExpr {
public:
    SymExpr() = default;
    SymExpr(const Cyclotomic& c);  // NOLINT(google-explicit-constructor)
    SymExpr(int c) : SymExpr(Cyclotomic(c)) {}  // NOLINT(google-explicit-constructor)
    SymExpr(const Unknown& u);  // NOLINT(google-explicit-constructor)

    const std::map<Monomial, Cyclotomic>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Coefficient of the empty monomial.
    Cyclotomic constant_term() const;
    Cyclotomic coefficient(const Monomial& m) const;
    /// Total degree; -1 for zero.
    int degree() const;
    std::set<Unknown> unknowns() const;
    /// Expression with the constant term removed.
    SymExpr without_constant() const;

    SymExpr& operator+=(const SymExpr& o);
    SymExpr& operator-=(const SymExpr& o);
    SymExpr& operator*=(const Cyclotomic& c);
    friend SymExpr operator+(SymExpr a, const SymExpr& b) { return a += b; }
    friend SymExpr operator-(SymExpr a, const SymExpr& b) { return a -= b; }
    friend SymExpr operator*(const SymExpr& a, const SymExpr& b);
    friend SymExpr operator*(SymExpr a, const Cyclotomic& c) { return a *= c; }
    SymExpr operator-() const;

    friend bool operator==(const SymExpr& a, const SymExpr& b);

    SymExpr substitute(const Bindings& bindings) const;

    std::string str() const;

private:
    void add_term(const Monomial& m, const Cyclotomic& c);
    std::map<Monomial, Cyclotomic> terms_;
};

std::ostream& operator<<(std::ostream& os, const SymExpr& e);

inline SymExpr sym_add(const SymExpr& a, const SymExpr& b) { return a + b; }
inline SymExpr sym_mul(const SymExpr& a, const SymExpr& b) { return a * b; }
inline SymExpr sym_scale(const SymExpr& a, const Cyclotomic& c) { return a * c; }
inline SymExpr substitute(const SymExpr& e, const Bindings& b) { return e.substitute(b); }

}  // namespace stokes
