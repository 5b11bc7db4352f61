#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "stokes/sym_expr.hpp"

namespace stokes {

class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class DimensionLimitExceeded : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Polynomial in lambda whose coefficients are SymExpr; coeffs[i] multiplies lambda^i.
class LambdaPoly {
public:
    LambdaPoly() = default;
    explicit LambdaPoly(std::vector<SymExpr> coeffs);
    /// Integer/rational polynomial lifted coefficientwise.
    static LambdaPoly from_polynomial(const Polynomial& p);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<SymExpr>& coeffs() const { return coeffs_; }
    SymExpr coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : SymExpr(); }

    LambdaPoly& operator+=(const LambdaPoly& o);
    /// this * (a - [diagonal] * lambda)
    LambdaPoly times_entry(const SymExpr& a, bool diagonal) const;
    LambdaPoly substitute(const Bindings& b) const;
    LambdaPoly scaled(const Cyclotomic& c) const;

    friend bool operator==(const LambdaPoly& a, const LambdaPoly& b);

    std::string str(const std::string& var = "λ") const;

private:
    void trim();
    std::vector<SymExpr> coeffs_;
};

/// Sparse square matrix of SymExpr; absent entries are zero.
class SymMatrix {
public:
    using Index = std::pair<int, int>;

    explicit SymMatrix(int dim);
    static SymMatrix identity(int dim);
    /// E_{a,b}: maps basis vector b to basis vector a.
    static SymMatrix unit(int dim, int a, int b);

    int dim() const { return dim_; }
    const std::map<Index, SymExpr>& entries() const { return entries_; }
    SymExpr at(int row, int col) const;
    void set(int row, int col, const SymExpr& value);
    void add(int row, int col, const SymExpr& value);

    bool is_constant() const;
    SymMatrix substitute(const Bindings& b) const;
    SymMatrix transposed() const;

    friend SymMatrix operator*(const SymMatrix& a, const SymMatrix& b);
    friend SymMatrix operator+(const SymMatrix& a, const SymMatrix& b);
    SymMatrix scaled(const Cyclotomic& c) const;
    friend bool operator==(const SymMatrix& a, const SymMatrix& b);

    /// Rows rendered one per line, for diagnostics.
    std::string str() const;

private:
    void check(int row, int col) const;
    int dim_;
    std::map<Index, SymExpr> entries_;
};

inline SymMatrix matrix_mul(const SymMatrix& a, const SymMatrix& b) { return a * b; }

struct CharPolyStats {
    std::size_t states = 0;  ///< column subsets visited by the expansion
};

/// det(-lambda * I + A) by row-by-row Laplace expansion memoized over the set of used columns.
/// Division-free, so it is valid for symbolic entries. Throws DimensionLimitExceeded when
/// A.dim() > max_dim (max_dim <= 62).
LambdaPoly char_poly(const SymMatrix& a, int max_dim = 16, CharPolyStats* stats = nullptr);

/// det(A) by the same expansion.
SymExpr determinant(const SymMatrix& a, int max_dim = 16);

}  // namespace stokes
