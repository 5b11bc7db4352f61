#pragma once

#include <string>
#include <vector>

#include "stokes/problem.hpp"
#include "stokes/rational.hpp"
#include "stokes/sym_matrix.hpp"

namespace stokes {

/// Index of a generalized eigenvalue: 0..ram-1 for q_j = c zeta^j z^{1/ram}, or kZero.
inline constexpr int kZero = -1;

std::string eigen_label(int index);

/// Ordered pair (q_source, q_target): the Stokes map at its singular direction sends
/// V_source into V_target.
struct EigenPair {
    int source;
    int target;
    friend auto operator<=>(const EigenPair&, const EigenPair&) = default;
};

struct EigenvalueSet {
    int ramification = 0;
    std::vector<int> ramified;  ///< 0..ram-1
    bool has_zero = false;
    int zero_multiplicity = 0;
    /// c^ram for the positive real constant c in q_j = c zeta^j z^{1/ram}. Only its
    /// positivity matters for directions; the value is kept for display.
    Rational constant_power{1};
};

struct Direction {
    Rational value;  ///< reduced modulo the ramification
    std::vector<EigenPair> pairs;
};

struct FormalMonodromy {
    SymMatrix matrix;
    int wrap_sign;

    /// gamma is monomial (one nonzero per row and column), so its inverse is exact and cheap.
    SymMatrix inverse() const;
};

class NotSingular : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

EigenvalueSet eigenvalues(const QdeProblem& p);

/// The unique singular direction of (q_source, q_target), reduced into [0, ram).
Rational singular_direction(const QdeProblem& p, const EigenPair& pair);

/// Singular directions with representative in [0, 1), ascending, pairs grouped by direction.
std::vector<Direction> singular_directions(const QdeProblem& p);
/// All singular directions in [0, ram), ascending.
std::vector<Direction> all_singular_directions(const QdeProblem& p);

FormalMonodromy formal_monodromy(const QdeProblem& p);

/// Identity plus the unknown entries of St_d: x_{l,k} at (l,k) for q_k -> q_l, y_j at (f_j, e_k)
/// for q_k -> 0, z_j at (e_l, f_j) for 0 -> q_l. Basis order is e_0..e_{ram-1}, f_1..f_{m-1}.
/// Throws NotSingular when d is not a singular direction of p.
SymMatrix stokes_support(const QdeProblem& p, const Rational& d);
SymMatrix stokes_support(const QdeProblem& p, const Direction& d);

/// Row/column index of f_j.
inline int f_index(const QdeProblem& p, int j) { return p.ramification() + j - 1; }

}  // namespace stokes
