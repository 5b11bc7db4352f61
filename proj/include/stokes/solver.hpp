#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "stokes/monodromy.hpp"
#include "stokes/qde.hpp"
#include "stokes/sym_matrix.hpp"

namespace stokes {

/// lhs(unknowns) == rhs, from matching the coefficient of lambda^power.
struct Equation {
    int power;
    SymExpr lhs;
    Cyclotomic rhs;

    SymExpr residual() const { return lhs - SymExpr(rhs); }
    std::string str() const;
};

struct StokesFactor {
    Direction direction;
    SymMatrix matrix;
};

/// The monodromy identity for one problem, before solving.
struct StokesSystem {
    QdeProblem problem;
    FormalMonodromy gamma;
    std::vector<StokesFactor> factors;  ///< ascending direction in [0, 1)
    SymMatrix product;                  ///< gamma * St_{d_max} * ... * St_{d_min}
    LambdaPoly charpoly;                ///< det(-lambda I + product)
    Polynomial monodromy_poly;          ///< monic char poly of mon_0
    int sign;                           ///< (-1)^N, so that charpoly must equal sign * monodromy_poly
    std::vector<Equation> equations;    ///< one per power 0..N
    CharPolyStats stats;

    Polynomial target() const { return monodromy_poly.scaled(Rational(sign)); }
    std::vector<Unknown> unknowns() const;
};

using PairTable = std::map<std::pair<int, int>, Cyclotomic>;

/// Values imposed on y_1..y_{m-1} to fix the scaling freedom of f_1..f_{m-1}.
struct Gauge {
    std::map<int, Cyclotomic> y;
};

struct StokesData {
    PairTable x;        ///< all (l, k), 0 <= l, k < ram, l != k
    PairTable x_base;   ///< pairs singular in [0, 1), as solved
    std::map<int, Cyclotomic> yz;  ///< y_j z_j, gauge independent
    Bindings solution;  ///< every unknown of the system, gauge values included
    Gauge gauge;
};

class StuckSystem : public std::runtime_error {
public:
    StuckSystem(const std::string& what, std::vector<Equation> remaining)
        : std::runtime_error(what), remaining_(std::move(remaining))
    {
    }
    const std::vector<Equation>& remaining() const { return remaining_; }

private:
    std::vector<Equation> remaining_;
};

class InconsistentSystem : public std::runtime_error {
public:
    InconsistentSystem(const std::string& what, Equation violated)
        : std::runtime_error(what), violated_(std::move(violated))
    {
    }
    const Equation& violated() const { return violated_; }

private:
    Equation violated_;
};

class ConflictingAssignment : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

StokesSystem build_system(const QdeProblem& p, int max_dim = 16);

/// Gauge y_j := 1 for every j.
Gauge default_gauge(const QdeProblem& p);

/// Triangular substitution, with Gaussian elimination over Q(zeta) whenever the
/// remaining equations are linear. Throws StuckSystem or InconsistentSystem.
StokesData solve(const StokesSystem& system, const Gauge& gauge);
StokesData solve(const StokesSystem& system);

/// Completes the x-table by literal conjugation St_{d+s} = gamma^{-s} St_d gamma^{s}.
/// Throws std::invalid_argument when base misses a pair singular in [0, 1), and
/// ConflictingAssignment when two conjugates disagree on a pair.
PairTable extend_all(const PairTable& base, const QdeProblem& p);

/// Rational coordinates of each coefficient along the power basis of Q(zeta_m): the equation
/// e == 0 split into phi(m) equations with rational coefficients. Used for diagnostics.
std::vector<SymExpr> split_rational(const SymExpr& e, long order);

struct VerificationReport {
    struct Check {
        std::string name;
        bool passed;
        std::string detail;
    };
    std::vector<Check> checks;

    bool passed() const;
};

VerificationReport verify(const StokesData& data, const StokesSystem& system);
VerificationReport verify(const StokesData& data, const QdeProblem& p);

}  // namespace stokes
