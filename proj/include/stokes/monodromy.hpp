#pragma once

#include <vector>

#include "stokes/cyclotomic.hpp"
#include "stokes/polynomial.hpp"
#include "stokes/problem.hpp"

namespace stokes {

/// Local exponents at the regular singular point z = 0, each in [0, 1).
struct ExponentList {
    std::vector<Rational> exponents;
};

/// The z^0 part of the operator as a polynomial in delta.
Polynomial indicial_polynomial(const QdeProblem& p);

/// Exponents read off the factored operator, then checked: prod (x - rho) must equal the
/// indicial polynomial. Throws std::logic_error when the check fails.
ExponentList indicial_exponents(const QdeProblem& p);

/// prod over exponents of (lambda - exp(2 pi i rho)); monic, integer coefficients.
Polynomial monodromy_char_poly(const QdeProblem& p);

/// det(mon_0) = exp(2 pi i * sum of exponents).
RootOfUnity monodromy_determinant(const QdeProblem& p);

}  // namespace stokes
