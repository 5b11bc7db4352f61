#include "stokes/monodromy.hpp"

#include <algorithm>
#include <stdexcept>

namespace stokes {

Polynomial indicial_polynomial(const QdeProblem& p)
{
    if (const auto* w = std::get_if<Weighted>(&p.family())) {
        Polynomial acc = Polynomial::constant(1);
        for (int wj : w->weights) {
            for (int i = 0; i < wj; ++i) {
                acc = acc * Polynomial::linear_root(Rational(i) / Rational(wj));
            }
        }
        return acc;
    }
    // delta^n - z and delta^{n+m-1} - m^m z (...): the z^0 part is a pure power of delta.
    return Polynomial::monomial(1, static_cast<std::size_t>(p.dimension()));
}

ExponentList indicial_exponents(const QdeProblem& p)
{
    ExponentList out;
    if (const auto* w = std::get_if<Weighted>(&p.family())) {
        for (int wj : w->weights) {
            for (int i = 0; i < wj; ++i) {
                out.exponents.push_back(Rational(i) / Rational(wj));
            }
        }
    } else {
        out.exponents.assign(static_cast<std::size_t>(p.dimension()), Rational(0));
    }
    std::sort(out.exponents.begin(), out.exponents.end());

    Polynomial check = Polynomial::constant(1);
    for (const auto& rho : out.exponents) {
        if (rho < Rational(0) || rho >= Rational(1)) {
            throw std::logic_error("indicial_exponents: exponent " + rho.str() + " outside [0,1)");
        }
        check = check * Polynomial::linear_root(rho);
    }
    if (!(check == indicial_polynomial(p)) ||
        static_cast<int>(out.exponents.size()) != p.dimension()) {
        throw std::logic_error("indicial_exponents: exponents do not match the indicial polynomial of " +
                               p.describe());
    }
    return out;
}

Polynomial monodromy_char_poly(const QdeProblem& p)
{
    std::vector<RootOfUnity> roots;
    for (const auto& rho : indicial_exponents(p).exponents) {
        roots.push_back(RootOfUnity::from_turns(rho));
    }
    return root_of_unity_char_poly(roots);
}

RootOfUnity monodromy_determinant(const QdeProblem& p)
{
    Rational sum;
    for (const auto& rho : indicial_exponents(p).exponents) {
        sum += rho;
    }
    return RootOfUnity::from_turns(sum.mod(1));
}

}  // namespace stokes
