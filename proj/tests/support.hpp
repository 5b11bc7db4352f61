#pragma once

#include <random>
#include <vector>

#include "stokes/cyclotomic.hpp"
#include "stokes/rational.hpp"

namespace testing {

using stokes::Cyclotomic;
using stokes::Rational;

inline std::mt19937& rng()
{
    static std::mt19937 gen(20240611u);
    return gen;
}

inline Rational random_rational(int bound = 9)
{
    std::uniform_int_distribution<int> num(-bound, bound);
    std::uniform_int_distribution<int> den(1, bound);
    return Rational(num(rng())) / Rational(den(rng()));
}

inline Rational random_nonzero_rational(int bound = 9)
{
    Rational r;
    while (r.is_zero()) {
        r = random_rational(bound);
    }
    return r;
}

inline Cyclotomic random_cyclotomic(long order, int bound = 6)
{
    std::vector<Rational> c(static_cast<std::size_t>(stokes::euler_phi(order)));
    for (auto& v : c) {
        v = random_rational(bound);
    }
    return Cyclotomic(order, c);
}

// Fraction-free Gaussian elimination; exact determinant of a rational matrix.
inline Rational bareiss_det(std::vector<std::vector<Rational>> a)
{
    const std::size_t n = a.size();
    Rational sign(1);
    Rational prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            std::size_t r = k + 1;
            while (r < n && a[r][k].is_zero()) {
                ++r;
            }
            if (r == n) {
                return Rational(0);
            }
            std::swap(a[k], a[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

}  // namespace testing
