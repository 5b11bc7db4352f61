#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "stokes/rational.hpp"

namespace stokes::closedform {

/// Stokes constant x_{l,k} of delta^n - z for 0 <= l, k < n, l != k, from the explicit
/// all-pairs formulas. Throws std::invalid_argument on bad indices.
Rational projective_formula(int n, int l, int k);

/// x_{l,k} of the degree-m hypersurface operator when (l, k) lies in one of the index ranges
/// the closed form is stated for (pairs singular in [0, 1)); std::nullopt otherwise.
std::optional<Rational> hypersurface_formula_in_range(int n, int m, int l, int k);

/// x_{l,k} for any pair: the stated-range value transported along the shift orbit, using the
/// wrap sign (-1)^{n-1}(-1)^{m-1} of the formal monodromy when an index passes n-1 -> 0.
Rational hypersurface_formula(int n, int m, int l, int k);

/// Gram matrix of O, O(1), ..., O(n-1) on P^{n-1} and its inverse; both upper unitriangular.
struct GramMatrix {
    int n;
    std::vector<std::vector<Rational>> g;
    std::vector<std::vector<Rational>> a;
};

/// Throws std::logic_error if G * a != I.
GramMatrix gram_and_inverse(int n);

struct DubrovinEntry {
    int l;
    int k;
    Rational x;
    Rational a;
    bool negated;  ///< x == -a (otherwise x == a)
};

struct DubrovinReport {
    int n;
    std::vector<DubrovinEntry> entries;  ///< 0 <= l < k < n
    bool magnitudes_match = true;        ///< |x| == |a| everywhere
    bool relation_holds = true;          ///< odd n: x == -a; even n: x == -a iff k - l <= n/2
    bool passed() const { return magnitudes_match && relation_holds; }
    std::string sign_pattern() const;    ///< one char per entry: '-' for x == -a, '+' for x == a
};

/// Compares the closed-form Stokes constants of P^{n-1} with the inverse Gram matrix.
DubrovinReport dubrovin_check(int n);

/// Same comparison for an arbitrary table x(l, k) (e.g. solver output); relation_holds then
/// records whether the table follows the closed-form sign rule.
DubrovinReport dubrovin_compare(int n, const std::function<Rational(int, int)>& x);

}  // namespace stokes::closedform
