#include "stokes/qde.hpp"

#include <algorithm>
#include <map>

#include "stokes/monodromy.hpp"

namespace stokes {

std::string eigen_label(int index)
{
    return index == kZero ? "0" : "q_" + std::to_string(index);
}

EigenvalueSet eigenvalues(const QdeProblem& p)
{
    EigenvalueSet out;
    out.ramification = p.ramification();
    for (int j = 0; j < out.ramification; ++j) {
        out.ramified.push_back(j);
    }
    if (const auto* h = std::get_if<Hypersurface>(&p.family())) {
        out.has_zero = true;
        out.zero_multiplicity = h->m - 1;
        mpz_class mm;
        mpz_ui_pow_ui(mm.get_mpz_t(), static_cast<unsigned long>(h->m), static_cast<unsigned long>(h->m));
        out.constant_power = Rational(mm, mpz_class(1));
    }
    return out;
}

Rational singular_direction(const QdeProblem& p, const EigenPair& pair)
{
    const long ram = p.ramification();
    const Rational half(Rational(1) / Rational(2));
    if (pair.source == pair.target) {
        throw std::invalid_argument("singular_direction: eigenvalues of a pair must differ");
    }
    if (pair.source != kZero && pair.target != kZero) {
        const int k = pair.source;
        const int l = pair.target;
        // q_k - q_l = (zeta^k - zeta^l) z^{1/ram}; arg(zeta^k - zeta^l) = 2 pi phi with
        // phi = 1/4 + (k+l)/(2 ram) for k > l and 3/4 + (k+l)/(2 ram) for l > k.
        const Rational phi = (k > l ? Rational(1) / Rational(4) : Rational(3) / Rational(4)) +
                             Rational(k + l) / Rational(2 * ram);
        return (Rational(ram) * (half - phi)).mod(ram);
    }
    if (pair.target == kZero) {
        return (Rational(ram) * half - Rational(pair.source)).mod(ram);
    }
    return Rational(-pair.target).mod(ram);
}

namespace {

std::vector<EigenPair> all_pairs(const QdeProblem& p)
{
    std::vector<EigenPair> out;
    const int ram = p.ramification();
    for (int k = 0; k < ram; ++k) {
        for (int l = 0; l < ram; ++l) {
            if (k != l) {
                out.push_back({k, l});
            }
        }
    }
    if (p.zero_block() > 0) {
        for (int k = 0; k < ram; ++k) {
            out.push_back({k, kZero});
            out.push_back({kZero, k});
        }
    }
    return out;
}

std::vector<Direction> group(const QdeProblem& p, const Rational& upper)
{
    std::map<Rational, std::vector<EigenPair>> by_value;
    for (const auto& pair : all_pairs(p)) {
        const Rational d = singular_direction(p, pair);
        if (d < upper) {
            by_value[d].push_back(pair);
        }
    }
    std::vector<Direction> out;
    for (auto& [value, pairs] : by_value) {
        std::sort(pairs.begin(), pairs.end());
        out.push_back({value, std::move(pairs)});
    }
    return out;
}

}  // namespace

std::vector<Direction> singular_directions(const QdeProblem& p)
{
    return group(p, Rational(1));
}

std::vector<Direction> all_singular_directions(const QdeProblem& p)
{
    return group(p, Rational(p.ramification()));
}

FormalMonodromy formal_monodromy(const QdeProblem& p)
{
    const int ram = p.ramification();
    int wrap = 1;
    if (p.is_projective()) {
        wrap = (ram - 1) % 2 == 0 ? 1 : -1;
    } else if (const auto* h = std::get_if<Hypersurface>(&p.family())) {
        wrap = ((h->n - 1) + (h->m - 1)) % 2 == 0 ? 1 : -1;
    } else {
        // det(cyclic block) = wrap * (-1)^(ram-1) must equal det(mon_0) = +-1.
        const RootOfUnity det0 = monodromy_determinant(p);
        if (det0.order() > 2) {
            throw std::logic_error("formal_monodromy: det(mon_0) is not real for " + p.describe());
        }
        const int det_sign = det0.order() == 1 ? 1 : -1;
        wrap = det_sign * ((ram - 1) % 2 == 0 ? 1 : -1);
    }

    SymMatrix g(p.dimension());
    for (int j = 0; j + 1 < ram; ++j) {
        g.set(j + 1, j, SymExpr(1));
    }
    g.add(0, ram - 1, SymExpr(wrap));
    for (int j = 1; j <= p.zero_block(); ++j) {
        g.set(f_index(p, j), f_index(p, j), SymExpr(Cyclotomic::zeta(p.base_order(), j)));
    }
    return {std::move(g), wrap};
}

SymMatrix FormalMonodromy::inverse() const
{
    SymMatrix out(matrix.dim());
    for (const auto& [idx, e] : matrix.entries()) {
        if (!e.is_constant()) {
            throw std::logic_error("FormalMonodromy::inverse: symbolic entry");
        }
        out.set(idx.second, idx.first, SymExpr(e.constant_term().inverse()));
    }
    if (!(out * matrix == SymMatrix::identity(matrix.dim()))) {
        throw std::logic_error("FormalMonodromy::inverse: matrix is not monomial");
    }
    return out;
}

SymMatrix stokes_support(const QdeProblem& p, const Rational& d)
{
    const Rational value = d.mod(p.ramification());
    for (const auto& dir : all_singular_directions(p)) {
        if (dir.value == value) {
            return stokes_support(p, dir);
        }
    }
    throw NotSingular("stokes_support: " + d.str() + " is not a singular direction of " + p.describe());
}

SymMatrix stokes_support(const QdeProblem& p, const Direction& d)
{
    if (d.pairs.empty()) {
        throw NotSingular("stokes_support: direction " + d.value.str() + " carries no pairs");
    }
    for (const auto& pair : d.pairs) {
        if (singular_direction(p, pair) != d.value.mod(p.ramification())) {
            throw NotSingular("stokes_support: pair (" + eigen_label(pair.source) + "," +
                              eigen_label(pair.target) + ") is not singular at " + d.value.str());
        }
    }
    SymMatrix st = SymMatrix::identity(p.dimension());
    for (const auto& pair : d.pairs) {
        if (pair.source != kZero && pair.target != kZero) {
            st.set(pair.target, pair.source, SymExpr(Unknown::x(pair.target, pair.source)));
        } else if (pair.target == kZero) {
            for (int j = 1; j <= p.zero_block(); ++j) {
                st.set(f_index(p, j), pair.source, SymExpr(Unknown::y(j)));
            }
        } else {
            for (int j = 1; j <= p.zero_block(); ++j) {
                st.set(pair.target, f_index(p, j), SymExpr(Unknown::z(j)));
            }
        }
    }
    return st;
}

}  // namespace stokes
