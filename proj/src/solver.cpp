#include "stokes/solver.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "stokes/closedform.hpp"

namespace stokes {

std::string Equation::str() const
{
    return lhs.str() + " = " + rhs.str() + "   [λ^" + std::to_string(power) + "]";
}

std::vector<Unknown> StokesSystem::unknowns() const
{
    std::set<Unknown> all;
    for (const auto& f : factors) {
        for (const auto& [idx, e] : f.matrix.entries()) {
            auto u = e.unknowns();
            all.insert(u.begin(), u.end());
        }
    }
    return {all.begin(), all.end()};
}

StokesSystem build_system(const QdeProblem& p, int max_dim)
{
    if (p.dimension() > max_dim) {
        throw DimensionLimitExceeded("build_system: dimension " + std::to_string(p.dimension()) +
                                     " of " + p.describe() + " exceeds the limit " + std::to_string(max_dim));
    }
    FormalMonodromy gamma = formal_monodromy(p);
    std::vector<StokesFactor> factors;
    for (auto& d : singular_directions(p)) {
        SymMatrix st = stokes_support(p, d);
        factors.push_back({std::move(d), std::move(st)});
    }
    SymMatrix product = gamma.matrix;
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
        product = product * it->matrix;
    }
    CharPolyStats stats;
    LambdaPoly cp = char_poly(product, max_dim, &stats);
    Polynomial target = monodromy_char_poly(p);
    const int n = p.dimension();
    const int sign = n % 2 == 0 ? 1 : -1;

    std::vector<Equation> equations;
    for (int i = 0; i <= n; ++i) {
        equations.push_back({i, cp.coeff(static_cast<std::size_t>(i)),
                             Cyclotomic(target.coeff(static_cast<std::size_t>(i)) * Rational(sign))});
    }
    return {p, std::move(gamma), std::move(factors), std::move(product), std::move(cp), std::move(target),
            sign, std::move(equations), stats};
}

Gauge default_gauge(const QdeProblem& p)
{
    Gauge g;
    for (int j = 1; j <= p.zero_block(); ++j) {
        g.y[j] = Cyclotomic(1);
    }
    return g;
}

namespace {

struct Pending {
    Equation origin;
    SymExpr residual;
};

std::string list_equations(const std::vector<Equation>& eqs)
{
    std::string out;
    for (const auto& e : eqs) {
        out += "\n  " + e.str();
    }
    return out;
}

std::vector<Equation> origins(const std::vector<Pending>& pending)
{
    std::vector<Equation> out;
    for (const auto& p : pending) {
        out.push_back(p.origin);
    }
    return out;
}

// Substitutes the bindings, drops satisfied unknown-free equations and throws on a violated one.
void reduce(std::vector<Pending>& pending, const Bindings& bound)
{
    std::vector<Pending> kept;
    for (auto& p : pending) {
        p.residual = p.residual.substitute(bound);
        if (p.residual.is_constant()) {
            if (!p.residual.is_zero()) {
                throw InconsistentSystem("equation violated after substitution: " + p.origin.str() +
                                             " (residual " + p.residual.str() + ")",
                                         p.origin);
            }
            continue;
        }
        kept.push_back(std::move(p));
    }
    pending = std::move(kept);
}

// Binds u from an equation c*u + rest == 0 where rest is unknown-free.
bool isolate_one(std::vector<Pending>& pending, Bindings& bound)
{
    for (const auto& p : pending) {
        const SymExpr var = p.residual.without_constant();
        if (var.terms().size() != 1) {
            continue;
        }
        const auto& [mono, c] = *var.terms().begin();
        if (mono.size() != 1) {
            continue;
        }
        bound[mono.front()] = -p.residual.constant_term() / c;
        return true;
    }
    return false;
}

// Gaussian elimination treating each distinct monomial as an atom. Binds every single-unknown
// atom the system determines; returns whether anything was bound.
bool eliminate(std::vector<Pending>& pending, Bindings& bound)
{
    std::vector<Monomial> atoms;
    {
        std::set<Monomial> seen;
        for (const auto& p : pending) {
            for (const auto& [m, c] : p.residual.terms()) {
                if (!m.empty()) {
                    seen.insert(m);
                }
            }
        }
        atoms.assign(seen.begin(), seen.end());
    }
    const std::size_t cols = atoms.size();
    std::vector<std::vector<Cyclotomic>> rows;
    for (const auto& p : pending) {
        std::vector<Cyclotomic> row(cols + 1);
        for (std::size_t a = 0; a < cols; ++a) {
            row[a] = p.residual.coefficient(atoms[a]);
        }
        row[cols] = -p.residual.constant_term();
        rows.push_back(std::move(row));
    }

    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t sel = r;
        while (sel < rows.size() && rows[sel][c].is_zero()) {
            ++sel;
        }
        if (sel == rows.size()) {
            continue;
        }
        std::swap(rows[r], rows[sel]);
        const Cyclotomic inv = rows[r][c].inverse();
        for (auto& v : rows[r]) {
            v = v * inv;
        }
        for (std::size_t o = 0; o < rows.size(); ++o) {
            if (o == r || rows[o][c].is_zero()) {
                continue;
            }
            const Cyclotomic f = rows[o][c];
            for (std::size_t t = c; t <= cols; ++t) {
                rows[o][t] -= f * rows[r][t];
            }
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t o = r; o < rows.size(); ++o) {
        if (!rows[o][cols].is_zero()) {
            throw InconsistentSystem("linear pass: equations are contradictory" + list_equations(origins(pending)),
                                     pending.front().origin);
        }
    }
    bool progress = false;
    for (std::size_t i = 0; i < r; ++i) {
        const std::size_t c = pivot_col[i];
        bool alone = true;
        for (std::size_t t = 0; t < cols; ++t) {
            if (t != c && !rows[i][t].is_zero()) {
                alone = false;
                break;
            }
        }
        if (alone && atoms[c].size() == 1) {
            bound[atoms[c].front()] = rows[i][cols];
            progress = true;
        }
    }
    return progress;
}

}  // namespace

StokesData solve(const StokesSystem& system, const Gauge& gauge)
{
    const QdeProblem& p = system.problem;
    Bindings bound;
    for (const auto& [j, v] : gauge.y) {
        if (v.is_zero()) {
            throw std::invalid_argument("solve: gauge value for y_" + std::to_string(j) + " must be nonzero");
        }
        bound[Unknown::y(j)] = v;
    }

    std::vector<Pending> pending;
    for (const auto& e : system.equations) {
        pending.push_back({e, e.residual()});
    }
    reduce(pending, bound);
    while (!pending.empty()) {
        if (isolate_one(pending, bound) || eliminate(pending, bound)) {
            reduce(pending, bound);
            continue;
        }
        throw StuckSystem("no equation isolates a single unknown" + list_equations(origins(pending)),
                          origins(pending));
    }

    const auto unknowns = system.unknowns();
    std::vector<Equation> none;
    for (const auto& u : unknowns) {
        if (bound.find(u) == bound.end()) {
            throw StuckSystem("unknown " + u.str() + " is not determined by the monodromy identity", none);
        }
    }

    StokesData out;
    out.solution = bound;
    out.gauge = gauge;
    for (const auto& [u, v] : bound) {
        if (u.kind == Unknown::Kind::X) {
            out.x_base[{u.first, u.second}] = v.demoted();
        }
    }
    for (int j = 1; j <= p.zero_block(); ++j) {
        out.yz[j] = (bound.at(Unknown::y(j)) * bound.at(Unknown::z(j))).demoted();
    }
    out.x = extend_all(out.x_base, p);
    return out;
}

StokesData solve(const StokesSystem& system)
{
    return solve(system, default_gauge(system.problem));
}

PairTable extend_all(const PairTable& base, const QdeProblem& p)
{
    const int ram = p.ramification();
    const FormalMonodromy gamma = formal_monodromy(p);
    const SymMatrix gamma_inv = gamma.inverse();
    PairTable out;
    for (const auto& dir : singular_directions(p)) {
        SymMatrix st = SymMatrix::identity(p.dimension());
        for (const auto& pair : dir.pairs) {
            if (pair.source == kZero || pair.target == kZero) {
                continue;
            }
            auto it = base.find({pair.target, pair.source});
            if (it == base.end()) {
                throw std::invalid_argument("extend_all: missing x_{" + std::to_string(pair.target) + "," +
                                            std::to_string(pair.source) + "} at direction " + dir.value.str());
            }
            st.set(pair.target, pair.source, SymExpr(it->second));
        }
        SymMatrix conj = st;
        for (int s = 0; s < ram; ++s) {
            if (s > 0) {
                conj = gamma_inv * conj * gamma.matrix;
            }
            const Rational at = (dir.value + Rational(s)).mod(ram);
            for (const auto& [idx, e] : conj.entries()) {
                const auto [l, k] = idx;
                if (l == k || l >= ram || k >= ram) {
                    continue;
                }
                if (singular_direction(p, {k, l}) != at) {
                    throw std::logic_error("extend_all: conjugate has an entry at (" + std::to_string(l) + "," +
                                           std::to_string(k) + ") outside the support of direction " + at.str());
                }
                const Cyclotomic v = e.constant_term().demoted();
                auto [slot, inserted] = out.try_emplace({l, k}, v);
                if (!inserted && !(slot->second == v)) {
                    throw ConflictingAssignment("extend_all: x_{" + std::to_string(l) + "," + std::to_string(k) +
                                                "} assigned both " + slot->second.str() + " and " + v.str());
                }
            }
        }
    }
    for (int l = 0; l < ram; ++l) {
        for (int k = 0; k < ram; ++k) {
            if (l != k && out.find({l, k}) == out.end()) {
                // A pair whose Stokes entry is zero never shows up as a matrix entry.
                out[{l, k}] = Cyclotomic(0);
            }
        }
    }
    return out;
}

std::vector<SymExpr> split_rational(const SymExpr& e, long order)
{
    std::vector<SymExpr> parts(static_cast<std::size_t>(euler_phi(order)));
    for (const auto& [mono, c] : e.terms()) {
        const Cyclotomic lifted = cyclo_embed(c, order);
        SymExpr base;
        if (mono.empty()) {
            base = SymExpr(1);
        } else {
            base = SymExpr(mono.front());
            for (std::size_t i = 1; i < mono.size(); ++i) {
                base = base * SymExpr(mono[i]);
            }
        }
        for (std::size_t i = 0; i < lifted.coeffs().size(); ++i) {
            if (!lifted.coeffs()[i].is_zero()) {
                parts[i] += base * Cyclotomic(lifted.coeffs()[i]);
            }
        }
    }
    return parts;
}

bool VerificationReport::passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

namespace {

std::string pair_name(int l, int k)
{
    return "x_{" + std::to_string(l) + "," + std::to_string(k) + "}";
}

void add_check(VerificationReport& r, std::string name, const std::vector<std::string>& mismatches,
               std::size_t total)
{
    std::string detail;
    if (mismatches.empty()) {
        detail = std::to_string(total) + " compared";
    } else {
        detail = std::to_string(mismatches.size()) + " of " + std::to_string(total) + " differ:";
        for (std::size_t i = 0; i < mismatches.size() && i < 6; ++i) {
            detail += " " + mismatches[i];
        }
        if (mismatches.size() > 6) {
            detail += " ...";
        }
    }
    r.checks.push_back({std::move(name), mismatches.empty(), std::move(detail)});
}

std::string mismatch(int l, int k, const Cyclotomic& got, const Rational& want)
{
    return pair_name(l, k) + "=" + got.str() + "(expected " + want.str() + ")";
}

}  // namespace

VerificationReport verify(const StokesData& data, const StokesSystem& system)
{
    const QdeProblem& p = system.problem;
    const int ram = p.ramification();
    VerificationReport report;

    {
        const LambdaPoly bound = system.charpoly.substitute(data.solution);
        const LambdaPoly want = LambdaPoly::from_polynomial(system.target());
        const bool ok = bound == want;
        report.checks.push_back({"resubstitution", ok,
                                 ok ? "char poly equals " + want.str()
                                    : "got " + bound.str() + ", expected " + want.str()});
    }

    if (const auto* proj = std::get_if<Projective>(&p.family())) {
        std::vector<std::string> base_bad;
        for (const auto& [lk, v] : data.x_base) {
            const Rational want = closedform::projective_formula(proj->n, lk.first, lk.second);
            if (!(v == Cyclotomic(want))) {
                base_bad.push_back(mismatch(lk.first, lk.second, v, want));
            }
        }
        add_check(report, "closed form, directions in [0,1)", base_bad, data.x_base.size());
        std::vector<std::string> all_bad;
        for (const auto& [lk, v] : data.x) {
            const Rational want = closedform::projective_formula(proj->n, lk.first, lk.second);
            if (!(v == Cyclotomic(want))) {
                all_bad.push_back(mismatch(lk.first, lk.second, v, want));
            }
        }
        add_check(report, "closed form, all pairs", all_bad, data.x.size());
    } else if (const auto* hyp = std::get_if<Hypersurface>(&p.family()); hyp && hyp->n >= 2) {
        std::vector<std::string> range_bad;
        std::size_t in_range = 0;
        std::vector<std::string> all_bad;
        for (const auto& [lk, v] : data.x) {
            if (auto want = closedform::hypersurface_formula_in_range(hyp->n, hyp->m, lk.first, lk.second)) {
                ++in_range;
                if (!(v == Cyclotomic(*want))) {
                    range_bad.push_back(mismatch(lk.first, lk.second, v, *want));
                }
            }
            const Rational want_all = closedform::hypersurface_formula(hyp->n, hyp->m, lk.first, lk.second);
            if (!(v == Cyclotomic(want_all))) {
                all_bad.push_back(mismatch(lk.first, lk.second, v, want_all));
            }
        }
        add_check(report, "closed form, stated ranges", range_bad, in_range);
        add_check(report, "closed form, shifted to all pairs", all_bad, data.x.size());
    } else if (p.is_weighted()) {
        std::vector<std::string> bad;
        for (const auto& [lk, v] : data.x) {
            if (!v.is_rational() || !v.rational_part().is_integer()) {
                bad.push_back(pair_name(lk.first, lk.second) + "=" + v.str());
            }
        }
        add_check(report, "integer values", bad, data.x.size());
    }

    {
        // Signed shift: x_{l+1,k+1} = w^{[l = ram-1]} w^{[k = ram-1]} x_{l,k}.
        const int w = system.gamma.wrap_sign;
        std::vector<std::string> bad;
        std::size_t total = 0;
        for (const auto& [lk, v] : data.x) {
            const auto [l, k] = lk;
            int sign = 1;
            if (l == ram - 1) {
                sign *= w;
            }
            if (k == ram - 1) {
                sign *= w;
            }
            const Cyclotomic& next = data.x.at({(l + 1) % ram, (k + 1) % ram});
            ++total;
            if (!(next == v * Cyclotomic(sign))) {
                bad.push_back(pair_name((l + 1) % ram, (k + 1) % ram) + "=" + next.str());
            }
        }
        add_check(report, "signed shift rule", bad, total);
    }
    if (system.gamma.wrap_sign == 1) {
        std::vector<std::string> bad;
        for (const auto& [lk, v] : data.x) {
            const Cyclotomic& next = data.x.at({(lk.first + 1) % ram, (lk.second + 1) % ram});
            if (!(next == v)) {
                bad.push_back(pair_name(lk.first, lk.second));
            }
        }
        add_check(report, "unsigned shift rule", bad, data.x.size());
    }
    return report;
}

VerificationReport verify(const StokesData& data, const QdeProblem& p)
{
    return verify(data, build_system(p, std::max(16, p.dimension())));
}

}  // namespace stokes
