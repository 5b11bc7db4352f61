// Acceptance suite: one PASS/FAIL line per criterion, followed by indented details.
// The exit status is 0 once every criterion has been evaluated; FAIL lines are findings,
// not crashes.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <numeric>
#include <sstream>

#include "stokes/closedform.hpp"
#include "stokes/solver.hpp"
#include "support.hpp"

using namespace stokes;

namespace {

struct Solved {
    StokesSystem system;
    StokesData data;
};

std::map<std::string, std::shared_ptr<const Solved>>& cache()
{
    static std::map<std::string, std::shared_ptr<const Solved>> c;
    return c;
}

const Solved& solved(const QdeProblem& p)
{
    auto& c = cache();
    auto it = c.find(p.describe());
    if (it == c.end()) {
        auto system = build_system(p);
        auto data = solve(system);
        it = c.emplace(p.describe(), std::make_shared<const Solved>(Solved{std::move(system), std::move(data)})).first;
    }
    return *it->second;
}

class Criterion {
public:
    Criterion(int number, std::string title, double budget_s)
        : number_(number), title_(std::move(title)), budget_s_(budget_s), start_(std::chrono::steady_clock::now())
    {
    }

    void expect(bool ok, const std::string& what)
    {
        if (!ok) {
            passed_ = false;
            failures_.push_back(what);
        }
    }

    void note(const std::string& what) { notes_.push_back(what); }

    bool finish()
    {
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        std::ostringstream time;
        time.precision(3);
        time << std::fixed << seconds << "s";
        if (seconds > budget_s_) {
            passed_ = false;
            failures_.push_back("runtime " + time.str() + " over the " + std::to_string(budget_s_) + "s budget");
        }
        std::cout << (passed_ ? "PASS" : "FAIL") << "  criterion " << number_ << ": " << title_ << " ("
                  << time.str() << ")\n";
        const std::size_t shown = std::min<std::size_t>(failures_.size(), 25);
        for (std::size_t i = 0; i < shown; ++i) {
            std::cout << "      - " << failures_[i] << "\n";
        }
        if (failures_.size() > shown) {
            std::cout << "      - ... " << failures_.size() - shown << " more\n";
        }
        for (const auto& n : notes_) {
            std::cout << "      . " << n << "\n";
        }
        return passed_;
    }

private:
    int number_;
    std::string title_;
    double budget_s_;
    std::chrono::steady_clock::time_point start_;
    bool passed_ = true;
    std::vector<std::string> failures_;
    std::vector<std::string> notes_;
};

std::string pair(int l, int k)
{
    return "x_{" + std::to_string(l) + "," + std::to_string(k) + "}";
}

std::vector<QdeProblem> criterion1_problems()
{
    std::vector<QdeProblem> out;
    for (int n = 2; n <= 10; ++n) {
        out.push_back(QdeProblem::projective(n));
    }
    return out;
}

std::vector<std::vector<int>> random_weight_tuples()
{
    std::mt19937 gen(7u);
    std::vector<std::vector<int>> out;
    while (out.size() < 10) {
        std::uniform_int_distribution<int> len(2, 5);
        std::vector<int> w(static_cast<std::size_t>(len(gen)));
        std::uniform_int_distribution<int> val(1, 6);
        for (auto& v : w) {
            v = val(gen);
        }
        std::sort(w.begin(), w.end());
        const int sum = std::accumulate(w.begin(), w.end(), 0);
        const int g = std::accumulate(w.begin(), w.end(), 0, [](int a, int b) { return std::gcd(a, b); });
        if (sum > 12 || g != 1 || std::find(out.begin(), out.end(), w) != out.end()) {
            continue;
        }
        out.push_back(w);
    }
    return out;
}

std::vector<std::pair<int, int>> criterion4_instances()
{
    return {{2, 3}, {4, 3}, {3, 3}, {1, 3}};
}

std::vector<QdeProblem> criterion5_problems()
{
    std::vector<QdeProblem> out;
    for (int n = 2; n <= 10; ++n) {
        for (int m = 2; n + m <= 12; ++m) {
            out.push_back(QdeProblem::hypersurface(n, m));
        }
    }
    return out;
}

std::vector<QdeProblem> all_instances()
{
    std::vector<QdeProblem> out = criterion1_problems();
    out.push_back(QdeProblem::weighted({1, 2, 4}));
    for (const auto& w : random_weight_tuples()) {
        out.push_back(QdeProblem::weighted(w));
    }
    for (auto [n, m] : criterion4_instances()) {
        out.push_back(QdeProblem::hypersurface(n, m));
    }
    for (const auto& p : criterion5_problems()) {
        out.push_back(p);
    }
    return out;
}

Cyclotomic zeta3(long k = 1)
{
    return Cyclotomic::zeta(3, k);
}

void check_value(Criterion& c, const std::string& label, const Cyclotomic& got, const Cyclotomic& want)
{
    c.expect(got == want, label + " = " + got.str() + ", expected " + want.str());
}

bool criterion1()
{
    Criterion c(1, "projective closed forms, n = 2..10, all pairs, and the P_3..P_9 shapes", 5.0);
    for (const auto& p : criterion1_problems()) {
        const int n = p.ramification();
        const auto& s = solved(p);
        int bad = 0;
        for (const auto& [lk, v] : s.data.x) {
            const Rational want = closedform::projective_formula(n, lk.first, lk.second);
            if (!(v == Cyclotomic(want))) {
                ++bad;
                c.expect(false, "n=" + std::to_string(n) + ": " + pair(lk.first, lk.second) + " = " + v.str() +
                                    ", formula " + want.str());
            }
        }
        c.note("n=" + std::to_string(n) + ": " + std::to_string(s.data.x.size() - static_cast<std::size_t>(bad)) +
               "/" + std::to_string(s.data.x.size()) + " pairs agree");
    }
    const std::map<int, std::string> shapes{
        {3, "-λ^3 + x_{0,1}*λ^2 + x_{2,1}*λ + 1"},
        {4, "λ^4 - x_{0,1}*λ^3 - x_{0,2}*λ^2 + x_{3,2}*λ + 1"},
        {5, "-λ^5 + x_{0,1}*λ^4 + x_{0,2}*λ^3 + x_{4,2}*λ^2 + x_{4,3}*λ + 1"},
        {6, "λ^6 - x_{1,2}*λ^5 - x_{0,2}*λ^4 - x_{0,3}*λ^3 + x_{5,3}*λ^2 + x_{5,4}*λ + 1"},
        {7, "-λ^7 + x_{1,2}*λ^6 + x_{0,2}*λ^5 + x_{0,3}*λ^4 + x_{6,3}*λ^3 + x_{6,4}*λ^2 + x_{5,4}*λ + 1"},
        {8, "λ^8 - x_{1,2}*λ^7 - x_{1,3}*λ^6 - x_{0,3}*λ^5 - x_{0,4}*λ^4 + x_{7,4}*λ^3 + x_{7,5}*λ^2 + x_{6,5}*λ + 1"},
        {9, "-λ^9 + x_{1,2}*λ^8 + x_{1,3}*λ^7 + x_{0,3}*λ^6 + x_{0,4}*λ^5 + x_{8,4}*λ^4 + x_{8,5}*λ^3 + "
            "x_{7,5}*λ^2 + x_{7,6}*λ + 1"},
    };
    for (const auto& [n, shape] : shapes) {
        const std::string got = solved(QdeProblem::projective(n)).system.charpoly.str();
        c.expect(got == shape, "P_" + std::to_string(n) + " = " + got + ", expected " + shape);
    }
    return c.finish();
}

bool criterion2()
{
    Criterion c(2, "weighted (1,2,4) Stokes values and monodromy polynomial", 2.0);
    const auto p = QdeProblem::weighted({1, 2, 4});
    const auto& s = solved(p);
    const std::vector<std::pair<std::pair<int, int>, int>> expected{
        {{1, 2}, 1}, {{0, 2}, 1}, {{0, 3}, -1}, {{6, 3}, 1}, {{6, 4}, -1}, {{5, 4}, -1}};
    for (const auto& [lk, v] : expected) {
        check_value(c, pair(lk.first, lk.second), s.data.x.at(lk), Cyclotomic(v));
    }
    const Polynomial one = Polynomial::constant(Rational(1));
    const auto lam = [&](std::size_t k) { return Polynomial::monomial(Rational(1), k) - one; };
    const Polynomial want = lam(1) * lam(2) * lam(4);
    c.expect(s.system.monodromy_poly == want, "monodromy polynomial " + s.system.monodromy_poly.str("λ"));
    c.expect(s.system.target() == want.scaled(Rational(-1)), "target " + s.system.target().str("λ"));
    c.expect(s.system.charpoly.substitute(s.data.solution) == LambdaPoly::from_polynomial(s.system.target()),
             "re-substitution");
    return c.finish();
}

bool criterion3()
{
    Criterion c(3, "weighted integrality on 10 random tuples with s <= 12", 30.0);
    const Polynomial one = Polynomial::constant(Rational(1));
    for (const auto& w : random_weight_tuples()) {
        const auto p = QdeProblem::weighted(w);
        const auto& s = solved(p);
        for (const auto& [lk, v] : s.data.x) {
            c.expect(v.is_rational() && v.rational_part().is_integer(),
                     p.describe() + ": " + pair(lk.first, lk.second) + " = " + v.str());
        }
        Polynomial prod = one;
        for (int wj : w) {
            prod = prod * (Polynomial::monomial(Rational(1), static_cast<std::size_t>(wj)) - one);
        }
        c.expect(s.system.monodromy_poly == prod, p.describe() + ": monodromy polynomial");
        c.expect(s.system.charpoly.substitute(s.data.solution) == LambdaPoly::from_polynomial(s.system.target()),
                 p.describe() + ": re-substitution");
        c.note(p.describe() + ": " + std::to_string(s.data.x.size()) + " integer values");
    }
    return c.finish();
}

bool criterion4()
{
    Criterion c(4, "hypersurface examples, exact values", 5.0);
    {
        const auto& s = solved(QdeProblem::hypersurface(2, 3));
        check_value(c, "(2,3) x_1 = x_{1,0}", s.data.x.at({1, 0}), Cyclotomic(-5));
        check_value(c, "(2,3) yz_1", s.data.yz.at(1), Cyclotomic(18) - Cyclotomic(9) * zeta3());
        check_value(c, "(2,3) yz_2", s.data.yz.at(2), Cyclotomic(27) + Cyclotomic(9) * zeta3());
    }
    {
        const auto& s = solved(QdeProblem::hypersurface(4, 3));
        check_value(c, "(4,3) x_{0,1}", s.data.x.at({0, 1}), Cyclotomic(7));
        check_value(c, "(4,3) x_{0,2}", s.data.x.at({0, 2}), Cyclotomic(-21));
        check_value(c, "(4,3) x_{3,2}", s.data.x.at({3, 2}), Cyclotomic(-7));
        const Cyclotomic v = Cyclotomic(9) * (Cyclotomic(2) * zeta3(2) + Cyclotomic(1));
        check_value(c, "(4,3) yz_1", s.data.yz.at(1), v);
        check_value(c, "(4,3) yz_2", s.data.yz.at(2), -v);
    }
    {
        const auto& s = solved(QdeProblem::hypersurface(3, 3));
        check_value(c, "(3,3) x_{0,1}", s.data.x.at({0, 1}), Cyclotomic(6));
        check_value(c, "(3,3) x_{2,1}", s.data.x.at({2, 1}), Cyclotomic(-6));
        check_value(c, "(3,3) yz_1", s.data.yz.at(1), Cyclotomic(-9) * (zeta3(2) + Cyclotomic(1)));
        check_value(c, "(3,3) yz_2", s.data.yz.at(2), Cyclotomic(9) * zeta3(2));
    }
    {
        const auto& s = solved(QdeProblem::hypersurface(1, 3));
        check_value(c, "(1,3) yz_1", s.data.yz.at(1), Cyclotomic(3) + Cyclotomic(3) * zeta3());
        check_value(c, "(1,3) yz_2", s.data.yz.at(2), Cyclotomic(-3) * zeta3());
    }
    return c.finish();
}

bool criterion5()
{
    Criterion c(5, "hypersurface closed forms on the stated ranges, n >= 2, m >= 2, n + m <= 12", 60.0);
    for (const auto& p : criterion5_problems()) {
        const auto& h = std::get<Hypersurface>(p.family());
        const auto& s = solved(p);
        int total = 0;
        int agree = 0;
        for (const auto& [lk, v] : s.data.x) {
            const auto want = closedform::hypersurface_formula_in_range(h.n, h.m, lk.first, lk.second);
            if (!want) {
                continue;
            }
            ++total;
            if (v == Cyclotomic(*want)) {
                ++agree;
            } else {
                c.expect(false, p.describe() + ": " + pair(lk.first, lk.second) + " = " + v.str() + ", formula " +
                                    want->str());
            }
        }
        c.note(p.describe() + ": " + std::to_string(agree) + "/" + std::to_string(total) + " agree");
    }
    return c.finish();
}

bool criterion6()
{
    Criterion c(6, "det(formal monodromy) = det(local monodromy at 0) on every instance", 10.0);
    for (const auto& p : all_instances()) {
        const SymExpr det = determinant(formal_monodromy(p).matrix, p.dimension());
        const Cyclotomic want = monodromy_determinant(p).value();
        c.expect(det == SymExpr(want), p.describe() + ": det gamma = " + det.str() + ", det mon_0 = " + want.str());
    }
    return c.finish();
}

bool criterion7()
{
    Criterion c(7, "gauge invariance under 5 random gauges", 10.0);
    std::mt19937 gen(11u);
    std::uniform_int_distribution<int> num(-12, 12);
    std::uniform_int_distribution<int> den(1, 7);
    for (auto [n, m] : criterion4_instances()) {
        const auto p = QdeProblem::hypersurface(n, m);
        const auto& base = solved(p);
        for (int trial = 0; trial < 5; ++trial) {
            Gauge g;
            for (int j = 1; j <= p.zero_block(); ++j) {
                int a = 0;
                while (a == 0) {
                    a = num(gen);
                }
                g.y[j] = Cyclotomic(Rational(a) / Rational(den(gen)));
            }
            const auto other = solve(base.system, g);
            c.expect(other.x == base.data.x, p.describe() + ": x table changed under a gauge");
            c.expect(other.yz == base.data.yz, p.describe() + ": yz changed under a gauge");
        }
    }
    return c.finish();
}

bool criterion8()
{
    Criterion c(8, "Dubrovin comparison, n = 2..8", 2.0);
    for (int n = 2; n <= 8; ++n) {
        const auto r = closedform::dubrovin_check(n);
        c.expect(r.magnitudes_match, "n=" + std::to_string(n) + ": |x| != |a|");
        c.expect(r.relation_holds, "n=" + std::to_string(n) + ": sign relation fails");
        c.note("n=" + std::to_string(n) + ": sign pattern " + r.sign_pattern());
    }
    return c.finish();
}

bool criterion9()
{
    Criterion c(9, "re-substitution reproduces sigma * target on every solved instance", 20.0);
    std::size_t count = 0;
    for (const auto& p : all_instances()) {
        const auto& s = solved(p);
        ++count;
        const LambdaPoly got = s.system.charpoly.substitute(s.data.solution);
        const LambdaPoly want = LambdaPoly::from_polynomial(s.system.target());
        c.expect(got == want, p.describe() + ": " + got.str() + " vs " + want.str());
        for (const auto& coeff : got.coeffs()) {
            c.expect(coeff.is_constant(), p.describe() + ": unknown left after substitution");
        }
    }
    c.note(std::to_string(count) + " instances");
    return c.finish();
}

bool criterion10()
{
    Criterion c(10, "exact arithmetic properties: field axioms, Phi_m for m <= 30, char_poly similarity", 20.0);
    for (long m = 1; m <= 30; ++m) {
        for (int t = 0; t < 4; ++t) {
            const Cyclotomic a = testing::random_cyclotomic(m);
            const Cyclotomic b = testing::random_cyclotomic(m);
            const Cyclotomic d = testing::random_cyclotomic(m);
            const std::string tag = "Q(zeta_" + std::to_string(m) + ")";
            c.expect(a + b == b + a && a * b == b * a, tag + ": commutativity");
            c.expect((a * b) * d == a * (b * d) && (a + b) + d == a + (b + d), tag + ": associativity");
            c.expect(a * (b + d) == a * b + a * d, tag + ": distributivity");
            c.expect(a.is_zero() || a * a.inverse() == Cyclotomic(1), tag + ": inverse");
        }
        const Polynomial phi = cyclotomic_polynomial(m);
        c.expect(phi.degree() == euler_phi(m) && phi.has_integer_coeffs(), "Phi_" + std::to_string(m) + " shape");
        Polynomial prod = Polynomial::constant(Rational(1));
        for (long d = 1; d <= m; ++d) {
            if (m % d == 0) {
                prod = prod * cyclotomic_polynomial(d);
            }
        }
        c.expect(prod == Polynomial::monomial(Rational(1), static_cast<std::size_t>(m)) -
                             Polynomial::constant(Rational(1)),
                 "prod Phi_d != x^m - 1 for m=" + std::to_string(m));
        c.expect(Cyclotomic::from_polynomial(m, phi).is_zero(), "Phi_m(zeta_m) != 0 for m=" + std::to_string(m));
        Cyclotomic power(1);
        for (long j = 0; j < m; ++j) {
            power *= Cyclotomic::zeta(m);
        }
        c.expect(power == Cyclotomic(1), "zeta^m != 1 for m=" + std::to_string(m));
    }
    std::vector<int> sigma{0, 1, 2, 3, 4};
    for (int t = 0; t < 20; ++t) {
        SymMatrix a(5);
        for (int i = 0; i < 5; ++i) {
            for (int j = 0; j < 5; ++j) {
                a.set(i, j, SymExpr(Cyclotomic(testing::random_rational(5))));
            }
        }
        std::shuffle(sigma.begin(), sigma.end(), testing::rng());
        SymMatrix p(5);
        for (int i = 0; i < 5; ++i) {
            p.set(sigma[static_cast<std::size_t>(i)], i, SymExpr(1));
        }
        SymMatrix u = SymMatrix::identity(5);
        SymMatrix u_inv = SymMatrix::identity(5);
        const Cyclotomic k(testing::random_nonzero_rational());
        u.set(1, 4, SymExpr(k));
        u_inv.set(1, 4, SymExpr(-k));
        const LambdaPoly base = char_poly(a);
        c.expect(char_poly(p.transposed() * a * p) == base, "permutation similarity changed char_poly");
        c.expect(char_poly(u * a * u_inv) == base, "unipotent similarity changed char_poly");
    }
    return c.finish();
}

}  // namespace

int main()
{
    const std::vector<std::function<bool()>> criteria{criterion1, criterion2, criterion3, criterion4, criterion5,
                                                      criterion6, criterion7, criterion8, criterion9, criterion10};
    int passed = 0;
    for (const auto& run : criteria) {
        try {
            passed += run() ? 1 : 0;
        } catch (const std::exception& e) {
            std::cout << "FAIL  (exception) " << e.what() << "\n";
        }
    }
    std::cout << passed << "/" << criteria.size() << " criteria pass\n";
    return 0;
}
