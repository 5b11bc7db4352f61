#include "stokes/sym_expr.hpp"

#include <algorithm>
#include <ostream>

namespace stokes {

std::string Unknown::str() const
{
    switch (kind) {
    case Kind::X:
        return "x_{" + std::to_string(first) + "," + std::to_string(second) + "}";
    case Kind::Y:
        return "y_" + std::to_string(first);
    case Kind::Z:
        return "z_" + std::to_string(first);
    }
    return "?";
}

SymExpr::SymExpr(const Cyclotomic& c)
{
    add_term({}, c);
}

SymExpr::SymExpr(const Unknown& u)
{
    terms_.emplace(Monomial{u}, Cyclotomic(1));
}

void SymExpr::add_term(const Monomial& m, const Cyclotomic& c)
{
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

bool SymExpr::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Cyclotomic SymExpr::constant_term() const
{
    return coefficient({});
}

Cyclotomic SymExpr::coefficient(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Cyclotomic(0) : it->second;
}

int SymExpr::degree() const
{
    int d = -1;
    for (const auto& [m, c] : terms_) {
        d = std::max(d, static_cast<int>(m.size()));
    }
    return d;
}

std::set<Unknown> SymExpr::unknowns() const
{
    std::set<Unknown> out;
    for (const auto& [m, c] : terms_) {
        out.insert(m.begin(), m.end());
    }
    return out;
}

SymExpr SymExpr::without_constant() const
{
    SymExpr out = *this;
    out.terms_.erase(Monomial{});
    return out;
}

SymExpr& SymExpr::operator+=(const SymExpr& o)
{
    for (const auto& [m, c] : o.terms_) {
        add_term(m, c);
    }
    return *this;
}

SymExpr& SymExpr::operator-=(const SymExpr& o)
{
    for (const auto& [m, c] : o.terms_) {
        add_term(m, -c);
    }
    return *this;
}

SymExpr& SymExpr::operator*=(const Cyclotomic& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) {
        v *= c;
    }
    return *this;
}

SymExpr operator*(const SymExpr& a, const SymExpr& b)
{
    SymExpr out;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m;
            m.reserve(ma.size() + mb.size());
            std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(m));
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

SymExpr SymExpr::operator-() const
{
    SymExpr out = *this;
    for (auto& [m, c] : out.terms_) {
        c = -c;
    }
    return out;
}

bool operator==(const SymExpr& a, const SymExpr& b)
{
    return (a - b).is_zero();
}

SymExpr SymExpr::substitute(const Bindings& bindings) const
{
    SymExpr out;
    for (const auto& [m, c] : terms_) {
        Cyclotomic coeff = c;
        Monomial rest;
        for (const auto& u : m) {
            if (auto it = bindings.find(u); it != bindings.end()) {
                coeff *= it->second;
            } else {
                rest.push_back(u);
            }
        }
        out.add_term(rest, coeff);
    }
    return out;
}

std::string SymExpr::str() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    for (const auto& [m, c] : terms_) {
        std::string coeff = c.str();
        const bool simple = c.is_rational();
        std::string term;
        if (m.empty()) {
            term = simple ? coeff : "(" + coeff + ")";
        } else {
            if (c == Cyclotomic(1)) {
                term.clear();
            } else if (c == Cyclotomic(-1)) {
                term = "-";
            } else {
                term = simple ? coeff + "*" : "(" + coeff + ")*";
            }
            for (std::size_t i = 0; i < m.size(); ++i) {
                term += (i ? "*" : "") + m[i].str();
            }
        }
        if (!out.empty() && term.front() != '-') {
            out += " + ";
        } else if (!out.empty()) {
            out += " - ";
            term.erase(0, 1);
        }
        out += term;
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const SymExpr& e)
{
    return os << e.str();
}

}  // namespace stokes
