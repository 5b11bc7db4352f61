#include "stokes/sym_matrix.hpp"

#include <bit>
#include <cstdint>
#include <sstream>

namespace stokes {

LambdaPoly::LambdaPoly(std::vector<SymExpr> coeffs) : coeffs_(std::move(coeffs))
{
    trim();
}

LambdaPoly LambdaPoly::from_polynomial(const Polynomial& p)
{
    std::vector<SymExpr> c;
    c.reserve(p.coeffs().size());
    for (const auto& r : p.coeffs()) {
        c.emplace_back(Cyclotomic(r));
    }
    return LambdaPoly(std::move(c));
}

void LambdaPoly::trim()
{
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

LambdaPoly& LambdaPoly::operator+=(const LambdaPoly& o)
{
    if (o.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(o.coeffs_.size());
    }
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
        coeffs_[i] += o.coeffs_[i];
    }
    trim();
    return *this;
}

LambdaPoly LambdaPoly::times_entry(const SymExpr& a, bool diagonal) const
{
    std::vector<SymExpr> out(coeffs_.size() + (diagonal ? 1 : 0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (!a.is_zero()) {
            out[i] += coeffs_[i] * a;
        }
        if (diagonal) {
            out[i + 1] -= coeffs_[i];
        }
    }
    return LambdaPoly(std::move(out));
}

LambdaPoly LambdaPoly::substitute(const Bindings& b) const
{
    std::vector<SymExpr> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) {
        out.push_back(c.substitute(b));
    }
    return LambdaPoly(std::move(out));
}

LambdaPoly LambdaPoly::scaled(const Cyclotomic& c) const
{
    std::vector<SymExpr> out = coeffs_;
    for (auto& e : out) {
        e *= c;
    }
    return LambdaPoly(std::move(out));
}

bool operator==(const LambdaPoly& a, const LambdaPoly& b)
{
    const std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (!(a.coeff(i) == b.coeff(i))) {
            return false;
        }
    }
    return true;
}

std::string LambdaPoly::str(const std::string& var) const
{
    if (coeffs_.empty()) {
        return "0";
    }
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const SymExpr& c = coeffs_[static_cast<std::size_t>(i)];
        if (c.is_zero()) {
            continue;
        }
        std::string power = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
        std::string coeff = c.str();
        std::string term;
        const bool single = c.terms().size() == 1;
        if (i == 0) {
            term = coeff;
        } else if (c == SymExpr(1)) {
            term = power;
        } else if (c == SymExpr(-1)) {
            term = "-" + power;
        } else if (single && (c.is_constant() ? c.constant_term().is_rational() : c.terms().begin()->second.is_rational())) {
            term = coeff + "*" + power;
        } else {
            term = "(" + coeff + ")*" + power;
        }
        if (out.empty()) {
            out = term;
        } else if (term.front() == '-') {
            out += " - " + term.substr(1);
        } else {
            out += " + " + term;
        }
    }
    return out;
}

SymMatrix::SymMatrix(int dim) : dim_(dim)
{
    if (dim <= 0) {
        throw std::invalid_argument("SymMatrix: dimension must be positive");
    }
}

SymMatrix SymMatrix::identity(int dim)
{
    SymMatrix out(dim);
    for (int i = 0; i < dim; ++i) {
        out.entries_.emplace(Index{i, i}, SymExpr(1));
    }
    return out;
}

SymMatrix SymMatrix::unit(int dim, int a, int b)
{
    SymMatrix out(dim);
    out.set(a, b, SymExpr(1));
    return out;
}

void SymMatrix::check(int row, int col) const
{
    if (row < 0 || col < 0 || row >= dim_ || col >= dim_) {
        throw std::out_of_range("SymMatrix: index (" + std::to_string(row) + "," + std::to_string(col) +
                                ") outside dimension " + std::to_string(dim_));
    }
}

SymExpr SymMatrix::at(int row, int col) const
{
    check(row, col);
    auto it = entries_.find({row, col});
    return it == entries_.end() ? SymExpr() : it->second;
}

void SymMatrix::set(int row, int col, const SymExpr& value)
{
    check(row, col);
    if (value.is_zero()) {
        entries_.erase({row, col});
    } else {
        entries_[{row, col}] = value;
    }
}

void SymMatrix::add(int row, int col, const SymExpr& value)
{
    set(row, col, at(row, col) + value);
}

bool SymMatrix::is_constant() const
{
    for (const auto& [idx, e] : entries_) {
        if (!e.is_constant()) {
            return false;
        }
    }
    return true;
}

SymMatrix SymMatrix::substitute(const Bindings& b) const
{
    SymMatrix out(dim_);
    for (const auto& [idx, e] : entries_) {
        out.set(idx.first, idx.second, e.substitute(b));
    }
    return out;
}

SymMatrix SymMatrix::transposed() const
{
    SymMatrix out(dim_);
    for (const auto& [idx, e] : entries_) {
        out.entries_.emplace(Index{idx.second, idx.first}, e);
    }
    return out;
}

SymMatrix operator*(const SymMatrix& a, const SymMatrix& b)
{
    if (a.dim_ != b.dim_) {
        throw DimensionMismatch("matrix_mul: dimensions " + std::to_string(a.dim_) + " and " +
                                std::to_string(b.dim_) + " differ");
    }
    // Row-major iteration of b grouped by row for the sparse product.
    std::vector<std::vector<std::pair<int, const SymExpr*>>> b_rows(static_cast<std::size_t>(b.dim_));
    for (const auto& [idx, e] : b.entries_) {
        b_rows[static_cast<std::size_t>(idx.first)].emplace_back(idx.second, &e);
    }
    SymMatrix out(a.dim_);
    for (const auto& [idx, e] : a.entries_) {
        for (const auto& [col, be] : b_rows[static_cast<std::size_t>(idx.second)]) {
            out.add(idx.first, col, e * *be);
        }
    }
    return out;
}

SymMatrix operator+(const SymMatrix& a, const SymMatrix& b)
{
    if (a.dim_ != b.dim_) {
        throw DimensionMismatch("matrix add: dimensions differ");
    }
    SymMatrix out = a;
    for (const auto& [idx, e] : b.entries_) {
        out.add(idx.first, idx.second, e);
    }
    return out;
}

SymMatrix SymMatrix::scaled(const Cyclotomic& c) const
{
    SymMatrix out(dim_);
    for (const auto& [idx, e] : entries_) {
        out.set(idx.first, idx.second, e * c);
    }
    return out;
}

bool operator==(const SymMatrix& a, const SymMatrix& b)
{
    if (a.dim_ != b.dim_) {
        return false;
    }
    for (const auto& [idx, e] : a.entries_) {
        if (!(e == b.at(idx.first, idx.second))) {
            return false;
        }
    }
    for (const auto& [idx, e] : b.entries_) {
        if (!(e == a.at(idx.first, idx.second))) {
            return false;
        }
    }
    return true;
}

std::string SymMatrix::str() const
{
    std::ostringstream os;
    for (int r = 0; r < dim_; ++r) {
        os << "[";
        for (int c = 0; c < dim_; ++c) {
            os << (c ? ", " : "") << at(r, c).str();
        }
        os << "]\n";
    }
    return os.str();
}

namespace {

LambdaPoly expand(const SymMatrix& a, bool with_lambda, int max_dim, CharPolyStats* stats)
{
    const int n = a.dim();
    if (max_dim > 62) {
        max_dim = 62;
    }
    if (n > max_dim) {
        throw DimensionLimitExceeded("char_poly: dimension " + std::to_string(n) + " exceeds limit " +
                                     std::to_string(max_dim));
    }
    std::vector<std::vector<std::pair<int, SymExpr>>> rows(static_cast<std::size_t>(n));
    for (const auto& [idx, e] : a.entries()) {
        rows[static_cast<std::size_t>(idx.first)].emplace_back(idx.second, e);
    }
    if (with_lambda) {
        for (int r = 0; r < n; ++r) {
            auto& row = rows[static_cast<std::size_t>(r)];
            bool has_diag = false;
            for (const auto& [c, e] : row) {
                has_diag = has_diag || c == r;
            }
            if (!has_diag) {
                row.emplace_back(r, SymExpr());
            }
        }
    }

    // layer[mask] = signed sum over partial permutations of rows 0..r-1 onto the column set mask.
    std::map<std::uint64_t, LambdaPoly> layer;
    layer.emplace(0, LambdaPoly({SymExpr(1)}));
    std::size_t visited = 1;
    for (int r = 0; r < n; ++r) {
        std::map<std::uint64_t, LambdaPoly> next;
        for (const auto& [mask, partial] : layer) {
            for (const auto& [c, e] : rows[static_cast<std::size_t>(r)]) {
                const std::uint64_t bit = std::uint64_t{1} << c;
                if (mask & bit) {
                    continue;
                }
                const bool diagonal = with_lambda && c == r;
                LambdaPoly term = partial.times_entry(e, diagonal);
                if (term.degree() < 0) {
                    continue;
                }
                if (std::popcount(mask >> (c + 1)) % 2 == 1) {
                    term = term.scaled(Cyclotomic(-1));
                }
                auto [it, inserted] = next.try_emplace(mask | bit, std::move(term));
                if (!inserted) {
                    it->second += term;
                }
            }
        }
        std::erase_if(next, [](const auto& kv) { return kv.second.degree() < 0; });
        visited += next.size();
        layer = std::move(next);
    }
    if (stats) {
        stats->states = visited;
    }
    if (layer.empty()) {
        return {};
    }
    return layer.begin()->second;
}

}  // namespace

LambdaPoly char_poly(const SymMatrix& a, int max_dim, CharPolyStats* stats)
{
    return expand(a, true, max_dim, stats);
}

SymExpr determinant(const SymMatrix& a, int max_dim)
{
    return expand(a, false, max_dim, nullptr).coeff(0);
}

}  // namespace stokes
