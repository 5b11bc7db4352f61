#pragma once

#include <string>
#include <variant>
#include <vector>

namespace stokes {

/// delta^n - z, the quantum differential operator of P^{n-1}.
struct Projective {
    int n;
};

/// prod_j delta (delta - 1/w_j) ... (delta - (w_j - 1)/w_j) - z
struct Weighted {
    std::vector<int> weights;
};

/// delta^{n+m-1} - m^m z (delta + (m-1)/m) ... (delta + 1/m), a degree m hypersurface.
struct Hypersurface {
    int n;
    int m;
};

/// One operator family together with its derived sizes. Construct through the factories,
/// which validate the parameters and throw std::invalid_argument otherwise.
class QdeProblem {
public:
    using Family = std::variant<Projective, Weighted, Hypersurface>;

    static QdeProblem projective(int n);
    static QdeProblem weighted(std::vector<int> weights);
    static QdeProblem hypersurface(int n, int m);

    const Family& family() const { return family_; }
    bool is_projective() const { return std::holds_alternative<Projective>(family_); }
    bool is_weighted() const { return std::holds_alternative<Weighted>(family_); }
    bool is_hypersurface() const { return std::holds_alternative<Hypersurface>(family_); }

    /// Order of the root z^{1/ram} needed at infinity: n, sum of weights, or n.
    int ramification() const { return ramification_; }
    /// m for hypersurfaces (base field Q(zeta_m)), 1 otherwise.
    int base_order() const { return base_order_; }
    /// Dimension of the zero-eigenvalue block (m - 1 for hypersurfaces).
    int zero_block() const { return base_order_ > 1 ? base_order_ - 1 : 0; }
    /// Total dimension N.
    int dimension() const { return ramification_ + zero_block(); }

    /// "projective(n=3)" style tag.
    std::string describe() const;

private:
    explicit QdeProblem(Family f);
    Family family_;
    int ramification_ = 0;
    int base_order_ = 1;
};

}  // namespace stokes
