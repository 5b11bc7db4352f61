#include "stokes/problem.hpp"

#include <numeric>
#include <stdexcept>

namespace stokes {

QdeProblem::QdeProblem(Family f) : family_(std::move(f))
{
    if (const auto* p = std::get_if<Projective>(&family_)) {
        ramification_ = p->n;
    } else if (const auto* w = std::get_if<Weighted>(&family_)) {
        ramification_ = std::accumulate(w->weights.begin(), w->weights.end(), 0);
    } else {
        const auto& h = std::get<Hypersurface>(family_);
        ramification_ = h.n;
        base_order_ = h.m;
    }
}

QdeProblem QdeProblem::projective(int n)
{
    if (n < 2) {
        throw std::invalid_argument("projective: n must be at least 2");
    }
    return QdeProblem(Projective{n});
}

QdeProblem QdeProblem::weighted(std::vector<int> weights)
{
    if (weights.empty()) {
        throw std::invalid_argument("weighted: at least one weight required");
    }
    int g = 0;
    for (int w : weights) {
        if (w < 1) {
            throw std::invalid_argument("weighted: weights must be positive");
        }
        g = std::gcd(g, w);
    }
    if (g != 1) {
        throw std::invalid_argument("weighted: gcd of the weights must be 1");
    }
    int sum = std::accumulate(weights.begin(), weights.end(), 0);
    if (sum < 2) {
        throw std::invalid_argument("weighted: sum of the weights must be at least 2");
    }
    return QdeProblem(Weighted{std::move(weights)});
}

QdeProblem QdeProblem::hypersurface(int n, int m)
{
    if (n < 1) {
        throw std::invalid_argument("hypersurface: n must be at least 1");
    }
    if (m < 2) {
        throw std::invalid_argument("hypersurface: m must be at least 2");
    }
    return QdeProblem(Hypersurface{n, m});
}

std::string QdeProblem::describe() const
{
    if (const auto* p = std::get_if<Projective>(&family_)) {
        return "projective(n=" + std::to_string(p->n) + ")";
    }
    if (const auto* w = std::get_if<Weighted>(&family_)) {
        std::string s = "weighted(";
        for (std::size_t i = 0; i < w->weights.size(); ++i) {
            s += (i ? "," : "") + std::to_string(w->weights[i]);
        }
        return s + ")";
    }
    const auto& h = std::get<Hypersurface>(family_);
    return "hypersurface(n=" + std::to_string(h.n) + ",m=" + std::to_string(h.m) + ")";
}

}  // namespace stokes
