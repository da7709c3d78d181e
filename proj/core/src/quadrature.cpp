#include "radwave/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <string>
#include <utility>

#include "radwave/errors.hpp"

namespace radwave {
namespace {

QuadratureRule gauss_legendre(int n) {
    QuadratureRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 1; k < n; ++k) {
                const double p2 = ((2.0 * k + 1.0) * x * p1 - k * p0) / (k + 1.0);
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        // Recompute the derivative at the converged node.
        double p0 = 1.0;
        double p1 = x;
        for (int k = 1; k < n; ++k) {
            const double p2 = ((2.0 * k + 1.0) * x * p1 - k * p0) / (k + 1.0);
            p0 = p1;
            p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
    return rule;
}

QuadratureRule gauss_chebyshev_plain(int n) {
    QuadratureRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int k = 0; k < n; ++k) {
        const double theta = std::numbers::pi * (2.0 * (n - 1 - k) + 1.0) / (2.0 * n);
        rule.nodes[k] = std::cos(theta);
        rule.weights[k] = std::numbers::pi / n * std::sin(theta);
    }
    return rule;
}

}  // namespace

QuadratureSpec QuadratureSpec::scaled(double factor) const {
    auto scale = [factor](int n) { return std::max(8, static_cast<int>(std::lround(n * factor))); };
    QuadratureSpec q = *this;
    q.nodes_lambda = scale(nodes_lambda);
    q.nodes_eta = scale(nodes_eta);
    q.nodes_xi = scale(nodes_xi);
    return q;
}

void QuadratureSpec::validate() const {
    if (nodes_lambda < 8 || nodes_eta < 8 || nodes_xi < 8) {
        throw ConfigError("quadrature node counts must be >= 8");
    }
}

std::shared_ptr<const QuadratureRule> reference_rule(QuadRule rule, int n) {
    if (n < 1) throw ConfigError("quadrature needs at least one node");
    static std::mutex mutex;
    static std::map<std::pair<int, int>, std::shared_ptr<const QuadratureRule>> cache;
    const auto key = std::make_pair(static_cast<int>(rule), n);
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    auto built = std::make_shared<const QuadratureRule>(
        rule == QuadRule::GaussLegendre ? gauss_legendre(n) : gauss_chebyshev_plain(n));
    std::lock_guard lock(mutex);
    return cache.emplace(key, std::move(built)).first->second;
}

MappedRule map_rule(const QuadratureRule& ref, double a, double b) {
    MappedRule out;
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    out.nodes.reserve(ref.nodes.size());
    out.weights.reserve(ref.nodes.size());
    for (std::size_t i = 0; i < ref.nodes.size(); ++i) {
        out.nodes.push_back(mid + half * ref.nodes[i]);
        out.weights.push_back(half * ref.weights[i]);
    }
    return out;
}

MappedRule eta_rule(QuadRule rule, int n) {
    MappedRule out = map_rule(*reference_rule(rule, n), 0.0, std::numbers::pi / 2.0);
    for (std::size_t i = 0; i < out.nodes.size(); ++i) {
        const double s = std::sin(out.nodes[i]);
        out.nodes[i] = s;
        out.weights[i] *= s;
    }
    return out;
}

MappedRule xi_rule(QuadRule rule, int n) {
    MappedRule out = map_rule(*reference_rule(rule, n), 0.0, std::numbers::pi / 2.0);
    for (std::size_t i = 0; i < out.nodes.size(); ++i) {
        const double s = std::sin(out.nodes[i]);
        out.nodes[i] = s * s;
        out.weights[i] *= 2.0;
    }
    return out;
}

}  // namespace radwave
