#pragma once

#include <memory>
#include <span>
#include <vector>

namespace radwave {

/// Which rule integrates the smooth integrands obtained after the
/// trigonometric substitutions. GaussChebyshevType1 uses the Chebyshev
/// type-1 nodes with weights pi/n * sqrt(1 - x^2), i.e. the midpoint rule in
/// the angle x = cos(theta).
enum class QuadRule { GaussLegendre, GaussChebyshevType1 };

struct QuadratureSpec {
    int nodes_lambda = 256;
    int nodes_eta = 128;
    int nodes_xi = 128;
    QuadRule rule = QuadRule::GaussLegendre;

    /// Every node count multiplied by `factor` (and divided when factor < 1),
    /// never dropping below 8.
    QuadratureSpec scaled(double factor) const;
    void validate() const;
};

/// Nodes and weights on [-1, 1].
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Rules are computed once per (rule, n) and cached for the process lifetime.
std::shared_ptr<const QuadratureRule> reference_rule(QuadRule rule, int n);

/// Nodes/weights mapped to [a, b].
struct MappedRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

MappedRule map_rule(const QuadratureRule& ref, double a, double b);

/// Rule for the integral of h(eta) eta / sqrt(1 - eta^2) over [0, 1], built by
/// eta = sin(phi): nodes sin(phi_i), weights sin(phi_i) w_i.
MappedRule eta_rule(QuadRule rule, int n);

/// Rule for the integral of h(xi) / sqrt(xi (1 - xi)) over [0, 1], built by
/// xi = sin^2(psi): nodes sin^2(psi_i), weights 2 w_i.
MappedRule xi_rule(QuadRule rule, int n);

}  // namespace radwave
