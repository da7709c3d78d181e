#include <doctest.h>

#include <cmath>
#include <numbers>

#include "radwave/errors.hpp"
#include "radwave/quadrature.hpp"

using namespace radwave;

TEST_CASE("gauss-legendre is exact for polynomials of degree 2n-1") {
    for (int n : {1, 4, 16, 64}) {
        const auto rule = reference_rule(QuadRule::GaussLegendre, n);
        for (int deg = 0; deg <= 2 * n - 1; deg += std::max(1, n / 4)) {
            double s = 0.0;
            for (std::size_t i = 0; i < rule->nodes.size(); ++i) {
                s += rule->weights[i] * std::pow(rule->nodes[i], deg);
            }
            const double exact = deg % 2 ? 0.0 : 2.0 / (deg + 1);
            CHECK(s == doctest::Approx(exact).scale(1.0).epsilon(1e-13));
        }
    }
}

TEST_CASE("mapped rule integrates on an interval") {
    const MappedRule r = map_rule(*reference_rule(QuadRule::GaussLegendre, 32), 1.0, 3.0);
    double s = 0.0;
    for (std::size_t i = 0; i < r.nodes.size(); ++i) s += r.weights[i] * std::exp(r.nodes[i]);
    CHECK(s == doctest::Approx(std::exp(3.0) - std::exp(1.0)).epsilon(1e-14));
}

TEST_CASE("eta and xi substitutions remove endpoint singularities") {
    for (QuadRule rule : {QuadRule::GaussLegendre, QuadRule::GaussChebyshevType1}) {
        const double tol = rule == QuadRule::GaussLegendre ? 1e-12 : 1e-3;
        const MappedRule eta = eta_rule(rule, 64);
        double s = 0.0;
        for (std::size_t i = 0; i < eta.nodes.size(); ++i) s += eta.weights[i];
        CHECK(s == doctest::Approx(1.0).epsilon(tol));

        const MappedRule xi = xi_rule(rule, 64);
        double a = 0.0, b = 0.0;
        for (std::size_t i = 0; i < xi.nodes.size(); ++i) {
            a += xi.weights[i];
            b += xi.weights[i] * xi.nodes[i];
        }
        // integral of xi^k / sqrt(xi (1 - xi)) over [0, 1]
        CHECK(a == doctest::Approx(std::numbers::pi).epsilon(tol));
        CHECK(b == doctest::Approx(std::numbers::pi / 2).epsilon(tol));
    }
}

TEST_CASE("spec validation") {
    QuadratureSpec q;
    CHECK_NOTHROW(q.validate());
    q.nodes_eta = 4;
    CHECK_THROWS_AS(q.validate(), ConfigError);
    const QuadratureSpec s = QuadratureSpec{}.scaled(2.0);
    CHECK(s.nodes_lambda == 512);
}
