#include <doctest.h>

#include <cmath>

#include "radwave/errors.hpp"
#include "radwave/profile.hpp"

using namespace radwave;

TEST_CASE("analytic derivatives agree with finite differences") {
    CHECK(derivative_consistency(gaussian_profile(1.0, 6.0, 1.5, 0.5), 0.0, 12.0) < 1e-6);
    CHECK(derivative_consistency(decay_profile(1.0, 2.0, 0.7), 0.0, 50.0) < 1e-6);
    CHECK(derivative_consistency(inverse_square_velocity(), 0.0, 50.0) < 1e-6);
}

TEST_CASE("f_prime falls back to a central difference") {
    RadialProfile p = gaussian_profile(1.0, 3.0, 1.0, 0.0);
    const double exact = p.df(2.5);
    p.df = nullptr;
    bool fallback = false;
    CHECK(p.f_prime(2.5, &fallback) == doctest::Approx(exact).epsilon(1e-7));
    CHECK(fallback);
}

TEST_CASE("combine is linear") {
    const RadialProfile a = gaussian_profile(1.0, 4.0, 1.0, 1.0);
    const RadialProfile b = decay_profile(2.0, 1.0, 0.5);
    const RadialProfile c = combine(2.0, a, -3.0, b);
    for (double r : {0.5, 3.0, 7.0}) {
        CHECK(c.f(r) == doctest::Approx(2.0 * a.f(r) - 3.0 * b.f(r)));
        CHECK(c.g(r) == doctest::Approx(2.0 * a.g(r) - 3.0 * b.g(r)));
        CHECK(c.df(r) == doctest::Approx(2.0 * a.df(r) - 3.0 * b.df(r)));
    }
}

TEST_CASE("lifted profile gradient is radial") {
    const RadialProfile p = gaussian_profile(1.0, 2.0, 1.0, 0.0);
    const CartesianProfile c = lift_radial(p, 3);
    const Point3 x{1.0, 2.0, 2.0};
    const Point3 g = c.grad_f(x);
    CHECK(norm(g) == doctest::Approx(std::abs(p.df(3.0))));
    CHECK(g[1] / g[0] == doctest::Approx(2.0));
    CHECK(c.f(x) == doctest::Approx(p.f(3.0)));
    CHECK_THROWS_AS(lift_radial(p, 4), DomainError);
    CHECK_THROWS_AS(gaussian_profile(1.0, 0.0, 0.0, 0.0), DomainError);
}
