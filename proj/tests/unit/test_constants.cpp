#include <doctest.h>

#include <cmath>

#include "radwave/constants.hpp"
#include "radwave/errors.hpp"

using namespace radwave;

TEST_CASE("m = 2 constants are exact") {
    const LemmaConstants c = lemma_constants(2);
    CHECK(c.eta_m == 1.0);
    CHECK(c.zeta_m == 1.0);
    CHECK(c.delta == 2.0);
    CHECK(c.c1m == 2.0);
}

TEST_CASE("found widths satisfy the endpoint conditions and shrink with m") {
    double prev_eta = 2.0, prev_zeta = 2.0;
    for (int m = 2; m <= 8; ++m) {
        const LemmaConstants c = lemma_constants(m);
        CHECK(endpoint_conditions_hold(PolyKind::Legendre, m, c.eta_m));
        CHECK(endpoint_conditions_hold(PolyKind::Chebyshev, m, c.zeta_m));
        CHECK(c.eta_m <= prev_eta);
        CHECK(c.zeta_m <= prev_zeta);
        CHECK(c.delta == doctest::Approx(std::max(2.0 / c.eta_m, 2.0 / c.zeta_m)));
        CHECK(c.c2m == doctest::Approx(m - 0.375 + 5.0 * c.zeta_m * (m - 1) * (m - 1) / 3.0));
        CHECK(c.e_m - c.c2m == doctest::Approx(0.5));
        prev_eta = c.eta_m;
        prev_zeta = c.zeta_m;
    }
}

TEST_CASE("reference values for m = 3, 4") {
    CHECK(lemma_constants(3).delta == doctest::Approx(12.9412).epsilon(1e-4));
    CHECK(lemma_constants(4).e_m == doctest::Approx(5.0867).epsilon(1e-4));
}

TEST_CASE("critical exponents") {
    CHECK(critical_decay(3.0) == doctest::Approx(1.0));
    CHECK(critical_decay(2.0) == doctest::Approx(2.0));
    for (int n = 2; n <= 9; ++n) {
        const double p = strauss_exponent(n);
        CHECK(std::abs((n - 1) * p * p - (n + 1) * p - 2) < 1e-12);
        CHECK(p > 1.0);
    }
    CHECK(strauss_exponent(3) == doctest::Approx(1.0 + std::sqrt(2.0)));
    CHECK_THROWS_AS(critical_decay(1.0), PreconditionError);
}

TEST_CASE("dimension classification") {
    CHECK(Dimension::from_n(2).low);
    CHECK(Dimension::from_n(3).low);
    CHECK_FALSE(Dimension::from_n(4).odd);
    CHECK(Dimension::from_n(7).odd);
    CHECK(Dimension::from_n(7).m == 3);
    CHECK_THROWS_AS(lemma_constants(1), DomainError);
}
