#include <doctest.h>

#include <cmath>

#include "radwave/assumptions.hpp"
#include "radwave/constants.hpp"
#include "radwave/errors.hpp"

using namespace radwave;

TEST_CASE("built-in families satisfy their assumptions") {
    for (int m : {2, 3, 4}) {
        CHECK(check_assumption(odd1_family(m, 2.0, 1.0, 1.0).profile,
                               odd1_family(m, 2.0, 1.0, 1.0).assumptions, m, 100.0)
                  .certified());
        const DataFamily o2 = odd2_family(m, 2.0, 1.0, 1.0);
        CHECK(check_assumption(o2.profile, o2.assumptions, m, 100.0).certified());
        const DataFamily ev = even_family(m, 2.0, 1.0, 1.0);
        CHECK(check_assumption(ev.profile, ev.assumptions, m, 100.0).certified());
    }
    const DataFamily lo = low_family(2.0, 0.5, 1.0);
    CHECK(check_assumption(lo.profile, lo.assumptions, 2, 100.0).certified());
}

TEST_CASE("closed-form G is the smallest admissible velocity amplitude") {
    // Shrinking G below the family value by more than the margin breaks the assumption.
    const DataFamily o2 = odd2_family(2, 2.0, 1.0, 1.0, 1.0, 1.0, 0.1);
    RadialProfile weak = decay_profile(1.0, o2.G / 1.1 * 0.9, 1.0);
    CHECK_FALSE(check_assumption(weak, o2.assumptions, 2, 100.0).certified());
}

TEST_CASE("parameter preconditions") {
    DataAssumptions a;
    a.p = 2.0;
    a.kappa = 2.0;  // equals kappa0
    CHECK_THROWS_AS(check_parameters(a), PreconditionError);
    a.kappa = 1.0;
    CHECK_NOTHROW(check_parameters(a));
    a.R = 0.0;
    CHECK_THROWS_AS(check_parameters(a), PreconditionError);
    CHECK_THROWS_AS(parse_assumption_kind("odd3"), ConfigError);
    CHECK(parse_assumption_kind(to_string(AssumptionKind::Even)) == AssumptionKind::Even);
}

TEST_CASE("seed constants") {
    const DataFamily o1 = odd1_family(3, 2.0, 1.0, 1.0, 2.0);
    CHECK(seed_constant(o1.assumptions, 3) ==
          doctest::Approx(0.5 * 2.0 * (1.0 + std::pow(2.0 / 3.0, 3))));
    const DataFamily o2 = odd2_family(2, 2.0, 1.0, 1.0, 1.0, 3.0);
    CHECK(seed_constant(o2.assumptions, 2) == doctest::Approx(0.75));
    const DataFamily lo = low_family(2.0, 1.0, 1.0, 1.0, 0.4);
    CHECK(seed_constant(lo.assumptions, 1) == doctest::Approx(0.4));
}
