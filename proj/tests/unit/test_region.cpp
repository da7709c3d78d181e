#include <doctest.h>

#include <cmath>

#include "radwave/constants.hpp"
#include "radwave/errors.hpp"
#include "radwave/region.hpp"

using namespace radwave;

TEST_CASE("sigma1 uses the delta of m = n / 2") {
    for (int n = 4; n <= 9; ++n) {
        const Region reg = sigma1_region(n, 2.0);
        CHECK(reg.delta == doctest::Approx(lemma_constants(n / 2).delta));
        CHECK(reg.kind == RegionKind::Sigma1);
    }
    CHECK_THROWS_AS(sigma1_region(3, 1.0), DomainError);
    CHECK_THROWS_AS(sigma2_region(4, 1.0), DomainError);
    CHECK_THROWS_AS(sigma2_region(3, 0.0), DomainError);
}

TEST_CASE("membership follows the defining inequalities") {
    const Region s1 = sigma1_region(4, 1.0);  // delta = 2
    CHECK(s1.contains(9.0, 3.0));
    CHECK_FALSE(s1.contains(9.0, 3.1));   // t > r / (1 + delta)
    CHECK_FALSE(s1.contains(1.2, 0.35));  // r - t < R
    CHECK(s1.t_max(9.0) == doctest::Approx(3.0));
    const Region s2 = sigma2_region(3, 1.0);
    CHECK(s2.contains(9.0, 5.0));
    CHECK_FALSE(s2.contains(9.0, 5.1));
    CHECK(s2.t_max(2.5) == doctest::Approx(1.5));
}

TEST_CASE("grid points lie in the region and refinement keeps them there") {
    for (int n : {4, 5, 7}) {
        RegionGrid g = make_grid(sigma1_region(n, 1.0), 8, 8);
        for (int level = 0; level < 2; ++level) {
            std::size_t inside = 0;
            for (const auto& p : g.points) {
                CHECK(g.region.contains(p.r, p.t));
                if (p.in_region) ++inside;
                CHECK(p.t > 0.0);
            }
            CHECK(inside == g.points.size());
            const RegionGrid finer = refine(g);
            CHECK(finer.n_r == 2 * g.n_r);
            CHECK(finer.n_t == 2 * g.n_t);
            CHECK(finer.points.size() >= g.points.size());
            g = finer;
        }
    }
    const RegionGrid low = make_grid(sigma2_region(2, 1.0), 8, 8);
    for (const auto& p : low.points) CHECK(low.region.contains(p.r, p.t));
}

TEST_CASE("characteristic triangles of region points stay in the region") {
    const Region reg = sigma1_region(5, 1.0);
    const RegionGrid g = make_grid(reg, 6, 6);
    for (const auto& p : g.points) CHECK(triangle_in_region(reg, p.r, p.t));
    CHECK_THROWS_AS(make_grid(reg, 0, 4), ConfigError);
}
