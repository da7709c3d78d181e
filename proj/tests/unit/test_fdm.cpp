#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "oracles.hpp"
#include "radwave/errors.hpp"
#include "radwave/fdm.hpp"
#include "radwave/freewave.hpp"

using namespace radwave;

namespace {

double manufactured_error(int n, double dr) {
    FdmConfig cfg;
    cfg.n = n;
    cfg.r_max = 8.0;
    cfg.dr = dr;
    cfg.t_end = 1.0;
    cfg.source = [n](double r, double t) { return oracle::manufactured_source(n, r, t); };
    RadialProfile data;
    data.f = [](double r) { return oracle::manufactured_u(r, 0.0); };
    data.g = [](double r) { return std::exp(-r * r); };
    const FdmResult res = solve(data, cfg);
    double err = 0.0;
    for (std::size_t i = 0; i < res.r.size(); ++i) {
        err =
            std::max(err, std::abs(res.u_final[i] - oracle::manufactured_u(res.r[i], res.t_final)));
    }
    return err;
}

}  // namespace

TEST_CASE("constant data is preserved exactly") {
    FdmConfig cfg;
    cfg.n = 5;
    cfg.r_max = 10.0;
    cfg.dr = 0.05;
    cfg.t_end = 2.0;
    const FdmResult res = solve(constant_profile(3.0), cfg);
    // The Dirichlet boundary holds the initial value, so the whole field stays put.
    for (double u : res.u_final) CHECK(u == 3.0);
}

TEST_CASE("manufactured solution converges at second order") {
    for (int n : {2, 3, 5}) {
        const double e1 = manufactured_error(n, 0.04);
        const double e2 = manufactured_error(n, 0.02);
        const double order = std::log2(e1 / e2);
        CHECK(order >= 1.8);
    }
}

TEST_CASE("discrete energy is conserved for homogeneous problems") {
    FdmConfig cfg;
    cfg.n = 4;
    cfg.r_max = 30.0;
    cfg.dr = 0.02;
    cfg.t_end = 5.0;
    const FdmResult res = solve(gaussian_profile(1.0, 8.0, 1.0, 0.5), cfg);
    CHECK(res.status == FdmStatus::Completed);
    CHECK(res.energy_drift() < 1e-3);
}

TEST_CASE("agreement with the representation formula") {
    FdmConfig cfg;
    cfg.n = 5;
    cfg.r_max = 20.0;
    cfg.dr = 0.01;
    cfg.t_end = 2.0;
    const RadialProfile data = gaussian_profile(1.0, 6.0, 1.0, 0.5);
    const Certificate ok = compare_with_representation(data, 2, {{5.0, 1.0}, {7.0, 2.0}}, cfg);
    CHECK(ok.certified());
    const Certificate wrong = compare_with_representation(data, 3, {{5.0, 1.0}, {7.0, 2.0}}, cfg);
    CHECK_FALSE(wrong.certified());
}

TEST_CASE("comparison principle with a nonnegative nonlinearity") {
    FdmConfig cfg;
    cfg.n = 3;
    cfg.r_max = 20.0;
    cfg.dr = 0.02;
    cfg.t_end = 2.0;
    const RadialProfile data = gaussian_profile(1.0, 5.0, 1.0, 0.5);
    const FdmResult lin = solve(data, cfg);
    cfg.F = [](double u) { return u > 0 ? u * u : 0.0; };
    const FdmResult non = solve(data, cfg);
    for (std::size_t i = 0; i < lin.u_final.size(); ++i) {
        CHECK(non.u_final[i] >= lin.u_final[i] - 5 * cfg.dr * cfg.dr);
    }
}

TEST_CASE("cutoff is reported, not a blow-up time") {
    FdmConfig cfg;
    cfg.n = 3;
    cfg.r_max = 20.0;
    cfg.dr = 0.05;
    cfg.t_end = 10.0;
    cfg.blowup_cutoff = 1e3;
    cfg.F = [](double u) { return u > 0 ? u * u * u : 0.0; };
    const FdmResult res = solve(gaussian_profile(5.0, 0.0, 2.0, 5.0), cfg);
    CHECK(res.status == FdmStatus::CutoffHit);
    CHECK(res.t_cut > 0.0);
    CHECK(res.t_cut < 10.0);
}

TEST_CASE("configuration validation and snapshots") {
    FdmConfig cfg;
    cfg.cfl = 0.95;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg.cfl = 0.5;
    cfg.r_max = 10.0;
    cfg.probes = {{9.5, 0.8}};
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg.probes.clear();
    cfg.dr = 0.1;
    cfg.snapshot_times = {0.0, 0.5};
    const FdmResult res = solve(gaussian_profile(1.0, 3.0, 1.0, 0.0), cfg);
    REQUIRE(res.snapshots.size() == 2);
    const std::string csv = res.snapshots_csv();
    CHECK(csv.rfind("r,t,u\n", 0) == 0);
}
