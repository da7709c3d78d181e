// Acceptance suite: one PASS/FAIL line per criterion.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "radwave/assumptions.hpp"
#include "radwave/blowup.hpp"
#include "radwave/constants.hpp"
#include "radwave/fdm.hpp"
#include "radwave/freewave.hpp"
#include "radwave/polynomials.hpp"
#include "radwave/verify.hpp"

using namespace radwave;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail << " FAILED(" << what << ")";
        }
    }
};

double rel_err(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

Outcome constants_criterion() {
    Outcome o;
    double worst = 0.0;
    for (int m = 2; m <= 8; ++m) {
        const EndpointDerivatives e = poly_endpoint_derivatives(m);
        worst = std::max({worst, rel_err(e.p1, m * (m - 1) / 2.0),
                          rel_err(e.p2, (m - 2.0) * (m - 1.0) * m * (m + 1.0) / 8.0),
                          rel_err(e.t1, (m - 1.0) * (m - 1.0))});
    }
    o.require(worst <= 1e-10, "endpoint derivatives");
    const LemmaConstants c2 = lemma_constants(2);
    o.require(c2.eta_m == 1.0 && c2.zeta_m == 1.0, "eta_2 = zeta_2 = 1");

    double ode = 0.0;
    for (int m = 2; m <= 8; ++m) {
        const int k = m - 1;
        for (int i = 0; i < 1000; ++i) {
            const double z = -1.0 + 2.0 * (i + 0.5) / 1000.0;
            const PolyValues t = poly_eval_all({PolyKind::Chebyshev, k}, z);
            ode = std::max(ode, std::abs((1 - z * z) * t.d2 - z * t.d1 + k * k * t.value));
        }
    }
    o.require(ode <= 1e-9, "chebyshev ODE");
    o.detail << " endpoint_rel_err=" << worst << " ode_residual=" << ode;
    return o;
}

Outcome representation_criterion() {
    Outcome o;
    double zero = 0.0, constant = 0.0;
    for (int n = 2; n <= 7; ++n) {
        for (double t : {0.5, 2.0}) {
            zero = std::max(zero, std::abs(free_solution(zero_profile(), n, 5.0, t).value));
            constant = std::max(
                constant, std::abs(free_solution(constant_profile(1.7), n, 5.0, t).value - 1.7));
        }
    }
    o.require(zero == 0.0, "zero data");
    o.require(constant <= 1.7e-6, "constant data");

    const RadialProfile data = gaussian_profile(1.0, 6.0, 1.0, 0.5);
    std::vector<std::pair<double, double>> points;
    for (double r : {4.0, 5.0, 6.0, 7.0, 8.0}) {
        for (double f : {0.25, 0.5, 0.75, 1.0}) {
            const double t = f * r / 3.0;  // Sigma1 with delta = 2, R = 1
            points.emplace_back(r, t);
        }
    }
    FdmConfig cfg;
    cfg.r_max = 20.0;
    cfg.dr = 0.01;
    cfg.t_end = 3.0;
    std::size_t checked = 0;
    for (int n : {4, 5}) {
        cfg.n = n;
        const Certificate c = compare_with_representation(data, n / 2, points, cfg);
        o.require(c.certified(), "FDM agreement n=" + std::to_string(n));
        checked += c.samples;
    }
    double huygens = 0.0;
    const RadialProfile narrow = gaussian_profile(1.0, 6.0, 0.2, 1.0);
    for (int n : {5, 7, 9}) {
        huygens = std::max(huygens, std::abs(free_solution(narrow, n, 14.0, 5.0).value));
    }
    o.require(huygens <= 1e-8, "Huygens");
    o.detail << " constant_err=" << constant << " fdm_points=" << checked
             << " huygens_max=" << huygens;
    return o;
}

Outcome certificates_criterion() {
    Outcome o;
    double worst = 0.0;
    for (int m : {2, 3, 4}) {
        const RegionGrid grid = make_sigma1_grid(sigma1_region(2 * m, 1.0), 64, 64);
        const Certificate certs[] = {verify_theta_bound(m, grid, 128),
                                     verify_dtheta_bounds(m, grid, 128),
                                     verify_kernel_inequality(m, unit_weight(), grid, 128)};
        for (const auto& c : certs) {
            o.require(c.certified() && c.worst_margin >= -1e-10,
                      c.inequality_id + " m=" + std::to_string(m));
            worst = std::min(worst, c.worst_margin);
        }
    }
    const Certificate nf = verify_N_factorization(1000, 1);
    o.require(nf.certified(), "N factorization");

    // Negative controls.
    RegionGrid tampered = make_sigma1_grid(sigma1_region(4, 1.0), 64, 64);
    tampered.region.delta *= 4.0;
    const std::size_t theta_neg = verify_theta_bound(2, tampered, 128).violation_count;
    Weight flipped;
    flipped.name = "flipped";
    flipped.w = [](double) { return -1.0; };
    const std::size_t kernel_neg =
        verify_kernel_inequality(2, flipped, make_sigma1_grid(sigma1_region(4, 1.0), 16, 16), 32,
                                 1e-10, false)
            .violation_count;
    const DataFamily fam = odd2_family(2, 2.0, 1.0, 1.0);
    const RadialProfile neg = combine(-1.0, fam.profile, 0.0, zero_profile());
    const std::size_t data_neg =
        check_assumption(neg, fam.assumptions, 2, 100.0).violation_count +
        verify_lower_bound_odd(neg, fam.assumptions, 2,
                               make_sigma1_grid(sigma1_region(5, 1.0), 8, 8))
            .violation_count;
    o.require(theta_neg > 0 && kernel_neg > 0 && data_neg > 0, "negative controls");
    o.detail << " worst_margin=" << worst << " negatives(theta,kernel,data)=" << theta_neg << ","
             << kernel_neg << "," << data_neg;
    return o;
}

Outcome lower_bound_criterion() {
    Outcome o;
    std::size_t points = 0;
    double worst = std::numeric_limits<double>::infinity();
    auto note = [&](const Certificate& c, const std::string& what, std::size_t n_points) {
        o.require(c.certified(), what);
        worst = std::min(worst, c.worst_margin);
        points += n_points;
    };
    for (int n : {5, 4}) {
        const DataFamily fam = default_family(n, 2.0, 1.0, 1.0);
        const RegionGrid grid = make_sigma1_grid(sigma1_region(n, 1.0), 32, 32);
        note(check_assumption(fam.profile, fam.assumptions, n / 2, 100.0), "assumption", 0);
        const Certificate c = n % 2
                                  ? verify_lower_bound_odd(fam.profile, fam.assumptions, 2, grid)
                                  : verify_lower_bound_even(fam.profile, fam.assumptions, 2, grid);
        note(c, "lower bound n=" + std::to_string(n), grid.points.size());
    }
    for (int n : {2, 3}) {
        const DataFamily fam = default_family(n, 2.0, 1.0, 1.0);
        const RegionGrid grid = make_sigma2_grid(sigma2_region(n, 1.0), 32, 32);
        const QuadratureSpec q{64, 64, 64, QuadRule::GaussLegendre};
        note(verify_lower_bound_low(lift_radial(fam.profile, n), fam.assumptions, n, grid, q),
             "lower bound n=" + std::to_string(n), grid.points.size());
    }
    o.detail << " region_points=" << points << " worst_margin=" << worst;
    return o;
}

Outcome iteration_criterion() {
    Outcome o;
    IterationConfig cfg;
    cfg.n = 5;
    cfg.p = 2.0;
    cfg.A = 1.0;
    cfg.R = 100.0;
    cfg.r_apex = 1000.0;
    cfg.t_apex = 300.0;
    cfg.levels = 128;
    const std::vector<double> kappas = {0.5, 1.0, 1.5, 2.0, 3.0};
    const auto reports = kappa_sweep(cfg, kappas);
    std::vector<double> ratios;
    for (const auto& r : reports) ratios.push_back(growth_ratio(r, 30));
    for (std::size_t i = 1; i < ratios.size(); ++i) {
        o.require(ratios[i] < ratios[i - 1], "strictly decreasing ratio");
    }
    o.require(reports.front().verdict == Verdict::Diverged, "kappa=0.5 diverges");
    o.require(reports.back().verdict == Verdict::BoundedAtHorizon, "kappa=3 bounded");
    o.detail << " ratios=";
    for (std::size_t i = 0; i < ratios.size(); ++i) o.detail << (i ? "," : "") << ratios[i];
    o.detail << " diverged_at(0.5)=" << reports.front().diverged_at;
    return o;
}

Outcome duhamel_criterion() {
    Outcome o;
    const double r = 1000.0, t = 300.0;
    const IterationState s0 = make_state(5, 1.0, 0.25, r, t, 512);
    const Nonlinearity F = Nonlinearity::power(1.0, 2.0);
    const IterationState s1 = duhamel_apply_high(s0, 2, F);
    auto seed = [](double lam, double tau) { return 0.25 * tau / std::pow(1.0 + lam + tau, 2.0); };
    const double oracle = oracle::duhamel_riemann(seed, F.F, 2, r, t, 1000, 1000);
    const double increment = s1.apex_value() - s0.apex_value();
    const double err = rel_err(increment, oracle);
    o.require(err <= 1e-4, "relative error");
    o.detail << " grid=" << increment << " oracle=" << oracle << " rel_err=" << err;
    return o;
}

double manufactured_error(int n, double dr) {
    FdmConfig cfg;
    cfg.n = n;
    cfg.r_max = 8.0;
    cfg.dr = dr;
    cfg.t_end = 1.0;
    cfg.source = [n](double rr, double tt) { return oracle::manufactured_source(n, rr, tt); };
    RadialProfile data;
    data.f = [](double rr) { return oracle::manufactured_u(rr, 0.0); };
    data.g = [](double rr) { return std::exp(-rr * rr); };
    const FdmResult res = solve(data, cfg);
    double err = 0.0;
    for (std::size_t i = 0; i < res.r.size(); ++i) {
        err =
            std::max(err, std::abs(res.u_final[i] - oracle::manufactured_u(res.r[i], res.t_final)));
    }
    return err;
}

Outcome fdm_criterion() {
    Outcome o;
    FdmConfig cfg;
    cfg.n = 5;
    cfg.r_max = 20.0;
    cfg.dr = 0.02;
    cfg.t_end = 3.0;
    const FdmResult flat = solve(constant_profile(2.0), cfg);
    o.require(
        std::all_of(flat.u_final.begin(), flat.u_final.end(), [](double u) { return u == 2.0; }),
        "constant preservation");

    double min_order = 1e9;
    for (int n : {2, 3, 5, 7}) {
        const double e1 = manufactured_error(n, 0.04);
        const double e2 = manufactured_error(n, 0.02);
        const double e3 = manufactured_error(n, 0.01);
        min_order = std::min({min_order, std::log2(e1 / e2), std::log2(e2 / e3)});
    }
    o.require(min_order >= 1.8, "convergence order");

    double drift = 0.0;
    for (int n : {3, 4, 5}) {
        FdmConfig e;
        e.n = n;
        e.r_max = 30.0;
        e.dr = 0.01;
        e.t_end = 5.0;
        drift = std::max(drift, solve(gaussian_profile(1.0, 8.0, 1.0, 0.5), e).energy_drift());
    }
    o.require(drift < 1e-3, "energy drift");
    o.detail << " min_order=" << min_order << " energy_drift=" << drift;
    return o;
}

}  // namespace

int main() {
    std::setvbuf(stdout, nullptr, _IONBF, 0);
    struct Criterion {
        const char* name;
        std::function<Outcome()> run;
    };
    const Criterion criteria[] = {
        {"constants", constants_criterion},
        {"representation exactness", representation_criterion},
        {"inequality certificates", certificates_criterion},
        {"lower bounds", lower_bound_criterion},
        {"iteration threshold behavior", iteration_criterion},
        {"duhamel oracle equivalence", duhamel_criterion},
        {"fdm quality gates", fdm_criterion},
    };
    int failed = 0;
    int index = 0;
    for (const auto& c : criteria) {
        ++index;
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail << " exception: " << e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (!o.pass) ++failed;
        std::printf("[%s] %d %s:%s (%.1fs)\n", o.pass ? "PASS" : "FAIL", index, c.name,
                    o.detail.str().c_str(), secs);
    }
    std::printf("%d/%d criteria passed\n", index - failed, index);
    return failed == 0 ? 0 : 1;
}
