#include "radwave/verify.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "radwave/constants.hpp"
#include "radwave/errors.hpp"
#include "radwave/parallel.hpp"
#include "radwave/polynomials.hpp"

namespace radwave {
namespace {

constexpr double kIdentityTol = 1e-12;
constexpr double kFdRelTol = 1e-6;

// Runs `per_point` over the grid points in parallel; partial certificates are
// merged in point order so stored violations are deterministic.
template <typename PerPoint>
Certificate sweep(const RegionGrid& grid, Certificate proto, PerPoint per_point) {
    const std::size_t n = grid.points.size();
    const std::size_t workers = std::min<std::size_t>(worker_count(), std::max<std::size_t>(n, 1));
    std::vector<Certificate> parts(workers,
                                   Certificate(proto.inequality_id, proto.region, proto.tolerance));
    parallel_chunks(n, [&](std::size_t b, std::size_t e, std::size_t w) {
        for (std::size_t i = b; i < e; ++i) per_point(grid.points[i], parts[w]);
    });
    for (const auto& p : parts) proto.merge(p);
    return proto;
}

void require_sigma1(const RegionGrid& grid) {
    if (grid.region.kind != RegionKind::Sigma1) throw PreconditionError("grid must lie in Sigma1");
    for (const auto& p : grid.points) {
        if (!p.in_region) throw PreconditionError("grid point outside Sigma1");
    }
}

double lattice(int i, int samples) { return static_cast<double>(i) / (samples - 1); }

// High-precision K w T as a function of t, for the finite-difference check.
long double kernel_product(int m, const Weight& weight, long double r, long double t,
                           long double eta, long double xi) {
    const long double a = t * eta;
    const long double lt = r + a - 2.0L * a * xi;
    long double lt_m = 1.0L;
    for (int i = 0; i < m; ++i) lt_m *= lt;
    const long double k = lt_m / (std::sqrt(r + a - a * xi) * std::sqrt(r - xi * a));
    const long double th = (lt * lt + (r - a) * (r + a)) / (2.0L * r * lt);
    // Chebyshev recurrence in long double.
    long double t0 = 1.0L;
    long double t1 = th;
    long double tv = m - 1 == 0 ? t0 : t1;
    for (int k2 = 2; k2 <= m - 1; ++k2) {
        const long double t2 = 2.0L * th * t1 - t0;
        t0 = t1;
        t1 = t2;
        tv = t2;
    }
    return k * static_cast<long double>(weight.w(static_cast<double>(lt))) * tv;
}

}  // namespace

Certificate verify_theta_bound(int m, const RegionGrid& grid, int lambda_samples, double tol) {
    require_sigma1(grid);
    if (lambda_samples < 2) throw PreconditionError("need at least 2 lambda samples");
    const double delta = grid.region.delta;
    const double bound = delta / (delta + 2.0);
    Certificate proto("theta-bound", grid.region.describe(), tol);
    proto.constants["m"] = m;
    proto.constants["delta"] = delta;
    proto.constants["bound"] = bound;
    return sweep(grid, proto, [&](const RegionPoint& p, Certificate& c) {
        const double r = p.r;
        const double t = p.t;
        const double ratio = (r - t) / (r + t);
        double sampled_min = std::numeric_limits<double>::infinity();
        for (int k = 0; k < lambda_samples; ++k) {
            const double lam = (r - t) + 2.0 * t * lattice(k, lambda_samples);
            const double th = theta(lam, r, t);
            sampled_min = std::min(sampled_min, th);
            c.record(th - bound, "theta>=delta/(delta+2)",
                     [&] { return Coords{{"r", r}, {"t", t}, {"lambda", lam}}; });
            c.record(th - ratio, "theta>=(r-t)/(r+t)",
                     [&] { return Coords{{"r", r}, {"t", t}, {"lambda", lam}}; });
        }
        c.record(ratio - bound, "(r-t)/(r+t)>=delta/(delta+2)",
                 [&] { return Coords{{"r", r}, {"t", t}}; });
        const double exact_min = std::sqrt((r - t) * (r + t)) / r;
        c.record(sampled_min - exact_min, "sampled-min>=analytic-min",
                 [&] { return Coords{{"r", r}, {"t", t}}; });
    });
}

Certificate verify_N_factorization(int samples, std::uint64_t seed, double tol) {
    if (samples < 1000) throw PreconditionError("at least 1000 samples are required");
    Certificate cert("n-factorization", "r in [1e-3, 1e3], 0 < t < r, eta, xi in [0, 1]", tol);
    cert.constants["identity_tolerance"] = kIdentityTol;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int s = 0; s < samples; ++s) {
        const double r = std::pow(10.0, -3.0 + 6.0 * unit(rng));
        const double t = r * unit(rng);
        const double eta = unit(rng);
        const double xi = unit(rng);
        const double a = t * eta;
        const Coords at{{"r", r}, {"t", t}, {"eta", eta}, {"xi", xi}};

        const double scale_exp = 8.0 * a * a * xi * xi * xi +
                                 (12.0 * a * a + 8.0 * r * a) * xi * xi +
                                 (8.0 * r * a + 4.0 * a * a) * xi;
        const double e = n_expanded(r, t, eta, xi);
        const double f = n_factored(r, t, eta, xi);
        const double rel = scale_exp > 0.0 ? std::abs(e - f) / scale_exp : std::abs(e - f);
        cert.record(kIdentityTol - rel, "expanded==factored", at);

        const double lt = lambda_tilde(r, t, eta, xi);
        const double scale_def = (std::abs(2.0 * lt * (1.0 - 2.0 * xi)) + 2.0 * a) * lt +
                                 (lt * lt + r * r + a * a) * std::abs(1.0 - 2.0 * xi);
        const double d = n_definition(r, t, eta, xi);
        const double rel_def = scale_def > 0.0 ? std::abs(d - f) / scale_def : std::abs(d - f);
        cert.record(kIdentityTol - rel_def, "definition==factored", at);

        const double end_scale = std::max(r * r, 1e-300);
        cert.record(-std::abs(n_factored(r, t, eta, 0.0)), "N(xi=0)=0", at);
        cert.record(-std::abs(n_factored(r, t, eta, 1.0)), "N(xi=1)=0", at);
        cert.record(kIdentityTol - std::abs(n_expanded(r, t, eta, 1.0)) / end_scale,
                    "expanded N(xi=1)=0", at);
        cert.record(-std::abs(n_expanded(r, t, eta, 0.0)), "expanded N(xi=0)=0", at);
    }
    return cert;
}

Certificate verify_dtheta_bounds(int m, const RegionGrid& grid, int samples, double tol) {
    require_sigma1(grid);
    if (samples < 3) throw PreconditionError("need at least 3 samples per axis");
    const double zeta = lemma_constants(m).zeta_m;
    Certificate proto("dtheta-bounds", grid.region.describe(), tol);
    proto.constants["m"] = m;
    proto.constants["zeta_m"] = zeta;
    const double step = 1.0 / (samples - 1);
    return sweep(grid, proto, [&](const RegionPoint& p, Certificate& c) {
        const double r = p.r;
        const double t = p.t;
        for (int i = 0; i < samples; ++i) {
            const double eta = lattice(i, samples);
            double n_min = std::numeric_limits<double>::infinity();
            double xi_at_min = 0.0;
            for (int j = 0; j < samples; ++j) {
                const double xi = lattice(j, samples);
                const double dth = dtheta_dt(r, t, eta, xi);
                const double lt = lambda_tilde(r, t, eta, xi);
                c.record(-dth, "dtheta<=0",
                         [&] { return Coords{{"r", r}, {"t", t}, {"eta", eta}, {"xi", xi}}; });
                c.record(dth + 5.0 * zeta / (3.0 * lt), "dtheta>=-5zeta/(3lambda~)",
                         [&] { return Coords{{"r", r}, {"t", t}, {"eta", eta}, {"xi", xi}}; });
                const double nv = n_factored(r, t, eta, xi);
                if (nv < n_min) {
                    n_min = nv;
                    xi_at_min = xi;
                }
            }
            if (eta > 0.0 && t > 0.0) {
                const XiRoots roots = n_stationary_points(r, t, eta);
                auto at = [&] { return Coords{{"r", r}, {"t", t}, {"eta", eta}}; };
                c.record_strict(roots.plus - 1.0, "xi_plus>1", at);
                c.record_strict(roots.minus, "xi_minus>0", at);
                c.record_strict(1.0 - roots.minus, "xi_minus<1", at);
                c.record(step - std::abs(xi_at_min - roots.minus), "argmin N near xi_minus", at);
            }
        }
    });
}

Weight unit_weight() { return Weight{}; }

Weight power_weight(double a) {
    Weight w;
    w.name = "power";
    w.w = [a](double x) { return std::pow(1.0 + x, -a); };
    w.dw = [a](double x) { return -a * std::pow(1.0 + x, -a - 1.0); };
    return w;
}

Weight oscillating_weight() {
    Weight w;
    w.name = "oscillating";
    w.w = [](double x) { return 2.0 + std::sin(x); };
    w.dw = [](double x) { return std::cos(x); };
    return w;
}

Certificate verify_kernel_inequality(int m, const Weight& weight, const RegionGrid& grid,
                                     int samples, double tol, bool finite_difference_check) {
    require_sigma1(grid);
    if (samples < 3) throw PreconditionError("need at least 3 samples per axis");
    const LemmaConstants lc = lemma_constants(m);
    const double i5_cap = 5.0 * lc.zeta_m * (m - 1.0) * (m - 1.0) / 3.0;
    Certificate proto("kernel-inequality", grid.region.describe(), tol);
    proto.constants["m"] = m;
    proto.constants["E_m"] = lc.e_m;
    proto.constants["zeta_m"] = lc.zeta_m;
    proto.notes.push_back("margins are divided by K > 0");
    proto.notes.push_back("weight: " + weight.name);
    return sweep(grid, proto, [&](const RegionPoint& p, Certificate& c) {
        const double r = p.r;
        const double t = p.t;
        const double h = 1e-6 * t;
        for (int i = 0; i < samples; ++i) {
            const double eta = lattice(i, samples);
            for (int j = 0; j < samples; ++j) {
                const double xi = lattice(j, samples);
                const double lt = lambda_tilde(r, t, eta, xi);
                const double w = weight.w(lt);
                const double dw = weight.dw(lt);
                const KernelDerivative kd = kernel_time_derivative(m, w, dw, r, t, eta, xi);
                const double wl = w / lt;
                const double adw = std::abs(dw);
                const double half = eta * (kd.i1 + kd.i2 + kd.i3 + kd.i4) * kd.t_value;
                auto at = [&] { return Coords{{"r", r}, {"t", t}, {"eta", eta}, {"xi", xi}}; };

                c.record(kd.bracket + lc.e_m * wl + adw, "dt{KwT}>=-(E_m w/lambda~+|w'|)K", at);
                if (xi <= 0.5) c.record(half + 0.125 * wl + adw, "half-range xi<=1/2", at);
                if (xi >= 0.5) c.record(half + (m + 0.125) * wl + adw, "half-range xi>=1/2", at);
                c.record(kd.i5 + i5_cap * wl, "I5>=-5zeta(m-1)^2 w/(3lambda~)", at);

                if (finite_difference_check && t > 0.0) {
                    const long double gp = kernel_product(m, weight, r, t + h, eta, xi);
                    const long double gm = kernel_product(m, weight, r, t - h, eta, xi);
                    const double k = even_kernel(m, r, t, eta, xi);
                    const double fd = static_cast<double>((gp - gm) / (2.0L * h)) / k;
                    const double denom = std::max(std::abs(kd.bracket), wl + adw);
                    c.record(kFdRelTol - std::abs(fd - kd.bracket) / denom, "analytic-vs-fd", at);
                }
            }
        }
    });
}

double lower_rhs_odd(const RadialProfile& profile, int m, double r, double t,
                     const QuadratureSpec& q) {
    const double c1m = m * (m - 1.0);
    double value = 0.5 * (profile.f(r + t) * std::pow((r + t) / r, m) +
                          profile.f(r - t) * std::pow((r - t) / r, m));
    if (t == 0.0) return value;
    const MappedRule mr = map_rule(*reference_rule(q.rule, q.nodes_lambda), r - t, r + t);
    double acc = 0.0;
    for (std::size_t i = 0; i < mr.nodes.size(); ++i) {
        const double lam = mr.nodes[i];
        acc +=
            mr.weights[i] * std::pow(lam / r, m) * (-c1m * profile.f(lam) / lam + profile.g(lam));
    }
    return value + 0.25 * acc;
}

double lower_rhs_even(const RadialProfile& profile, int m, double r, double t,
                      const QuadratureSpec& q) {
    const double c2m = lemma_constants(m).c2m;
    const MappedRule en = eta_rule(q.rule, q.nodes_eta);
    const MappedRule xn = xi_rule(q.rule, q.nodes_xi);
    double acc = 0.0;
    for (std::size_t i = 0; i < en.nodes.size(); ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < xn.nodes.size(); ++j) {
            const double lt = lambda_tilde(r, t, en.nodes[i], xn.nodes[j]);
            const double braces =
                -c2m * profile.f(lt) / lt - std::abs(profile.f_prime(lt)) + 0.5 * profile.g(lt);
            row += xn.weights[j] * even_kernel_scaled(m, r, t, en.nodes[i], xn.nodes[j]) * braces;
        }
        acc += en.weights[i] * row;
    }
    return t * acc / std::numbers::pi;
}

double lower_rhs_low(const CartesianProfile& profile, const Point3& x, double t,
                     const QuadratureSpec& q) {
    auto phi = [&](const Point3& y) {
        return profile.f(y) / (1.0 + norm(y)) - norm(profile.grad_f(y)) + profile.g(y);
    };
    return riemann(phi, profile.dim, x, t, q);
}

Point3 sample_direction(int n) {
    if (n == 3) return {1.0 / 3.0, 2.0 / 3.0, 2.0 / 3.0};
    return {0.6, 0.8, 0.0};
}

namespace {

Certificate lower_bound_sweep(
    const std::string& id, const RegionGrid& grid, double seed_c, double kappa, double tol,
    const std::function<std::pair<double, double>(double, double)>& eval) {
    Certificate proto(id, grid.region.describe(), tol);
    proto.constants["seed_constant"] = seed_c;
    return sweep(grid, proto, [&](const RegionPoint& p, Certificate& c) {
        const auto [u, rhs] = eval(p.r, p.t);
        const double seed = seed_c * p.t / std::pow(1.0 + p.r + p.t, 1.0 + kappa);
        const Coords at{{"r", p.r}, {"t", p.t}, {"u0", u}, {"rhs", rhs}, {"seed", seed}};
        c.record(u - rhs, "u0>=rhs", at);
        c.record(rhs - seed, "rhs>=seed", at);
    });
}

void check_grid_region(const RegionGrid& grid, RegionKind kind) {
    if (grid.region.kind != kind) {
        throw PreconditionError(kind == RegionKind::Sigma1 ? "grid must lie in Sigma1"
                                                           : "grid must lie in Sigma2");
    }
    for (const auto& p : grid.points) {
        if (!p.in_region) throw PreconditionError("grid point outside the region");
    }
}

}  // namespace

Certificate verify_lower_bound_odd(const RadialProfile& profile, const DataAssumptions& a, int m,
                                   const RegionGrid& grid, const QuadratureSpec& q, double tol) {
    if (a.which != AssumptionKind::Odd1 && a.which != AssumptionKind::Odd2) {
        throw PreconditionError("odd lower bound needs an odd1 or odd2 assumption");
    }
    check_grid_region(grid, RegionKind::Sigma1);
    const double c4 = seed_constant(a, m);
    Certificate cert =
        lower_bound_sweep("lower-bound-odd", grid, c4, a.kappa, tol, [&](double r, double t) {
            return std::pair{u0_odd_value(profile, m, r, t, q), lower_rhs_odd(profile, m, r, t, q)};
        });
    cert.constants["C4"] = c4;
    if (a.which == AssumptionKind::Odd1) {
        cert.notes.push_back("C4 = C1 (1 + (2/3)^m) / 2");
    }
    return cert;
}

Certificate verify_lower_bound_even(const RadialProfile& profile, const DataAssumptions& a, int m,
                                    const RegionGrid& grid, const QuadratureSpec& q, double tol) {
    if (a.which != AssumptionKind::Even)
        throw PreconditionError("even lower bound needs an even assumption");
    check_grid_region(grid, RegionKind::Sigma1);
    const double c = seed_constant(a, m);
    Certificate cert =
        lower_bound_sweep("lower-bound-even", grid, c, a.kappa, tol, [&](double r, double t) {
            return std::pair{u0_even_value(profile, m, r, t, q),
                             lower_rhs_even(profile, m, r, t, q)};
        });
    cert.constants["C3/(pi sqrt2)"] = c;
    return cert;
}

Certificate verify_lower_bound_low(const CartesianProfile& profile, const DataAssumptions& a, int n,
                                   const RegionGrid& grid, const QuadratureSpec& q, double tol) {
    if (a.which != AssumptionKind::Low)
        throw PreconditionError("low lower bound needs a low assumption");
    if (n != 2 && n != 3) throw PreconditionError("low lower bound needs n = 2 or 3");
    if (profile.dim != n) throw PreconditionError("profile dimension does not match n");
    check_grid_region(grid, RegionKind::Sigma2);
    const Point3 e = sample_direction(n);
    const double c5 = seed_constant(a, 1);
    Certificate cert =
        lower_bound_sweep("lower-bound-low", grid, c5, a.kappa, tol, [&](double r, double t) {
            const Point3 x{r * e[0], r * e[1], r * e[2]};
            return std::pair{u0_low_value(profile, x, t, q), lower_rhs_low(profile, x, t, q)};
        });
    cert.constants["C5"] = c5;
    cert.constants["surface_average_factor"] = 1.0;
    return cert;
}

}  // namespace radwave
