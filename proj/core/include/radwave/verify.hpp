#pragma once

#include <cstdint>

#include "radwave/assumptions.hpp"
#include "radwave/certificate.hpp"
#include "radwave/freewave.hpp"
#include "radwave/region.hpp"

namespace radwave {

/// Theta(lambda, r, t) >= delta/(delta+2) for lambda in [r - t, r + t], plus
/// the two links Theta >= (r-t)/(r+t) >= delta/(delta+2) and agreement of
/// the sampled minimum with the analytic one, sqrt(r^2 - t^2)/r.
Certificate verify_theta_bound(int m, const RegionGrid& grid, int lambda_samples = 128,
                               double tol = 1e-10);

/// Expanded vs factored N at random (r, t, eta, xi) with r > t > 0; identity
/// tolerance 1e-12 relative to the sum of |monomials|. Also N(xi=0) = N(xi=1) = 0.
Certificate verify_N_factorization(int samples = 1000, std::uint64_t seed = 1, double tol = 1e-10);

/// -5 zeta_m / (3 lambda~) <= dTheta/dt <= 0 on a samples x samples (eta, xi)
/// lattice per grid point; xi_+ > 1, 0 < xi_- < 1 and the lattice minimum
/// of N lies within one lattice step of xi_-.
Certificate verify_dtheta_bounds(int m, const RegionGrid& grid, int samples = 128,
                                 double tol = 1e-10);

/// A positive weight w with derivative, used by the kernel inequality.
struct Weight {
    std::string name = "one";
    ScalarFn w = [](double) { return 1.0; };
    ScalarFn dw = [](double) { return 0.0; };
};

Weight unit_weight();
Weight power_weight(double a);  ///< (1 + x)^(-a)
Weight oscillating_weight();    ///< 2 + sin x

/// d/dt {K w T} >= -(E_m w/lambda~ + |w'|) K, certified after division by
/// K > 0. Also certifies the half-range estimates for eta (I1+...+I4) T on
/// xi <= 1/2 and xi >= 1/2, the I5 bound and agreement of the analytic time
/// derivative with a central difference (step 1e-6 t, tolerance 1e-6).
Certificate verify_kernel_inequality(int m, const Weight& weight, const RegionGrid& grid,
                                     int samples = 128, double tol = 1e-10,
                                     bool finite_difference_check = true);

/// u0_odd >= RHS of the odd frame estimate >= C4 t / (1 + r + t)^(1 + kappa).
Certificate verify_lower_bound_odd(const RadialProfile& profile, const DataAssumptions& a, int m,
                                   const RegionGrid& grid, const QuadratureSpec& q = {},
                                   double tol = 1e-10);

/// u0_even >= double-integral RHS >= C3 t / (pi sqrt 2 (1 + r + t)^(1 + kappa)).
Certificate verify_lower_bound_even(const RadialProfile& profile, const DataAssumptions& a, int m,
                                    const RegionGrid& grid, const QuadratureSpec& q = {},
                                    double tol = 1e-10);

/// u0_low >= R(f/(1+|y|) - |grad f| + g | x, t) >= C5 t / (1 + |x| + t)^(1 + kappa)
/// with C5 = C0. Points are x = r e for a fixed non-axis unit vector e.
Certificate verify_lower_bound_low(const CartesianProfile& profile, const DataAssumptions& a, int n,
                                   const RegionGrid& grid, const QuadratureSpec& q = {},
                                   double tol = 1e-10);

/// Right-hand sides used by the lower-bound certificates (exposed for tests).
double lower_rhs_odd(const RadialProfile& profile, int m, double r, double t,
                     const QuadratureSpec& q);
double lower_rhs_even(const RadialProfile& profile, int m, double r, double t,
                      const QuadratureSpec& q);
double lower_rhs_low(const CartesianProfile& profile, const Point3& x, double t,
                     const QuadratureSpec& q);

/// Fixed unit direction used to place low-dimensional sample points.
Point3 sample_direction(int n);

}  // namespace radwave
