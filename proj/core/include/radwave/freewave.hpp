#pragma once

#include <functional>

#include "radwave/profile.hpp"
#include "radwave/quadrature.hpp"

namespace radwave {

// ---------------------------------------------------------------------------
// Kernel algebra shared by the evaluators and the certificate sweeps.
// ---------------------------------------------------------------------------

/// (lambda^2 + r^2 - t^2) / (2 r lambda). Equals 1 at lambda = r -/+ t.
double theta(double lambda, double r, double t);

/// Shifted radius r + t eta - 2 t eta xi produced by the (eta, xi) change of
/// variables; every even-dimension kernel quantity is a function of it.
double lambda_tilde(double r, double t, double eta, double xi);

/// K(r,t,eta,xi) = lambda~^m / (sqrt(r + t eta - t eta xi) sqrt(r - xi t eta)).
double even_kernel(int m, double r, double t, double eta, double xi);

/// K / r^(m-1), which stays O(1) for large r and m.
double even_kernel_scaled(int m, double r, double t, double eta, double xi);

/// Theta(lambda~, r, t eta).
double even_theta(double r, double t, double eta, double xi);

/// The cubic N(r,t,eta,xi) in its three algebraically equal forms.
double n_definition(double r, double t, double eta, double xi);
double n_expanded(double r, double t, double eta, double xi);
double n_factored(double r, double t, double eta, double xi);

/// d/dt of even_theta: eta N / (2 r lambda~^2), with N in factored form.
double dtheta_dt(double r, double t, double eta, double xi);

/// Stationary points of N in xi for fixed eta > 0.
struct XiRoots {
    double plus = 0.0;
    double minus = 0.0;
};
XiRoots n_stationary_points(double r, double t, double eta);

/// Pieces of d/dt { K w(lambda~) T_{m-1}(Theta) } = K { eta (I1+I2+I3+I4) T + I5 }.
struct KernelDerivative {
    double lambda_tilde = 0.0;
    double theta = 0.0;
    double t_value = 0.0;  ///< T_{m-1}(Theta)
    double t_deriv = 0.0;  ///< T'_{m-1}(Theta)
    double dtheta = 0.0;   ///< d/dt Theta
    double i1 = 0.0, i2 = 0.0, i3 = 0.0, i4 = 0.0, i5 = 0.0;
    /// eta (I1 + I2 + I3 + I4) T + I5, i.e. the derivative divided by K.
    double bracket = 0.0;
};

/// `w` and `dw` are w(lambda~) and w'(lambda~).
KernelDerivative kernel_time_derivative(int m, double w, double dw, double r, double t, double eta,
                                        double xi);

// ---------------------------------------------------------------------------
// Free-solution evaluators
// ---------------------------------------------------------------------------

struct Evaluation {
    double value = 0.0;
    /// Relative change between the requested rule and the half-size rule.
    double quad_tol = 0.0;
    bool quadrature_warning = false;   ///< quad_tol > 1e-8
    bool derivative_fallback = false;  ///< f' was approximated numerically
};

/// n = 2m + 1, radial data, exterior region r > t >= 0.
Evaluation u0_odd(const RadialProfile& data, int m, double r, double t,
                  const QuadratureSpec& q = {});

/// n = 2m, radial data, exterior region r > t >= 0.
Evaluation u0_even(const RadialProfile& data, int m, double r, double t,
                   const QuadratureSpec& q = {});

/// n = 2 or 3, general data, any t >= 0.
Evaluation u0_low(const CartesianProfile& data, const Point3& x, double t,
                  const QuadratureSpec& q = {});

/// Raw evaluations at exactly the given rule (no half-rule estimate).
double u0_odd_value(const RadialProfile& data, int m, double r, double t, const QuadratureSpec& q,
                    bool* derivative_fallback = nullptr);
double u0_even_value(const RadialProfile& data, int m, double r, double t, const QuadratureSpec& q,
                     bool* derivative_fallback = nullptr);
double u0_low_value(const CartesianProfile& data, const Point3& x, double t,
                    const QuadratureSpec& q);

/// Dispatches on n: low (lifted radial data at x = (r, 0, 0)), odd, or even.
Evaluation free_solution(const RadialProfile& data, int n, double r, double t,
                         const QuadratureSpec& q = {});

/// Riemann operator R(phi | x, s) for n = 3 (s times the spherical mean) and
/// n = 2 (Poisson-weighted disc mean).
double riemann(const std::function<double(const Point3&)>& phi, int dim, const Point3& x, double s,
               const QuadratureSpec& q);

/// Riemann operator for radial phi at |x| = r; the azimuthal integral about x
/// is done exactly, leaving the polar (n = 3) or disc (n = 2) quadrature.
double riemann_radial(const std::function<double(double)>& phi, int dim, double r, double s,
                      const QuadratureSpec& q);

struct Refined {
    double value = 0.0;
    double achieved_tol = 0.0;
    QuadratureSpec final_spec;
    bool converged = false;  ///< false means the 8192-node cap was hit
};

/// Doubles every node count until two successive results agree to
/// `target_rel_tol` or the per-axis cap of 8192 nodes is reached.
Refined refine_until(const std::function<double(const QuadratureSpec&)>& op, double target_rel_tol,
                     QuadratureSpec start = {});

}  // namespace radwave
