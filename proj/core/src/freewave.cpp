#include "radwave/freewave.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "radwave/errors.hpp"
#include "radwave/polynomials.hpp"

namespace radwave {
namespace {

constexpr double kWarnTol = 1e-8;
constexpr int kNodeCap = 8192;

void check_exterior(double r, double t) {
    if (!(r > 0.0) || !(t >= 0.0) || !(t < r)) {
        throw DomainError("evaluation requires r > t >= 0 (got r=" + std::to_string(r) +
                          ", t=" + std::to_string(t) + ")");
    }
}

void check_m(int m) {
    if (m < 2 || m - 1 > kMaxPolyDegree) throw DomainError("m must lie in [2, 65]");
}

double relative_change(double fine, double coarse) {
    const double diff = std::abs(fine - coarse);
    if (diff == 0.0) return 0.0;
    return diff / std::max(std::abs(fine), 1e-12);
}

template <typename Raw>
Evaluation with_estimate(Raw raw, const QuadratureSpec& q) {
    q.validate();
    Evaluation e;
    bool fallback = false;
    e.value = raw(q, &fallback);
    e.derivative_fallback = fallback;
    const double coarse = raw(q.scaled(0.5), nullptr);
    e.quad_tol = relative_change(e.value, coarse);
    e.quadrature_warning = e.quad_tol > kWarnTol;
    return e;
}

double dot(const Point3& a, const Point3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

}  // namespace

double theta(double lambda, double r, double t) {
    return (lambda * lambda + (r - t) * (r + t)) / (2.0 * r * lambda);
}

double lambda_tilde(double r, double t, double eta, double xi) {
    const double a = t * eta;
    return r + a - 2.0 * a * xi;
}

double even_kernel(int m, double r, double t, double eta, double xi) {
    const double a = t * eta;
    const double lt = lambda_tilde(r, t, eta, xi);
    return std::pow(lt, m) / (std::sqrt(r + a - a * xi) * std::sqrt(r - xi * a));
}

double even_kernel_scaled(int m, double r, double t, double eta, double xi) {
    const double a = t * eta;
    const double lt = lambda_tilde(r, t, eta, xi);
    return std::pow(lt / r, m) * r / (std::sqrt(r + a - a * xi) * std::sqrt(r - xi * a));
}

double even_theta(double r, double t, double eta, double xi) {
    return theta(lambda_tilde(r, t, eta, xi), r, t * eta);
}

double n_definition(double r, double t, double eta, double xi) {
    const double a = t * eta;
    const double lt = lambda_tilde(r, t, eta, xi);
    return (2.0 * lt * (1.0 - 2.0 * xi) - 2.0 * a) * lt -
           (lt * lt + r * r - a * a) * (1.0 - 2.0 * xi);
}

double n_expanded(double r, double t, double eta, double xi) {
    const double a = t * eta;
    return -8.0 * a * a * xi * xi * xi + (12.0 * a * a + 8.0 * r * a) * xi * xi -
           (8.0 * r * a + 4.0 * a * a) * xi;
}

double n_factored(double r, double t, double eta, double xi) {
    const double a = t * eta;
    return -4.0 * a * xi * (xi - 1.0) * (2.0 * a * xi - (2.0 * r + a));
}

double dtheta_dt(double r, double t, double eta, double xi) {
    const double lt = lambda_tilde(r, t, eta, xi);
    return eta * n_factored(r, t, eta, xi) / (2.0 * r * lt * lt);
}

XiRoots n_stationary_points(double r, double t, double eta) {
    const double a = t * eta;
    if (!(a > 0.0)) throw DomainError("stationary points need t * eta > 0");
    const double root = std::sqrt(3.0 * a * a + 4.0 * r * r);
    XiRoots x;
    x.plus = (3.0 * a + 2.0 * r + root) / (6.0 * a);
    // Rationalised form of ((3a + 2r) - root) / (6a); avoids cancellation for a << r.
    x.minus = (a + 2.0 * r) / (3.0 * a + 2.0 * r + root);
    return x;
}

KernelDerivative kernel_time_derivative(int m, double w, double dw, double r, double t, double eta,
                                        double xi) {
    const double a = t * eta;
    KernelDerivative k;
    k.lambda_tilde = lambda_tilde(r, t, eta, xi);
    k.theta = theta(k.lambda_tilde, r, a);
    const PolyValues tv = poly_eval_all({PolyKind::Chebyshev, m - 1}, k.theta);
    k.t_value = tv.value;
    k.t_deriv = tv.d1;
    k.dtheta = dtheta_dt(r, t, eta, xi);
    const double lt = k.lambda_tilde;
    k.i1 = m * (1.0 - 2.0 * xi) * w / lt;
    k.i2 = (1.0 - 2.0 * xi) * dw;
    k.i3 = -0.5 * (1.0 - xi) * w / (r + a - a * xi);
    k.i4 = 0.5 * xi * w / (r - xi * a);
    k.i5 = w * k.t_deriv * k.dtheta;
    k.bracket = eta * (k.i1 + k.i2 + k.i3 + k.i4) * k.t_value + k.i5;
    return k;
}

double u0_odd_value(const RadialProfile& data, int m, double r, double t, const QuadratureSpec& q,
                    bool* derivative_fallback) {
    check_m(m);
    check_exterior(r, t);
    if (derivative_fallback) *derivative_fallback = false;
    const PolyFamily legendre{PolyKind::Legendre, m - 1};
    // (1 / 2 r^m) lambda^m = (lambda / r)^m / 2
    const double boundary =
        0.5 * (data.f(r + t) * std::pow((r + t) / r, m) + data.f(r - t) * std::pow((r - t) / r, m));
    if (t == 0.0) return boundary;

    const MappedRule mr = map_rule(*reference_rule(q.rule, q.nodes_lambda), r - t, r + t);
    double acc = 0.0;
    for (std::size_t i = 0; i < mr.nodes.size(); ++i) {
        const double lam = mr.nodes[i];
        const PolyValues p = poly_eval_all(legendre, theta(lam, r, t));
        const double scale = std::pow(lam / r, m);
        const double fterm = data.f(lam) * p.d1 * (-t / (r * lam));
        const double gterm = data.g(lam) * p.value;
        acc += mr.weights[i] * scale * (fterm + gterm);
    }
    return boundary + 0.5 * acc;
}

double u0_even_value(const RadialProfile& data, int m, double r, double t, const QuadratureSpec& q,
                     bool* derivative_fallback) {
    check_m(m);
    check_exterior(r, t);
    bool fallback = false;
    const MappedRule en = eta_rule(q.rule, q.nodes_eta);
    const MappedRule xn = xi_rule(q.rule, q.nodes_xi);

    double acc_f = 0.0;
    double acc_g = 0.0;
    for (std::size_t i = 0; i < en.nodes.size(); ++i) {
        const double eta = en.nodes[i];
        double row_f = 0.0;
        double row_g = 0.0;
        for (std::size_t j = 0; j < xn.nodes.size(); ++j) {
            const double xi = xn.nodes[j];
            const double lt = lambda_tilde(r, t, eta, xi);
            const double k_scaled = even_kernel_scaled(m, r, t, eta, xi);
            const double w = data.f(lt);
            bool fb = false;
            const double dw = data.f_prime(lt, &fb);
            fallback = fallback || fb;
            const KernelDerivative kd = kernel_time_derivative(m, w, dw, r, t, eta, xi);
            row_f += xn.weights[j] * k_scaled * (w * kd.t_value + t * kd.bracket);
            row_g += xn.weights[j] * k_scaled * data.g(lt) * kd.t_value;
        }
        acc_f += en.weights[i] * row_f;
        acc_g += en.weights[i] * row_g;
    }
    if (derivative_fallback) *derivative_fallback = fallback;
    return (acc_f + t * acc_g) / std::numbers::pi;
}

double u0_low_value(const CartesianProfile& data, const Point3& x, double t,
                    const QuadratureSpec& q) {
    if (!(t >= 0.0)) throw DomainError("t must be non-negative");
    if (data.dim != 2 && data.dim != 3) throw DomainError("u0_low supports n = 2, 3");
    if (t == 0.0) return data.f(x);

    if (data.dim == 3) {
        const MappedRule polar = map_rule(*reference_rule(q.rule, q.nodes_xi), -1.0, 1.0);
        const int n_az = 2 * q.nodes_xi;
        double acc = 0.0;
        for (std::size_t i = 0; i < polar.nodes.size(); ++i) {
            const double mu = polar.nodes[i];
            const double s = std::sqrt(std::max(0.0, 1.0 - mu * mu));
            double ring = 0.0;
            for (int k = 0; k < n_az; ++k) {
                const double phi = 2.0 * std::numbers::pi * (k + 0.5) / n_az;
                const Point3 w{s * std::cos(phi), s * std::sin(phi), mu};
                const Point3 y{x[0] + t * w[0], x[1] + t * w[1], x[2] + t * w[2]};
                ring += data.f(y) + t * dot(w, data.grad_f(y)) + t * data.g(y);
            }
            acc += polar.weights[i] * ring / n_az;
        }
        return 0.5 * acc;
    }

    const MappedRule radial = eta_rule(q.rule, q.nodes_eta);
    const int n_circle = 2 * q.nodes_xi;
    double acc = 0.0;
    for (std::size_t i = 0; i < radial.nodes.size(); ++i) {
        const double xi = radial.nodes[i];
        double ring = 0.0;
        for (int k = 0; k < n_circle; ++k) {
            const double phi = 2.0 * std::numbers::pi * (k + 0.5) / n_circle;
            const Point3 w{std::cos(phi), std::sin(phi), 0.0};
            const Point3 y{x[0] + t * xi * w[0], x[1] + t * xi * w[1], 0.0};
            ring += data.f(y) + t * xi * dot(w, data.grad_f(y)) + t * data.g(y);
        }
        acc += radial.weights[i] * ring / n_circle;
    }
    return acc;
}

Evaluation u0_odd(const RadialProfile& data, int m, double r, double t, const QuadratureSpec& q) {
    return with_estimate(
        [&](const QuadratureSpec& s, bool* fb) { return u0_odd_value(data, m, r, t, s, fb); }, q);
}

Evaluation u0_even(const RadialProfile& data, int m, double r, double t, const QuadratureSpec& q) {
    return with_estimate(
        [&](const QuadratureSpec& s, bool* fb) { return u0_even_value(data, m, r, t, s, fb); }, q);
}

Evaluation u0_low(const CartesianProfile& data, const Point3& x, double t,
                  const QuadratureSpec& q) {
    return with_estimate(
        [&](const QuadratureSpec& s, bool*) { return u0_low_value(data, x, t, s); }, q);
}

Evaluation free_solution(const RadialProfile& data, int n, double r, double t,
                         const QuadratureSpec& q) {
    if (n == 2 || n == 3) return u0_low(lift_radial(data, n), Point3{r, 0.0, 0.0}, t, q);
    if (n < 2) throw DomainError("dimension must be >= 2");
    return n % 2 == 1 ? u0_odd(data, n / 2, r, t, q) : u0_even(data, n / 2, r, t, q);
}

double riemann(const std::function<double(const Point3&)>& phi, int dim, const Point3& x, double s,
               const QuadratureSpec& q) {
    if (!(s >= 0.0)) throw DomainError("Riemann operator needs s >= 0");
    if (s == 0.0) return 0.0;
    if (dim == 3) {
        const MappedRule polar = map_rule(*reference_rule(q.rule, q.nodes_xi), -1.0, 1.0);
        const int n_az = 2 * q.nodes_xi;
        double acc = 0.0;
        for (std::size_t i = 0; i < polar.nodes.size(); ++i) {
            const double mu = polar.nodes[i];
            const double sn = std::sqrt(std::max(0.0, 1.0 - mu * mu));
            double ring = 0.0;
            for (int k = 0; k < n_az; ++k) {
                const double a = 2.0 * std::numbers::pi * (k + 0.5) / n_az;
                ring +=
                    phi({x[0] + s * sn * std::cos(a), x[1] + s * sn * std::sin(a), x[2] + s * mu});
            }
            acc += polar.weights[i] * ring / n_az;
        }
        return s * 0.5 * acc;
    }
    if (dim == 2) {
        const MappedRule radial = eta_rule(q.rule, q.nodes_eta);
        const int n_circle = 2 * q.nodes_xi;
        double acc = 0.0;
        for (std::size_t i = 0; i < radial.nodes.size(); ++i) {
            const double rho = s * radial.nodes[i];
            double ring = 0.0;
            for (int k = 0; k < n_circle; ++k) {
                const double a = 2.0 * std::numbers::pi * (k + 0.5) / n_circle;
                ring += phi({x[0] + rho * std::cos(a), x[1] + rho * std::sin(a), 0.0});
            }
            acc += radial.weights[i] * ring / n_circle;
        }
        return s * acc;
    }
    throw DomainError("Riemann operator supports n = 2, 3");
}

double riemann_radial(const std::function<double(double)>& phi, int dim, double r, double s,
                      const QuadratureSpec& q) {
    if (!(s >= 0.0)) throw DomainError("Riemann operator needs s >= 0");
    if (s == 0.0) return 0.0;
    auto radius = [r](double rho, double cosang) {
        return std::sqrt(std::max(0.0, r * r + rho * rho + 2.0 * r * rho * cosang));
    };
    if (dim == 3) {
        const MappedRule polar = map_rule(*reference_rule(q.rule, q.nodes_xi), -1.0, 1.0);
        double acc = 0.0;
        for (std::size_t i = 0; i < polar.nodes.size(); ++i) {
            acc += polar.weights[i] * phi(radius(s, polar.nodes[i]));
        }
        return s * 0.5 * acc;
    }
    if (dim == 2) {
        const MappedRule radial = eta_rule(q.rule, q.nodes_eta);
        const int panels = q.nodes_xi;
        double acc = 0.0;
        for (std::size_t i = 0; i < radial.nodes.size(); ++i) {
            const double rho = s * radial.nodes[i];
            // Trapezoid on [0, pi] for an even, 2pi-periodic integrand.
            double ring = 0.5 * (phi(radius(rho, 1.0)) + phi(radius(rho, -1.0)));
            for (int k = 1; k < panels; ++k) {
                ring += phi(radius(rho, std::cos(std::numbers::pi * k / panels)));
            }
            acc += radial.weights[i] * ring / panels;
        }
        return s * acc;
    }
    throw DomainError("Riemann operator supports n = 2, 3");
}

Refined refine_until(const std::function<double(const QuadratureSpec&)>& op, double target_rel_tol,
                     QuadratureSpec start) {
    if (!(target_rel_tol >= 1e-12)) throw DomainError("target tolerance must be >= 1e-12");
    start.validate();
    Refined out;
    QuadratureSpec spec = start;
    double previous = op(spec);
    for (;;) {
        const QuadratureSpec next = spec.scaled(2.0);
        if (next.nodes_lambda > kNodeCap || next.nodes_eta > kNodeCap || next.nodes_xi > kNodeCap) {
            out.value = previous;
            out.final_spec = spec;
            out.converged = false;
            return out;
        }
        const double current = op(next);
        out.achieved_tol = relative_change(current, previous);
        spec = next;
        previous = current;
        if (out.achieved_tol <= target_rel_tol) {
            out.value = current;
            out.final_spec = spec;
            out.converged = true;
            return out;
        }
    }
}

}  // namespace radwave
