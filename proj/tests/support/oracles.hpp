#pragma once

// Reference computations that share no code with the library.

#include <cmath>
#include <functional>
#include <numbers>

namespace oracle {

inline double binom(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/// Explicit-sum form of the Rodrigues formula.
inline double legendre(int k, double z) {
    double s = 0.0;
    for (int j = 0; 2 * j <= k; ++j) {
        const double sign = j % 2 == 0 ? 1.0 : -1.0;
        s += sign * binom(k, j) * binom(2 * k - 2 * j, k) * std::pow(z, k - 2 * j);
    }
    return s / std::pow(2.0, k);
}

inline double chebyshev(int k, double z) { return std::cos(k * std::acos(z)); }

/// Composite Simpson rule with `n` (even) panels.
inline double simpson(const std::function<double(double)>& f, double a, double b, int n = 2000) {
    const double h = (b - a) / n;
    double s = f(a) + f(b);
    for (int i = 1; i < n; ++i) s += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
    return s * h / 3.0;
}

/// Radial d'Alembert solution in three dimensions, valid for r > t >= 0.
inline double dalembert3(const std::function<double(double)>& f,
                         const std::function<double(double)>& g, double r, double t) {
    const double a = r - t, b = r + t;
    const double wave = (b * f(b) + a * f(a)) / (2.0 * r);
    if (t == 0.0) return wave;
    return wave + simpson([&](double l) { return l * g(l); }, a, b) / (2.0 * r);
}

/// Midpoint Riemann sum of (1 / (8 r^m)) * integral of lambda^m F(u(lambda, tau))
/// over the backward characteristic triangle of (r, t).
inline double duhamel_riemann(const std::function<double(double, double)>& u,
                              const std::function<double(double)>& F, int m, double r, double t,
                              int n_tau, int n_lambda) {
    const double dtau = t / n_tau;
    double acc = 0.0;
    for (int i = 0; i < n_tau; ++i) {
        const double tau = (i + 0.5) * dtau;
        const double lo = r - (t - tau), hi = r + (t - tau);
        const double dl = (hi - lo) / n_lambda;
        double inner = 0.0;
        for (int j = 0; j < n_lambda; ++j) {
            const double lam = lo + (j + 0.5) * dl;
            inner += std::pow(lam / r, m) * F(u(lam, tau));
        }
        acc += inner * dl;
    }
    return acc * dtau / 8.0;
}

/// Manufactured radial solution u = (1 + t) exp(-r^2) and its forcing in dimension n.
inline double manufactured_u(double r, double t) { return (1.0 + t) * std::exp(-r * r); }
inline double manufactured_source(int n, double r, double t) {
    return -(1.0 + t) * (4.0 * r * r - 2.0 * n) * std::exp(-r * r);
}

}  // namespace oracle
