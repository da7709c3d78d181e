#include "radwave/profile.hpp"

#include <algorithm>
#include <cmath>

#include "radwave/errors.hpp"

namespace radwave {

double RadialProfile::f_prime(double r, bool* used_fallback) const {
    if (df) {
        if (used_fallback) *used_fallback = false;
        return df(r);
    }
    if (used_fallback) *used_fallback = true;
    const double h = 1e-6 * (1.0 + r);
    return (f(r + h) - f(r - h)) / (2.0 * h);
}

RadialProfile zero_profile() {
    RadialProfile p;
    p.family_name = "zero";
    auto zero = [](double) { return 0.0; };
    p.f = zero;
    p.df = zero;
    p.d2f = zero;
    p.g = zero;
    p.dg = zero;
    return p;
}

RadialProfile constant_profile(double c) {
    RadialProfile p;
    p.family_name = "constant";
    p.params = {{"c", c}};
    auto zero = [](double) { return 0.0; };
    p.f = [c](double) { return c; };
    p.df = zero;
    p.d2f = zero;
    p.g = zero;
    p.dg = zero;
    return p;
}

RadialProfile gaussian_profile(double f_amp, double center, double width, double g_amp) {
    if (!(width > 0.0)) throw DomainError("gaussian width must be positive");
    RadialProfile p;
    p.family_name = "gaussian";
    p.params = {{"f_amp", f_amp}, {"center", center}, {"width", width}, {"g_amp", g_amp}};
    auto bump = [center, width](double r) {
        const double s = (r - center) / width;
        return std::exp(-s * s);
    };
    auto dbump = [center, width, bump](double r) {
        return -2.0 * (r - center) / (width * width) * bump(r);
    };
    auto d2bump = [center, width, bump](double r) {
        const double w2 = width * width;
        const double s = (r - center);
        return (4.0 * s * s / (w2 * w2) - 2.0 / w2) * bump(r);
    };
    p.f = [f_amp, bump](double r) { return f_amp * bump(r); };
    p.df = [f_amp, dbump](double r) { return f_amp * dbump(r); };
    p.d2f = [f_amp, d2bump](double r) { return f_amp * d2bump(r); };
    p.g = [g_amp, bump](double r) { return g_amp * bump(r); };
    p.dg = [g_amp, dbump](double r) { return g_amp * dbump(r); };
    return p;
}

RadialProfile decay_profile(double f_amp, double g_amp, double kappa) {
    RadialProfile p;
    p.family_name = "decay";
    p.params = {{"f_amp", f_amp}, {"g_amp", g_amp}, {"kappa", kappa}};
    p.f = [=](double r) { return f_amp * std::pow(1.0 + r, -kappa); };
    p.df = [=](double r) { return -kappa * f_amp * std::pow(1.0 + r, -kappa - 1.0); };
    p.d2f = [=](double r) {
        return kappa * (kappa + 1.0) * f_amp * std::pow(1.0 + r, -kappa - 2.0);
    };
    p.g = [=](double r) { return g_amp * std::pow(1.0 + r, -1.0 - kappa); };
    p.dg = [=](double r) { return -(1.0 + kappa) * g_amp * std::pow(1.0 + r, -2.0 - kappa); };
    return p;
}

RadialProfile inverse_square_velocity() {
    RadialProfile p;
    p.family_name = "inverse_square";
    auto zero = [](double) { return 0.0; };
    p.f = zero;
    p.df = zero;
    p.d2f = zero;
    p.g = [](double r) { return 1.0 / ((1.0 + r) * (1.0 + r)); };
    p.dg = [](double r) { return -2.0 / ((1.0 + r) * (1.0 + r) * (1.0 + r)); };
    return p;
}

RadialProfile combine(double alpha, const RadialProfile& a, double beta, const RadialProfile& b) {
    RadialProfile p;
    p.family_name = a.family_name + "+" + b.family_name;
    p.f = [=](double r) { return alpha * a.f(r) + beta * b.f(r); };
    if (a.df && b.df) p.df = [=](double r) { return alpha * a.df(r) + beta * b.df(r); };
    if (a.d2f && b.d2f) p.d2f = [=](double r) { return alpha * a.d2f(r) + beta * b.d2f(r); };
    p.g = [=](double r) { return alpha * a.g(r) + beta * b.g(r); };
    if (a.dg && b.dg) p.dg = [=](double r) { return alpha * a.dg(r) + beta * b.dg(r); };
    return p;
}

double derivative_consistency(const RadialProfile& p, double r_min, double r_max, int samples) {
    double worst = 0.0;
    auto check = [&worst](const ScalarFn& fn, const ScalarFn& dfn, double r) {
        if (!fn || !dfn) return;
        const double h = 1e-5 * (1.0 + r);
        const double fd = (fn(r + h) - fn(r - h)) / (2.0 * h);
        const double an = dfn(r);
        const double scale =
            std::max({std::abs(an), std::abs(fd), std::abs(fn(r)) / (1.0 + r), 1e-300});
        worst = std::max(worst, std::abs(an - fd) / scale);
    };
    for (int i = 0; i < samples; ++i) {
        const double r = r_min + (r_max - r_min) * (i + 0.5) / samples;
        check(p.f, p.df, r);
        check(p.df, p.d2f, r);
        check(p.g, p.dg, r);
    }
    return worst;
}

double norm(const Point3& x) { return std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]); }

CartesianProfile lift_radial(const RadialProfile& p, int dim) {
    if (dim != 2 && dim != 3) throw DomainError("cartesian data is supported for n = 2, 3");
    CartesianProfile c;
    c.dim = dim;
    c.family_name = p.family_name;
    c.f = [p](const Point3& x) { return p.f(norm(x)); };
    c.g = [p](const Point3& x) { return p.g(norm(x)); };
    c.grad_f = [p](const Point3& x) {
        const double r = norm(x);
        if (r == 0.0) return Point3{0.0, 0.0, 0.0};
        const double s = p.f_prime(r) / r;
        return Point3{s * x[0], s * x[1], s * x[2]};
    };
    return c;
}

}  // namespace radwave
