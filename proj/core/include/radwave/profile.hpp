#pragma once

#include <array>
#include <functional>
#include <map>
#include <string>

namespace radwave {

using ScalarFn = std::function<double(double)>;

/// Radial Cauchy data (f, g) on r >= 0 from a named parametric family.
/// `df` may be left empty, in which case callers fall back to a central
/// difference and flag it.
struct RadialProfile {
    std::string family_name;
    std::map<std::string, double> params;
    ScalarFn f;
    ScalarFn df;
    ScalarFn d2f;
    ScalarFn g;
    ScalarFn dg;

    bool has_analytic_df() const { return static_cast<bool>(df); }

    /// f'(r), using the central-difference fallback (step 1e-6 (1 + r)) when no
    /// analytic derivative is attached. `used_fallback` is set accordingly.
    double f_prime(double r, bool* used_fallback = nullptr) const;
};

RadialProfile zero_profile();
RadialProfile constant_profile(double c);

/// f = a exp(-((r - c)/w)^2), g = b exp(-((r - c)/w)^2).
RadialProfile gaussian_profile(double f_amp, double center, double width, double g_amp);

/// f = a (1 + r)^(-kappa), g = b (1 + r)^(-1-kappa).
RadialProfile decay_profile(double f_amp, double g_amp, double kappa);

/// f = 0, g = (1 + r)^(-2).
RadialProfile inverse_square_velocity();

/// alpha * (f1, g1) + beta * (f2, g2).
RadialProfile combine(double alpha, const RadialProfile& a, double beta, const RadialProfile& b);

/// Largest relative mismatch between the supplied derivatives (f', f'', g')
/// and central differences at `samples` points of [r_min, r_max].
double derivative_consistency(const RadialProfile& p, double r_min, double r_max, int samples = 64);

using Point3 = std::array<double, 3>;

/// General (not necessarily radial) Cauchy data on R^2 or R^3. In two
/// dimensions the third coordinate is ignored and always zero.
struct CartesianProfile {
    int dim = 3;
    std::string family_name;
    std::function<double(const Point3&)> f;
    std::function<Point3(const Point3&)> grad_f;
    std::function<double(const Point3&)> g;
};

/// x -> (f(|x|), f'(|x|) x/|x|, g(|x|)).
CartesianProfile lift_radial(const RadialProfile& p, int dim);

double norm(const Point3& x);

}  // namespace radwave
