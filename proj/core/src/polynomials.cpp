#include "radwave/polynomials.hpp"

#include <cmath>
#include <string>

#include "radwave/errors.hpp"

namespace radwave {
namespace {

constexpr double kDomainSlack = 1e-12;

void check_degree(int degree) {
    if (degree < 0 || degree > kMaxPolyDegree) {
        throw DegreeError("polynomial degree " + std::to_string(degree) + " outside [0, " +
                          std::to_string(kMaxPolyDegree) + "]");
    }
}

double clamp_argument(double z) {
    if (!(std::abs(z) <= 1.0 + kDomainSlack)) {
        throw DomainError("polynomial argument " + std::to_string(z) + " outside [-1, 1]");
    }
    return z > 1.0 ? 1.0 : (z < -1.0 ? -1.0 : z);
}

PolyValues legendre(int k, double z) {
    // (n+1) P_{n+1} = (2n+1) z P_n - n P_{n-1}, differentiated twice.
    PolyValues prev{1.0, 0.0, 0.0};
    if (k == 0) return prev;
    PolyValues cur{z, 1.0, 0.0};
    for (int n = 1; n < k; ++n) {
        const double a = 2.0 * n + 1.0;
        const double inv = 1.0 / (n + 1.0);
        PolyValues next;
        next.value = (a * z * cur.value - n * prev.value) * inv;
        next.d1 = (a * (cur.value + z * cur.d1) - n * prev.d1) * inv;
        next.d2 = (a * (2.0 * cur.d1 + z * cur.d2) - n * prev.d2) * inv;
        prev = cur;
        cur = next;
    }
    return cur;
}

PolyValues chebyshev(int k, double z) {
    // T_{n+1} = 2 z T_n - T_{n-1}
    PolyValues prev{1.0, 0.0, 0.0};
    if (k == 0) return prev;
    PolyValues cur{z, 1.0, 0.0};
    for (int n = 1; n < k; ++n) {
        PolyValues next;
        next.value = 2.0 * z * cur.value - prev.value;
        next.d1 = 2.0 * cur.value + 2.0 * z * cur.d1 - prev.d1;
        next.d2 = 4.0 * cur.d1 + 2.0 * z * cur.d2 - prev.d2;
        prev = cur;
        cur = next;
    }
    return cur;
}

bool close_rel(double a, double b, double tol) {
    const double scale = std::max(std::abs(a), std::abs(b));
    if (scale == 0.0) return true;
    return std::abs(a - b) <= tol * scale;
}

}  // namespace

PolyValues poly_eval_all(PolyFamily family, double z) {
    check_degree(family.degree);
    const double x = clamp_argument(z);
    return family.kind == PolyKind::Legendre ? legendre(family.degree, x)
                                             : chebyshev(family.degree, x);
}

double poly_eval(PolyFamily family, double z, int derivative_order) {
    const PolyValues v = poly_eval_all(family, z);
    switch (derivative_order) {
        case 0:
            return v.value;
        case 1:
            return v.d1;
        case 2:
            return v.d2;
        default:
            throw DomainError("derivative order must be 0, 1 or 2");
    }
}

EndpointDerivatives poly_endpoint_derivatives(int m) {
    if (m < 2) throw DomainError("endpoint derivatives need m >= 2");
    check_degree(m - 1);
    const double md = m;
    EndpointDerivatives e;
    e.m = m;
    e.p1 = 0.5 * md * (md - 1.0);
    // binom(m+1, m-1) = (m+1) m / 2
    e.p2 = 0.25 * (md - 1.0) * (md - 2.0) * ((md + 1.0) * md / 2.0);
    e.t1 = (md - 1.0) * (md - 1.0);
    e.t2 = md * (md - 2.0) * (md - 1.0) * (md - 1.0) / 3.0;

    const PolyValues p = poly_eval_all({PolyKind::Legendre, m - 1}, 1.0);
    const PolyValues t = poly_eval_all({PolyKind::Chebyshev, m - 1}, 1.0);
    constexpr double tol = 1e-10;
    if (!close_rel(e.p1, p.d1, tol) || !close_rel(e.p2, p.d2, tol) || !close_rel(e.t1, t.d1, tol) ||
        !close_rel(e.t2, t.d2, tol)) {
        throw InternalError("endpoint derivative closed forms disagree with recurrences at m=" +
                            std::to_string(m));
    }
    return e;
}

}  // namespace radwave
