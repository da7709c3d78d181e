#include "radwave/constants.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <string>

#include "radwave/errors.hpp"

namespace radwave {
namespace {

constexpr int kScanSamples = 4096;
constexpr double kSearchTol = 1e-6;
constexpr double kSafetyFactor = 0.999;
constexpr double kMinWidth = 1e-6;

void check_m(int m) {
    if (m < 2 || m > kMaxPolyDegree) {
        throw DomainError("m must lie in [2, " + std::to_string(kMaxPolyDegree) + "], got " +
                          std::to_string(m));
    }
}

// Smallest normalised slack of the three conditions at z. Non-negative means
// every condition holds; the strict positivity of the derivative is folded in
// by returning -1 whenever it fails.
double condition_slack(PolyKind kind, int m, double z) {
    const PolyValues v = poly_eval_all({kind, m - 1}, z);
    const double md = m;
    const double deriv_cap =
        kind == PolyKind::Legendre ? 0.5 * md * (md - 1.0) : (md - 1.0) * (md - 1.0);
    if (!(v.d1 > 0.0)) return -1.0;
    double slack = v.value - 0.5;
    if (kind == PolyKind::Chebyshev) slack = std::min(slack, 1.0 + 1e-12 - v.value);
    slack = std::min(slack, (deriv_cap * (1.0 + 1e-12) - v.d1) / deriv_cap);
    return slack;
}

}  // namespace

bool endpoint_conditions_hold(PolyKind kind, int m, double width) {
    check_m(m);
    if (!(width > 0.0) || width > 1.0) return false;
    const double lo = 1.0 / (1.0 + width);
    const double hi = 1.0;
    const double step = (hi - lo) / (kScanSamples - 1);

    int worst = 0;
    double worst_slack = std::numeric_limits<double>::infinity();
    for (int i = 0; i < kScanSamples; ++i) {
        const double z = i + 1 == kScanSamples ? hi : lo + step * i;
        const double s = condition_slack(kind, m, z);
        if (s < 0.0) return false;
        if (s < worst_slack) {
            worst_slack = s;
            worst = i;
        }
    }
    // Golden-section refinement of the slack inside the neighbouring bracket.
    double a = std::max(lo, lo + step * (worst - 1));
    double b = std::min(hi, lo + step * (worst + 1));
    const double g = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - g * (b - a);
    double d = a + g * (b - a);
    double fc = condition_slack(kind, m, c);
    double fd = condition_slack(kind, m, d);
    for (int it = 0; it < 60 && b - a > 1e-15; ++it) {
        if (fc < 0.0 || fd < 0.0) return false;
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - g * (b - a);
            fc = condition_slack(kind, m, c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + g * (b - a);
            fd = condition_slack(kind, m, d);
        }
    }
    return fc >= 0.0 && fd >= 0.0;
}

namespace {

double find_width(PolyKind kind, int m) {
    check_m(m);
    if (endpoint_conditions_hold(kind, m, 1.0)) return 1.0;
    double lo = kMinWidth;
    double hi = 1.0;
    if (!endpoint_conditions_hold(kind, m, lo)) {
        throw SearchFailure("no admissible endpoint width >= 1e-6 for m=" + std::to_string(m));
    }
    while (hi - lo > kSearchTol) {
        const double mid = 0.5 * (lo + hi);
        if (endpoint_conditions_hold(kind, m, mid))
            lo = mid;
        else
            hi = mid;
    }
    return lo * kSafetyFactor;
}

}  // namespace

double find_eta_m(int m) { return find_width(PolyKind::Legendre, m); }

double find_zeta_m(int m) { return find_width(PolyKind::Chebyshev, m); }

LemmaConstants lemma_constants_from(int m, double eta_m, double zeta_m) {
    check_m(m);
    if (!(eta_m > 0.0 && eta_m <= 1.0) || !(zeta_m > 0.0 && zeta_m <= 1.0)) {
        throw DomainError("eta_m and zeta_m must lie in (0, 1]");
    }
    const double md = m;
    const double tail = 5.0 * zeta_m * (md - 1.0) * (md - 1.0) / 3.0;
    LemmaConstants c;
    c.m = m;
    c.eta_m = eta_m;
    c.zeta_m = zeta_m;
    c.delta = std::max(2.0 / eta_m, 2.0 / zeta_m);
    c.c1m = md * (md - 1.0);
    c.c2m = md - 3.0 / 8.0 + tail;
    c.e_m = md + 1.0 / 8.0 + tail;
    return c;
}

LemmaConstants lemma_constants(int m) {
    check_m(m);
    static std::mutex mutex;
    static std::map<int, LemmaConstants> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(m); it != cache.end()) return it->second;
    }
    const LemmaConstants c = lemma_constants_from(m, find_eta_m(m), find_zeta_m(m));
    std::lock_guard lock(mutex);
    cache.emplace(m, c);
    return c;
}

double critical_decay(double p) {
    if (!(p > 1.0)) throw PreconditionError("p must exceed 1");
    return 2.0 / (p - 1.0);
}

double strauss_exponent(int n) {
    if (n < 2) throw DomainError("dimension must be >= 2");
    const double nd = n;
    return (nd + 1.0 + std::sqrt(nd * nd + 10.0 * nd - 7.0)) / (2.0 * (nd - 1.0));
}

CriticalExponents critical_exponents(double p, int n) {
    return {p, critical_decay(p), n, strauss_exponent(n)};
}

Dimension Dimension::from_n(int n) {
    if (n < 2) throw DomainError("dimension must be >= 2");
    Dimension d;
    d.n = n;
    d.odd = n % 2 == 1;
    d.m = n / 2;
    d.low = n <= 3;
    return d;
}

}  // namespace radwave
