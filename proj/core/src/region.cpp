#include "radwave/region.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "radwave/constants.hpp"
#include "radwave/errors.hpp"

namespace radwave {
namespace {

// Relative slack for membership tests of points produced by the grid builders.
constexpr double kSlack = 1e-12;

std::vector<double> log_space(double a, double b, int n) {
    std::vector<double> out(static_cast<std::size_t>(n));
    if (n == 1) {
        out[0] = a;
        return out;
    }
    const double la = std::log(a);
    const double lb = std::log(b);
    for (int i = 0; i < n; ++i)
        out[static_cast<std::size_t>(i)] = std::exp(la + (lb - la) * i / (n - 1));
    out.front() = a;
    out.back() = b;
    return out;
}

RegionGrid build(const Region& region, double r_lo, int n_r, int n_t) {
    if (n_r < 1 || n_t < 1) throw ConfigError("grid dimensions must be positive");
    RegionGrid grid;
    grid.region = region;
    grid.n_r = n_r;
    grid.n_t = n_t;
    for (double r : log_space(r_lo, 100.0 * region.R, n_r)) {
        const double tm = region.t_max(r);
        for (int j = 0; j < n_t; ++j) {
            RegionPoint p;
            p.r = r;
            p.t = tm * (j + 1) / n_t;
            p.in_region = region.contains(p.r, p.t);
            grid.points.push_back(p);
        }
    }
    return grid;
}

}  // namespace

bool Region::contains(double r, double t) const {
    if (!(t >= 0.0)) return false;
    const double gap = r - t;
    const double tol = kSlack * std::max(1.0, std::abs(r));
    if (kind == RegionKind::Sigma1) {
        return gap > 0.0 && gap + tol >= std::max(R, delta * t);
    }
    return gap + tol >= std::max(R, t - 1.0);
}

double Region::t_max(double r) const {
    if (kind == RegionKind::Sigma1) return std::min(r - R, r / (1.0 + delta));
    return std::min(r - R, (r + 1.0) / 2.0);
}

std::string Region::describe() const {
    std::ostringstream os;
    os.precision(17);
    if (kind == RegionKind::Sigma1) {
        os << "Sigma1{n=" << n << ", R=" << R << ", delta=" << delta << "}";
    } else {
        os << "Sigma2{n=" << n << ", R=" << R << "}";
    }
    return os.str();
}

Region sigma1_region(int n, double R) {
    if (n < 4) throw DomainError("Sigma1 is defined for n >= 4");
    if (!(R > 0.0)) throw DomainError("R must be positive");
    Region reg;
    reg.kind = RegionKind::Sigma1;
    reg.R = R;
    reg.n = n;
    reg.delta = lemma_constants(n / 2).delta;
    return reg;
}

Region sigma2_region(int n, double R) {
    if (n != 2 && n != 3) throw DomainError("Sigma2 is defined for n = 2, 3");
    if (!(R > 0.0)) throw DomainError("R must be positive");
    Region reg;
    reg.kind = RegionKind::Sigma2;
    reg.R = R;
    reg.n = n;
    reg.delta = 0.0;
    return reg;
}

RegionGrid make_sigma1_grid(const Region& region, int n_r, int n_t) {
    return build(region, region.R + region.delta, n_r, n_t);
}

RegionGrid make_sigma2_grid(const Region& region, int n_r, int n_t) {
    return build(region, region.R + 1.0, n_r, n_t);
}

RegionGrid make_grid(const Region& region, int n_r, int n_t) {
    return region.kind == RegionKind::Sigma1 ? make_sigma1_grid(region, n_r, n_t)
                                             : make_sigma2_grid(region, n_r, n_t);
}

RegionGrid refine(const RegionGrid& grid) {
    return make_grid(grid.region, 2 * grid.n_r, 2 * grid.n_t);
}

bool triangle_in_region(const Region& region, double r, double t, int samples) {
    for (int j = 0; j <= samples; ++j) {
        const double tau = t * j / samples;
        const double half = t - tau;
        for (int i = 0; i <= samples; ++i) {
            const double lam = r - half + 2.0 * half * i / samples;
            if (!region.contains(lam, tau)) return false;
        }
    }
    return true;
}

}  // namespace radwave
