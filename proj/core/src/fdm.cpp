#include "radwave/fdm.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "radwave/errors.hpp"
#include "radwave/freewave.hpp"

namespace radwave {
namespace {

// Lagrange interpolation of a uniform-grid field at r using 4 nodes.
double cubic_at(const std::vector<double>& u, double dr, double r) {
    const int last = static_cast<int>(u.size()) - 1;
    int i0 = static_cast<int>(std::floor(r / dr)) - 1;
    i0 = std::clamp(i0, 0, last - 3);
    const double x = r / dr - i0;
    std::array<double, 4> w{};
    for (int a = 0; a < 4; ++a) {
        double l = 1.0;
        for (int b = 0; b < 4; ++b) {
            if (b != a) l *= (x - b) / (a - b);
        }
        w[static_cast<std::size_t>(a)] = l;
    }
    double s = 0.0;
    for (int a = 0; a < 4; ++a) s += w[static_cast<std::size_t>(a)] * u[static_cast<std::size_t>(i0 + a)];
    return s;
}

// Quadratic interpolation in time through (t0, v0), (t0 + dt, v1), (t0 + 2 dt, v2).
double quad_time(double v0, double v1, double v2, double s) {
    return v0 * (s - 1.0) * (s - 2.0) / 2.0 - v1 * s * (s - 2.0) + v2 * s * (s - 1.0) / 2.0;
}

}  // namespace

void FdmConfig::validate() const {
    if (n < 2) throw ConfigError("n must be >= 2");
    if (!(dr > 0.0)) throw ConfigError("dr must be positive");
    if (!(r_max >= 8.0 * dr)) throw ConfigError("r_max must span at least 8 cells");
    if (!(cfl > 0.0) || cfl > 0.9) throw ConfigError("cfl must lie in (0, 0.9]");
    if (!(t_end > 0.0)) throw ConfigError("t_end must be positive");
    if (!(blowup_cutoff > 0.0)) throw ConfigError("blowup_cutoff must be positive");
    for (double t : snapshot_times) {
        if (!(t >= 0.0) || t > t_end) throw ConfigError("snapshot times must lie in [0, t_end]");
    }
    for (const auto& [r, t] : probes) {
        if (!(r >= 0.0) || !(t >= 0.0) || t > t_end) {
            throw ConfigError("probe times must lie in [0, t_end] and radii be non-negative");
        }
        if (!(r + t < r_max)) {
            throw ConfigError("probe (r, t) must satisfy r + t < r_max so the boundary cannot reach it");
        }
    }
}

double FdmResult::energy_drift() const {
    if (energy.empty()) return 0.0;
    const double e0 = energy.front();
    double worst = 0.0;
    for (double e : energy) worst = std::max(worst, std::abs(e - e0));
    return e0 != 0.0 ? worst / std::abs(e0) : worst;
}

std::string FdmResult::snapshots_csv() const {
    std::ostringstream os;
    os.precision(17);
    os << "r,t,u\n";
    for (const auto& s : snapshots) {
        for (std::size_t i = 0; i < r.size(); ++i) os << r[i] << "," << s.t << "," << s.u[i] << "\n";
    }
    return os.str();
}

FdmResult solve(const RadialProfile& profile, const FdmConfig& cfg) {
    cfg.validate();
    const int M = static_cast<int>(std::llround(cfg.r_max / cfg.dr));
    const double dr = cfg.r_max / M;
    const int steps = std::max(2, static_cast<int>(std::ceil(cfg.t_end / (cfg.cfl * dr) - 1e-12)));
    const double dt = cfg.t_end / steps;
    const std::size_t size = static_cast<std::size_t>(M + 1);

    FdmResult res;
    res.dt = dt;
    res.r.resize(size);
    for (int i = 0; i <= M; ++i) res.r[static_cast<std::size_t>(i)] = i * dr;

    // Finite-volume weights in units of dr^(n-1): W_i is the shell volume
    // integral of r^(n-1) over [r_i - dr/2, r_i + dr/2] (over [0, dr/2] at the
    // origin) divided by dr, and face_i = r_{i+1/2}^(n-1). The operator is then
    // exact on quadratics, including at r = 0 where it reduces to n u_rr.
    const int e = cfg.n - 1;
    std::vector<double> W(size), face(size);
    for (int i = 0; i <= M; ++i) {
        const double lo = i == 0 ? 0.0 : std::pow(i - 0.5, cfg.n);
        W[static_cast<std::size_t>(i)] = (std::pow(i + 0.5, cfg.n) - lo) / cfg.n;
        face[static_cast<std::size_t>(i)] = std::pow(i + 0.5, e);
    }

    auto laplacian = [&](const std::vector<double>& u, std::vector<double>& out) {
        for (int i = 0; i < M; ++i) {
            const std::size_t k = static_cast<std::size_t>(i);
            const double right = face[k] * (u[k + 1] - u[k]);
            const double left = i > 0 ? face[k - 1] * (u[k] - u[k - 1]) : 0.0;
            out[k] = (right - left) / (W[k] * dr * dr);
        }
        out[static_cast<std::size_t>(M)] = 0.0;
    };
    auto forcing = [&](const std::vector<double>& u, double t, std::vector<double>& out) {
        for (std::size_t k = 0; k + 1 < size; ++k) {
            double v = 0.0;
            if (cfg.F) v += cfg.F(u[k]);
            if (cfg.source) v += cfg.source(res.r[k], t);
            out[k] += v;
        }
    };
    auto energy = [&](const std::vector<double>& now, const std::vector<double>& next) {
        double kin = 0.0;
        double pot = 0.0;
        for (std::size_t k = 0; k < size; ++k) {
            const double v = (next[k] - now[k]) / dt;
            kin += W[k] * v * v;
            if (k + 1 < size) {
                pot += face[k] * (next[k + 1] - next[k]) * (now[k + 1] - now[k]) / (dr * dr);
            }
        }
        return 0.5 * (kin + pot) * dr;
    };

    std::vector<double> prev(size), cur(size), next(size), acc(size);
    for (std::size_t k = 0; k < size; ++k) prev[k] = profile.f(res.r[k]);
    laplacian(prev, acc);
    forcing(prev, 0.0, acc);
    for (std::size_t k = 0; k + 1 < size; ++k) {
        cur[k] = prev[k] + dt * profile.g(res.r[k]) + 0.5 * dt * dt * acc[k];
    }
    cur[size - 1] = prev[size - 1];

    const bool homogeneous = !cfg.F && !cfg.source;
    if (homogeneous) res.energy.push_back(energy(prev, cur));

    res.probe_values.assign(cfg.probes.size(), 0.0);
    std::vector<bool> probe_done(cfg.probes.size(), false);
    std::vector<bool> snap_done(cfg.snapshot_times.size(), false);

    // Samples times in [t_{s-1}, t_{s+1}] from the three stored levels.
    auto sample = [&](const std::vector<double>& a, const std::vector<double>& b,
                      const std::vector<double>& c, double t0, bool final_window) {
        const double t_hi = t0 + 2.0 * dt;
        for (std::size_t p = 0; p < cfg.probes.size(); ++p) {
            if (probe_done[p]) continue;
            const auto [pr, pt] = cfg.probes[p];
            if (pt <= t0 + dt + 1e-12 * dt || (final_window && pt <= t_hi + 1e-9 * dt)) {
                const double s = (pt - t0) / dt;
                res.probe_values[p] = quad_time(cubic_at(a, dr, pr), cubic_at(b, dr, pr),
                                                cubic_at(c, dr, pr), s);
                probe_done[p] = true;
            }
        }
        for (std::size_t q = 0; q < cfg.snapshot_times.size(); ++q) {
            if (snap_done[q]) continue;
            const double st = cfg.snapshot_times[q];
            if (st <= t0 + dt + 1e-12 * dt || (final_window && st <= t_hi + 1e-9 * dt)) {
                const double s = (st - t0) / dt;
                Snapshot snap{st, std::vector<double>(size)};
                for (std::size_t k = 0; k < size; ++k) snap.u[k] = quad_time(a[k], b[k], c[k], s);
                res.snapshots.push_back(std::move(snap));
                snap_done[q] = true;
            }
        }
    };

    int step = 1;
    for (; step < steps; ++step) {
        const double t = step * dt;
        laplacian(cur, acc);
        forcing(cur, t, acc);
        double peak = 0.0;
        for (std::size_t k = 0; k + 1 < size; ++k) {
            next[k] = 2.0 * cur[k] - prev[k] + dt * dt * acc[k];
            peak = std::max(peak, std::abs(next[k]));
        }
        next[size - 1] = cur[size - 1];
        if (!(peak <= cfg.blowup_cutoff)) {
            res.status = FdmStatus::CutoffHit;
            res.t_cut = t + dt;
            res.steps = step;
            res.t_final = t;
            res.u_final = cur;
            return res;
        }
        if (homogeneous) res.energy.push_back(energy(cur, next));
        sample(prev, cur, next, t - dt, step + 1 == steps);
        std::swap(prev, cur);
        std::swap(cur, next);
    }
    res.steps = steps;
    res.t_final = steps * dt;
    res.u_final = cur;
    return res;
}

Certificate compare_with_representation(const RadialProfile& profile, int m,
                                        const std::vector<std::pair<double, double>>& points,
                                        const FdmConfig& cfg, const QuadratureSpec& q) {
    FdmConfig run = cfg;
    run.probes = points;
    run.F = nullptr;
    run.source = nullptr;
    const FdmResult res = solve(profile, run);
    const double dr = cfg.r_max / std::llround(cfg.r_max / cfg.dr);
    Certificate cert("fdm-vs-representation", "n=" + std::to_string(cfg.n) + ", m=" + std::to_string(m));
    cert.constants["dr"] = dr;
    cert.constants["dt"] = res.dt;
    cert.constants["m"] = m;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto [r, t] = points[i];
        double rep = 0.0;
        if (cfg.n <= 3) {
            rep = free_solution(profile, cfg.n, r, t, q).value;
        } else if (cfg.n % 2 == 1) {
            rep = u0_odd_value(profile, m, r, t, q);
        } else {
            rep = u0_even_value(profile, m, r, t, q);
        }
        const double allowed = std::max(1e-3 * std::abs(rep), 5.0 * dr * dr);
        const double diff = std::abs(res.probe_values[i] - rep);
        cert.record(allowed - diff, "|u_fdm-u_rep|<=max(1e-3|u|,5dr^2)",
                    Coords{{"r", r}, {"t", t}, {"u_fdm", res.probe_values[i]}, {"u_rep", rep}});
    }
    return cert;
}

}  // namespace radwave
