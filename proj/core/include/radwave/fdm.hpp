#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "radwave/certificate.hpp"
#include "radwave/profile.hpp"
#include "radwave/quadrature.hpp"

namespace radwave {

struct FdmConfig {
    int n = 5;
    double r_max = 40.0;
    double dr = 0.01;
    double cfl = 0.5;  ///< dt <= cfl * dr, adjusted so t_end is hit exactly
    double t_end = 1.0;
    /// Nonlinearity F(u); empty means the homogeneous equation.
    std::function<double(double)> F;
    double blowup_cutoff = 1e8;
    /// Optional forcing S(r, t) added to the right-hand side.
    std::function<double(double, double)> source;
    std::vector<double> snapshot_times;
    /// Points (r, t) at which the solution is sampled during the run.
    std::vector<std::pair<double, double>> probes;

    void validate() const;
};

enum class FdmStatus { Completed, CutoffHit };

struct Snapshot {
    double t = 0.0;
    std::vector<double> u;
};

struct FdmResult {
    FdmStatus status = FdmStatus::Completed;
    double t_cut = 0.0;     ///< time at which the cutoff was exceeded
    double dt = 0.0;
    int steps = 0;
    double t_final = 0.0;   ///< time of u_final
    std::vector<double> r;
    std::vector<double> u_final;
    std::vector<double> probe_values;
    /// Discrete energy at each half step (homogeneous runs conserve it).
    std::vector<double> energy;
    std::vector<Snapshot> snapshots;

    /// max |E - E_0| / |E_0| over the run.
    double energy_drift() const;
    /// CSV with columns r,t,u for every snapshot.
    std::string snapshots_csv() const;
};

/// Leapfrog solve of u_tt = u_rr + ((n-1)/r) u_r + F(u) + S on [0, r_max]
/// with the conservative r^(n-1) weighted Laplacian (n u_rr at r = 0), a
/// Taylor first step and a Dirichlet condition u(r_max, t) = f(r_max).
FdmResult solve(const RadialProfile& profile, const FdmConfig& cfg);

/// |u_FDM - u_rep| <= max(1e-3 |u_rep|, 5 dr^2) at each point, where u_rep is
/// u0_odd (cfg.n odd) or u0_even (cfg.n even) with the given m; for
/// cfg.n = 2, 3 the low-dimensional evaluator is used and m is ignored.
Certificate compare_with_representation(const RadialProfile& profile, int m,
                                        const std::vector<std::pair<double, double>>& points,
                                        const FdmConfig& cfg, const QuadratureSpec& q = {});

}  // namespace radwave
