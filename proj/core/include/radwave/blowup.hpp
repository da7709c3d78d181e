#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "radwave/quadrature.hpp"

namespace radwave {

/// Nonlinear term F. Construction samples F on [0, 1e6] and rejects
/// functions that are negative or decreasing there.
struct Nonlinearity {
    std::string name;
    double A = 0.0;
    double p = 1.0;
    std::function<double(double)> F;

    static Nonlinearity power(double A, double p);
    static Nonlinearity custom(std::string name, std::function<double(double)> F);
};

/// Characteristic grid below the apex (r*, t*): nodes (i, j) with
/// 0 <= i <= j <= N sit at alpha = r - t = alpha0 + i h and
/// beta = r + t = alpha0 + j h, where alpha0 = r* - t* and h = 2 t* / N.
/// The apex is (0, N) and the characteristic triangle below node (i, j) is
/// the set of nodes (a, b) with i <= a <= b <= j.
struct CharacteristicGrid {
    double r_apex = 0.0;
    double t_apex = 0.0;
    int levels = 0;
    double alpha0 = 0.0;
    double h = 0.0;

    CharacteristicGrid() = default;
    CharacteristicGrid(double r_apex, double t_apex, int levels);

    std::size_t index(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(levels + 1) +
               static_cast<std::size_t>(j);
    }
    std::size_t size() const {
        return static_cast<std::size_t>(levels + 1) * static_cast<std::size_t>(levels + 1);
    }
    double lambda(int i, int j) const { return alpha0 + 0.5 * (i + j) * h; }
    double tau(int i, int j) const { return 0.5 * (j - i) * h; }
    std::size_t apex() const { return index(0, levels); }
};

struct IterationState {
    CharacteristicGrid grid;
    int n = 5;
    double kappa = 1.0;
    double seed_constant = 0.0;
    int k = 0;
    /// Values at nodes i <= j (other entries unused and zero).
    std::vector<double> values;
    std::vector<double> seed;
    /// Apex value after each iteration, starting with the seed.
    std::vector<double> history;

    double apex_value() const { return values[grid.apex()]; }
};

/// State with u_0 = seed C t / (1 + r + t)^(1 + kappa). Throws GridTooCoarse
/// if levels < 4.
IterationState make_state(int n, double kappa, double seed_constant, double r_apex, double t_apex,
                          int levels);

/// One Picard step of u -> seed + (1 / 8 r^m) * integral of lambda^m F(u)
/// over the characteristic triangle, by the trapezoid rule on the grid cells.
IterationState duhamel_apply_high(const IterationState& state, int m, const Nonlinearity& F);

/// One Picard step of u -> seed + integral over tau of R(F(u(., tau)) | x, t - tau),
/// with the radial Riemann operator and linear interpolation of u along each
/// time level.
IterationState duhamel_apply_low(const IterationState& state, int n, const Nonlinearity& F,
                                 const QuadratureSpec& q);

struct IterationConfig {
    int n = 5;
    double p = 2.0;
    double A = 1.0;
    double kappa = 1.0;
    double R = 1.0;
    /// Apex; when r_apex <= 0 the default r* = 10 R, t* = 0.9 t_max(r*) is used.
    double r_apex = 0.0;
    double t_apex = 0.0;
    int levels = 128;
    int max_iters = 200;
    double threshold = 1e6;
    std::optional<double> seed_constant;
    QuadratureSpec quad{64, 16, 16, QuadRule::GaussLegendre};
};

enum class Verdict { Diverged, BoundedAtHorizon };

struct BlowupReport {
    int n = 0;
    double p = 0.0;
    double A = 0.0;
    double kappa = 0.0;
    double kappa0 = 0.0;
    double r_apex = 0.0;
    double t_apex = 0.0;
    int levels = 0;
    double threshold = 0.0;
    double seed_constant = 0.0;
    Verdict verdict = Verdict::BoundedAtHorizon;
    int diverged_at = -1;   ///< iteration index when Diverged
    double value = 0.0;     ///< apex value at divergence, or the largest apex value
    std::vector<double> history;
    std::string disclaimer;

    std::string to_json() const;
};

/// Resolves the default apex for a config (see IterationConfig).
std::pair<double, double> resolve_apex(const IterationConfig& cfg);

BlowupReport run_iteration(const IterationConfig& cfg);

/// history[min(k, last)] / history[0]; a diverged run is frozen at its last
/// recorded value.
double growth_ratio(const BlowupReport& report, int k);

std::vector<BlowupReport> kappa_sweep(const IterationConfig& base, const std::vector<double>& kappas);

/// CSV with columns kappa,iter,apex_value.
std::string trajectory_csv(const std::vector<BlowupReport>& reports);

}  // namespace radwave
