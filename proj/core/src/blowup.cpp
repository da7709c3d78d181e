#include "radwave/blowup.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "radwave/assumptions.hpp"
#include "radwave/constants.hpp"
#include "radwave/errors.hpp"
#include "radwave/freewave.hpp"
#include "radwave/parallel.hpp"
#include "radwave/region.hpp"

namespace radwave {
namespace {

constexpr int kMinLevels = 4;
constexpr int kMaxIters = 200;

const char* kDisclaimer =
    "Empirical observation at finite resolution and finite iteration count; "
    "not a proof of blow-up or of global existence.";

void check_monotone(const IterationState& before, const IterationState& after) {
    const int N = before.grid.levels;
    for (int i = 0; i <= N; ++i) {
        for (int j = i; j <= N; ++j) {
            const std::size_t id = before.grid.index(i, j);
            const double a = before.values[id];
            const double b = after.values[id];
            if (std::isnan(b) || b < a - 1e-14 * std::abs(a)) {
                throw InternalError("Picard iterate decreased at a grid node");
            }
        }
    }
}

}  // namespace

Nonlinearity Nonlinearity::power(double A, double p) {
    if (!(A >= 0.0)) throw PreconditionError("A must be non-negative");
    if (!(p > 1.0)) throw PreconditionError("p must exceed 1");
    Nonlinearity nl = custom("power", [A, p](double s) { return s <= 0.0 ? 0.0 : A * std::pow(s, p); });
    nl.A = A;
    nl.p = p;
    return nl;
}

Nonlinearity Nonlinearity::custom(std::string name, std::function<double(double)> F) {
    double prev = F(0.0);
    if (!(prev >= 0.0)) throw PreconditionError("F must be non-negative on [0, inf)");
    for (int i = 1; i <= 400; ++i) {
        const double s = std::pow(10.0, -6.0 + 12.0 * i / 400.0);
        const double v = F(s);
        if (!(v >= 0.0)) throw PreconditionError("F must be non-negative on [0, inf)");
        if (v < prev) throw PreconditionError("F must be nondecreasing on [0, inf)");
        prev = v;
    }
    Nonlinearity nl;
    nl.name = std::move(name);
    nl.F = std::move(F);
    return nl;
}

CharacteristicGrid::CharacteristicGrid(double r, double t, int n_levels)
    : r_apex(r), t_apex(t), levels(n_levels), alpha0(r - t), h(2.0 * t / n_levels) {
    if (n_levels < kMinLevels) {
        throw GridTooCoarse("characteristic grid needs at least " + std::to_string(kMinLevels) +
                            " levels");
    }
    if (!(t > 0.0) || !(r - t > 0.0)) throw DomainError("apex must satisfy r* > t* > 0");
}

IterationState make_state(int n, double kappa, double seed_constant, double r_apex, double t_apex,
                          int levels) {
    if (!(kappa > 0.0)) throw PreconditionError("kappa must be positive");
    IterationState s;
    s.grid = CharacteristicGrid(r_apex, t_apex, levels);
    s.n = n;
    s.kappa = kappa;
    s.seed_constant = seed_constant;
    s.seed.assign(s.grid.size(), 0.0);
    const int N = s.grid.levels;
    for (int i = 0; i <= N; ++i) {
        for (int j = i; j <= N; ++j) {
            const double lam = s.grid.lambda(i, j);
            const double tau = s.grid.tau(i, j);
            s.seed[s.grid.index(i, j)] = seed_constant * tau / std::pow(1.0 + lam + tau, 1.0 + kappa);
        }
    }
    s.values = s.seed;
    s.history.push_back(s.apex_value());
    return s;
}

IterationState duhamel_apply_high(const IterationState& state, int m, const Nonlinearity& F) {
    const CharacteristicGrid& g = state.grid;
    const int N = g.levels;
    if (N < kMinLevels) throw GridTooCoarse("characteristic grid is too coarse");

    // lambda^m F(u) with lambda^m scaled by alpha0^m to keep magnitudes moderate.
    std::vector<double> G(g.size(), 0.0);
    for (int i = 0; i <= N; ++i) {
        for (int j = i; j <= N; ++j) {
            const std::size_t id = g.index(i, j);
            G[id] = std::pow(g.lambda(i, j) / g.alpha0, m) * F.F(state.values[id]);
        }
    }

    // S(i, j) = integral of G d alpha d beta over i <= a <= b <= j, built
    // column by column from nonnegative cell contributions only.
    const double square = g.h * g.h / 4.0;
    const double tri = g.h * g.h / 6.0;
    std::vector<double> S(g.size(), 0.0);
    std::vector<double> suffix(static_cast<std::size_t>(N + 1), 0.0);
    for (int j = 1; j <= N; ++j) {
        double run = tri * (G[g.index(j - 1, j - 1)] + G[g.index(j - 1, j)] + G[g.index(j, j)]);
        suffix[static_cast<std::size_t>(j - 1)] = run;
        for (int a = j - 2; a >= 0; --a) {
            run += square * (G[g.index(a, j - 1)] + G[g.index(a, j)] + G[g.index(a + 1, j - 1)] +
                             G[g.index(a + 1, j)]);
            suffix[static_cast<std::size_t>(a)] = run;
        }
        for (int i = 0; i < j; ++i) {
            S[g.index(i, j)] = S[g.index(i, j - 1)] + suffix[static_cast<std::size_t>(i)];
        }
    }

    IterationState next = state;
    for (int i = 0; i <= N; ++i) {
        for (int j = i; j <= N; ++j) {
            const std::size_t id = g.index(i, j);
            // d lambda d tau = d alpha d beta / 2.
            const double scale = std::pow(g.alpha0 / g.lambda(i, j), m) / 8.0;
            next.values[id] = state.seed[id] + scale * 0.5 * S[id];
        }
    }
    next.k = state.k + 1;
    next.history.push_back(next.apex_value());
    check_monotone(state, next);
    return next;
}

IterationState duhamel_apply_low(const IterationState& state, int n, const Nonlinearity& F,
                                 const QuadratureSpec& q) {
    if (n != 2 && n != 3) throw DomainError("duhamel_apply_low needs n = 2 or 3");
    const CharacteristicGrid& g = state.grid;
    const int N = g.levels;
    if (N < kMinLevels) throw GridTooCoarse("characteristic grid is too coarse");

    // Along time level l the nodes (i, i + l) are equally spaced in lambda.
    auto level_value = [&](int l, double rho) {
        const double x = (rho - g.alpha0 - 0.5 * l * g.h) / g.h;
        const int last = N - l;
        double pos = std::clamp(x, 0.0, static_cast<double>(last));
        int i0 = std::min(static_cast<int>(std::floor(pos)), std::max(last - 1, 0));
        if (last == 0) return state.values[g.index(0, l)];
        const double w = pos - i0;
        return (1.0 - w) * state.values[g.index(i0, i0 + l)] +
               w * state.values[g.index(i0 + 1, i0 + 1 + l)];
    };

    IterationState next = state;
    const std::size_t nodes = static_cast<std::size_t>(N + 1);
    parallel_chunks(nodes, [&](std::size_t b, std::size_t e, std::size_t) {
        for (std::size_t ii = b; ii < e; ++ii) {
            const int i = static_cast<int>(ii);
            for (int j = i; j <= N; ++j) {
                const double lam = g.lambda(i, j);
                const int top = j - i;
                double acc = 0.0;
                // Trapezoid over levels 0..top in tau; the endpoint terms vanish
                // (F(u) = 0 at tau = 0 and R(. | x, 0) = 0).
                for (int l = 1; l < top; ++l) {
                    const double s = 0.5 * (top - l) * g.h;
                    auto phi = [&](double rho) { return F.F(level_value(l, rho)); };
                    acc += riemann_radial(phi, n, lam, s, q);
                }
                const std::size_t id = g.index(i, j);
                next.values[id] = state.seed[id] + 0.5 * g.h * acc;
            }
        }
    });
    next.k = state.k + 1;
    next.history.push_back(next.apex_value());
    check_monotone(state, next);
    return next;
}

std::pair<double, double> resolve_apex(const IterationConfig& cfg) {
    if (cfg.r_apex > 0.0) return {cfg.r_apex, cfg.t_apex};
    const Region reg = cfg.n <= 3 ? sigma2_region(cfg.n, cfg.R) : sigma1_region(cfg.n, cfg.R);
    const double r = 10.0 * cfg.R;
    return {r, 0.9 * reg.t_max(r)};
}

BlowupReport run_iteration(const IterationConfig& cfg) {
    if (cfg.max_iters < 0 || cfg.max_iters > kMaxIters) {
        throw ConfigError("max_iters must lie in [0, 200]");
    }
    if (!(cfg.threshold > 0.0)) throw ConfigError("threshold must be positive");
    if (!(cfg.kappa > 0.0)) throw PreconditionError("kappa must be positive");
    const Dimension dim = Dimension::from_n(cfg.n);
    const Nonlinearity F = Nonlinearity::power(cfg.A, cfg.p);
    const auto [r_apex, t_apex] = resolve_apex(cfg);

    const Region reg = dim.low ? sigma2_region(cfg.n, cfg.R) : sigma1_region(cfg.n, cfg.R);
    if (!reg.contains(r_apex, t_apex) || !(t_apex > 0.0)) {
        throw PreconditionError("apex (" + std::to_string(r_apex) + ", " + std::to_string(t_apex) +
                                ") is not in " + reg.describe());
    }

    double c = 0.0;
    if (cfg.seed_constant) {
        c = *cfg.seed_constant;
    } else {
        const DataFamily fam = default_family(cfg.n, cfg.p, std::min(cfg.kappa, 0.5 * critical_decay(cfg.p)), cfg.R);
        c = seed_constant(fam.assumptions, dim.m);
    }

    IterationState state = make_state(cfg.n, cfg.kappa, c, r_apex, t_apex, cfg.levels);
    BlowupReport rep;
    rep.n = cfg.n;
    rep.p = cfg.p;
    rep.A = cfg.A;
    rep.kappa = cfg.kappa;
    rep.kappa0 = critical_decay(cfg.p);
    rep.r_apex = r_apex;
    rep.t_apex = t_apex;
    rep.levels = cfg.levels;
    rep.threshold = cfg.threshold;
    rep.seed_constant = c;
    rep.disclaimer = kDisclaimer;

    for (int k = 1; k <= cfg.max_iters; ++k) {
        state = dim.low ? duhamel_apply_low(state, cfg.n, F, cfg.quad)
                        : duhamel_apply_high(state, dim.m, F);
        const double apex = state.apex_value();
        if (!std::isfinite(apex) || apex > cfg.threshold) {
            rep.verdict = Verdict::Diverged;
            rep.diverged_at = k;
            rep.value = apex;
            rep.history = state.history;
            return rep;
        }
    }
    rep.verdict = Verdict::BoundedAtHorizon;
    rep.history = state.history;
    rep.value = *std::max_element(rep.history.begin(), rep.history.end());
    return rep;
}

double growth_ratio(const BlowupReport& report, int k) {
    if (report.history.empty() || k < 0) throw DomainError("growth ratio needs a history and k >= 0");
    const std::size_t idx = std::min<std::size_t>(static_cast<std::size_t>(k), report.history.size() - 1);
    return report.history[idx] / report.history.front();
}

std::vector<BlowupReport> kappa_sweep(const IterationConfig& base, const std::vector<double>& kappas) {
    std::vector<BlowupReport> out(kappas.size());
    for (std::size_t i = 0; i < kappas.size(); ++i) {
        IterationConfig cfg = base;
        cfg.kappa = kappas[i];
        out[i] = run_iteration(cfg);
    }
    return out;
}

std::string trajectory_csv(const std::vector<BlowupReport>& reports) {
    std::ostringstream os;
    os.precision(17);
    os << "kappa,iter,apex_value\n";
    for (const auto& r : reports) {
        for (std::size_t k = 0; k < r.history.size(); ++k) {
            os << r.kappa << "," << k << "," << r.history[k] << "\n";
        }
    }
    return os.str();
}

std::string BlowupReport::to_json() const {
    nlohmann::ordered_json j;
    j["n"] = n;
    j["p"] = p;
    j["A"] = A;
    j["kappa"] = kappa;
    j["kappa0"] = kappa0;
    j["apex"] = {{"r", r_apex}, {"t", t_apex}};
    j["levels"] = levels;
    j["threshold"] = threshold;
    j["seed_constant"] = seed_constant;
    j["verdict"] = verdict == Verdict::Diverged ? "diverged" : "bounded_at_horizon";
    if (verdict == Verdict::Diverged) {
        j["diverged_at"] = diverged_at;
        j["value"] = std::isfinite(value) ? nlohmann::ordered_json(value) : nlohmann::ordered_json("inf");
    } else {
        j["max_value"] = value;
    }
    j["iterations"] = history.empty() ? 0 : static_cast<int>(history.size()) - 1;
    j["growth_ratio_30"] = history.empty() ? 0.0 : growth_ratio(*this, 30);
    j["disclaimer"] = disclaimer;
    return j.dump(2) + "\n";
}

}  // namespace radwave
