#include "commands.hpp"

#include <cmath>
#include <filesystem>
#include <functional>
#include <json.hpp>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "radwave/assumptions.hpp"
#include "radwave/blowup.hpp"
#include "radwave/constants.hpp"
#include "radwave/errors.hpp"
#include "radwave/fdm.hpp"
#include "radwave/freewave.hpp"
#include "radwave/region.hpp"
#include "radwave/verify.hpp"

namespace radwave::cli {
namespace {

namespace fs = std::filesystem;

std::string num(double x) { return format_number(x); }

std::pair<int, int> parse_range(const std::string& text) {
    const auto colon = text.find(':');
    try {
        if (colon == std::string::npos) {
            const int v = std::stoi(text);
            return {v, v};
        }
        return {std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1))};
    } catch (const std::exception&) {
        throw ConfigError("expected an integer range like 2:8, got '" + text + "'");
    }
}

std::pair<int, int> parse_grid(const std::string& text) {
    const auto x = text.find('x');
    try {
        if (x == std::string::npos) throw ConfigError("");
        const int a = std::stoi(text.substr(0, x));
        const int b = std::stoi(text.substr(x + 1));
        if (a < 1 || b < 1) throw ConfigError("");
        return {a, b};
    } catch (const std::exception&) {
        throw ConfigError("expected a grid like 64x64, got '" + text + "'");
    }
}

std::vector<std::pair<double, double>> parse_points(const std::string& text) {
    std::vector<std::pair<double, double>> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';')) {
        if (item.empty()) continue;
        const auto colon = item.find(':');
        if (colon == std::string::npos) throw ConfigError("points must look like r:t;r:t");
        try {
            out.emplace_back(std::stod(item.substr(0, colon)), std::stod(item.substr(colon + 1)));
        } catch (const std::exception&) {
            throw ConfigError("malformed point '" + item + "'");
        }
    }
    return out;
}

QuadratureSpec quadrature(RunConfig& c, int lambda = 256, int eta = 128, int xi = 128) {
    QuadratureSpec q;
    q.nodes_lambda = c.integer("nodes_lambda", lambda);
    q.nodes_eta = c.integer("nodes_eta", eta);
    q.nodes_xi = c.integer("nodes_xi", xi);
    const std::string rule = c.str("rule", "gauss-legendre");
    if (rule == "gauss-legendre") {
        q.rule = QuadRule::GaussLegendre;
    } else if (rule == "gauss-chebyshev") {
        q.rule = QuadRule::GaussChebyshevType1;
    } else {
        throw ConfigError("rule must be gauss-legendre or gauss-chebyshev");
    }
    q.validate();
    return q;
}

AssumptionKind default_assumption(int n) {
    const Dimension d = Dimension::from_n(n);
    if (d.low) return AssumptionKind::Low;
    return d.odd ? AssumptionKind::Odd2 : AssumptionKind::Even;
}

struct ResolvedData {
    RadialProfile profile;
    DataAssumptions assumptions;
};

// Builds the profile named by `family` and the assumption record that goes with it.
ResolvedData resolve_data(RunConfig& c, int n, const std::string& default_family_name) {
    const std::string family = c.str("family", default_family_name);
    ResolvedData out;
    DataAssumptions& a = out.assumptions;
    a.p = c.num("p", 2.0);
    a.A = c.num("A", 1.0);
    a.kappa = c.num("kappa", 1.0);
    a.R = c.num("R", 1.0);
    a.which = parse_assumption_kind(c.str("assumption", to_string(default_assumption(n))));
    const int m = std::max(n / 2, 2);

    if (family == "builtin") {
        const double margin = c.num("margin", 0.1);
        const double C1 = c.num("C1", 1.0);
        DataFamily fam;
        switch (a.which) {
            case AssumptionKind::Low:
                fam = low_family(a.p, a.kappa, a.R, C1, c.num("C0", 1.0), margin);
                break;
            case AssumptionKind::Odd1:
                fam = odd1_family(m, a.p, a.kappa, a.R, C1, margin);
                break;
            case AssumptionKind::Odd2:
                fam = odd2_family(m, a.p, a.kappa, a.R, C1, c.num("C2", 1.0), margin);
                break;
            case AssumptionKind::Even:
                fam = even_family(m, a.p, a.kappa, a.R, C1, c.num("C3", 1.0), margin);
                break;
        }
        fam.assumptions.A = a.A;
        out.profile = fam.profile;
        a = fam.assumptions;
    } else {
        if (family == "gaussian") {
            out.profile = gaussian_profile(c.num("f_amp", 1.0), c.num("center", 6.0),
                                           c.num("width", 1.0), c.num("g_amp", 0.0));
        } else if (family == "decay") {
            out.profile = decay_profile(c.num("f_amp", 1.0), c.num("g_amp", 1.0), a.kappa);
        } else if (family == "constant") {
            out.profile = constant_profile(c.num("value", 1.0));
        } else if (family == "zero") {
            out.profile = zero_profile();
        } else if (family == "inverse_square") {
            out.profile = inverse_square_velocity();
        } else {
            throw ConfigError("unknown family '" + family +
                              "' (builtin|gaussian|decay|constant|zero|inverse_square)");
        }
        switch (a.which) {
            case AssumptionKind::Low:
                a.C0 = c.num("C0", 1.0);
                break;
            case AssumptionKind::Odd1:
                a.C1 = c.num("C1", 1.0);
                break;
            case AssumptionKind::Odd2:
                a.C2 = c.num("C2", 1.0);
                break;
            case AssumptionKind::Even:
                a.C3 = c.num("C3", 1.0);
                break;
        }
    }

    const double g_scale = c.num("g_scale", 1.0);
    if (g_scale != 1.0) {
        RadialProfile scaled = out.profile;
        const ScalarFn g = out.profile.g;
        scaled.g = [g, g_scale](double r) { return g_scale * g(r); };
        if (out.profile.dg) {
            const ScalarFn dg = out.profile.dg;
            scaled.dg = [dg, g_scale](double r) { return g_scale * dg(r); };
        }
        scaled.family_name += "-gscaled";
        out.profile = scaled;
    }
    return out;
}

Weight resolve_weight(RunConfig& c) {
    const std::string name = c.str("weight", "one");
    if (name == "one") return unit_weight();
    if (name == "power") return power_weight(c.num("weight_power", 1.5));
    if (name == "oscillating") return oscillating_weight();
    throw ConfigError("weight must be one, power or oscillating");
}

struct Output {
    fs::path dir;
    std::map<std::string, std::string> files;
};

void finish(RunConfig& c, const std::string& command, Output& out) {
    for (const auto& [name, content] : out.files) write_atomic(out.dir / name, content);
    write_atomic(out.dir / "manifest.txt", c.manifest(command));
}

int certificate_result(const Certificate& cert, Output& out, std::ostream& log) {
    out.files["certificate.json"] = cert.to_json();
    out.files["violations.csv"] = cert.violations_csv();
    log << cert.inequality_id << ": " << (cert.certified() ? "certified" : "VIOLATED")
        << " (samples=" << cert.samples << ", worst_margin=" << num(cert.worst_margin)
        << ", violations=" << cert.violation_count << ")\n";
    return cert.certified() ? kOk : kViolation;
}

int cmd_constants(RunConfig& c, Output& out, std::ostream& log) {
    const auto [lo, hi] = parse_range(c.str("m", "2:8"));
    const double p = c.num("p", 2.0);
    const int n = c.integer("n", 5);
    c.reject_unused();
    const CriticalExponents ce = critical_exponents(p, n);
    std::ostringstream csv;
    csv << "m,eta_m,zeta_m,delta,C1m,C2m,Em,p,kappa0,n,p0\n";
    for (int m = lo; m <= hi; ++m) {
        const LemmaConstants lc = lemma_constants(m);
        csv << m << "," << num(lc.eta_m) << "," << num(lc.zeta_m) << "," << num(lc.delta) << ","
            << num(lc.c1m) << "," << num(lc.c2m) << "," << num(lc.e_m) << "," << num(p) << ","
            << num(ce.kappa0) << "," << n << "," << num(ce.p0) << "\n";
    }
    out.files["constants.csv"] = csv.str();
    log << csv.str();
    return kOk;
}

int cmd_free(RunConfig& c, Output& out, std::ostream& log) {
    const int n = c.integer("n", 5);
    const ResolvedData data = resolve_data(c, n, "gaussian");
    const double r_min = c.num("r_min", 4.0);
    const double r_max = c.num("r_max", 10.0);
    const int nr = c.integer("nr", 13);
    const double t_min = c.num("t_min", 0.0);
    const double t_max = c.num("t_max", 3.0);
    const int nt = c.integer("nt", 7);
    const QuadratureSpec q = quadrature(c);
    c.reject_unused();
    if (nr < 1 || nt < 1) throw ConfigError("nr and nt must be positive");

    std::ostringstream csv;
    csv << "r,t,u0,quad_tol\n";
    int skipped = 0;
    for (int i = 0; i < nr; ++i) {
        const double r = nr == 1 ? r_min : r_min + (r_max - r_min) * i / (nr - 1);
        for (int j = 0; j < nt; ++j) {
            const double t = nt == 1 ? t_min : t_min + (t_max - t_min) * j / (nt - 1);
            if (n >= 4 && !(t < r)) {
                ++skipped;
                continue;
            }
            const Evaluation e = free_solution(data.profile, n, r, t, q);
            csv << num(r) << "," << num(t) << "," << num(e.value) << "," << num(e.quad_tol) << "\n";
        }
    }
    out.files["free.csv"] = csv.str();
    log << "free: " << nr * nt - skipped << " points written";
    if (skipped) log << ", " << skipped << " inside the cone skipped";
    log << "\n";
    return kOk;
}

RegionGrid sigma1_grid(RunConfig& c, int m, const std::string& grid_default) {
    const double R = c.num("R", 1.0);
    const auto [nr, nt] = parse_grid(c.str("grid", grid_default));
    return make_sigma1_grid(sigma1_region(2 * m, R), nr, nt);
}

int cmd_verify(const std::string& which, RunConfig& c, Output& out, std::ostream& log) {
    if (which == "nfact") {
        const int samples = c.integer("samples", 1000);
        const int seed = c.integer("seed", 1);
        const double tol = c.num("tol", 1e-10);
        c.reject_unused();
        return certificate_result(
            verify_N_factorization(samples, static_cast<std::uint64_t>(seed), tol), out, log);
    }
    if (which == "theta" || which == "dtheta" || which == "kernel") {
        const int m = c.integer("m", 2);
        const RegionGrid grid = sigma1_grid(c, m, "64x64");
        const double tol = c.num("tol", 1e-10);
        if (which == "theta") {
            const int ls = c.integer("samples", 128);
            c.reject_unused();
            return certificate_result(verify_theta_bound(m, grid, ls, tol), out, log);
        }
        const int s = c.integer("samples", 128);
        if (which == "dtheta") {
            c.reject_unused();
            return certificate_result(verify_dtheta_bounds(m, grid, s, tol), out, log);
        }
        const Weight w = resolve_weight(c);
        const bool fd = c.integer("fd_check", 1) != 0;
        c.reject_unused();
        return certificate_result(verify_kernel_inequality(m, w, grid, s, tol, fd), out, log);
    }
    if (which == "assumption") {
        const int n = c.integer("n", 5);
        const ResolvedData data = resolve_data(c, n, "builtin");
        const double r_check = c.num("r_check", 100.0 * data.assumptions.R);
        const int samples = c.integer("samples", 1000);
        c.reject_unused();
        return certificate_result(
            check_assumption(data.profile, data.assumptions, std::max(n / 2, 2), r_check, samples),
            out, log);
    }
    if (which == "lower-odd" || which == "lower-even") {
        const bool odd = which == "lower-odd";
        const int n = c.integer("n", odd ? 5 : 4);
        if (n < 4 || (n % 2 == 1) != odd) {
            throw ConfigError(which + " needs an " + (odd ? "odd" : "even") + " n >= 4");
        }
        const ResolvedData data = resolve_data(c, n, "builtin");
        const auto [nr, nt] = parse_grid(c.str("grid", "32x32"));
        const RegionGrid grid = make_sigma1_grid(sigma1_region(n, data.assumptions.R), nr, nt);
        const QuadratureSpec q = quadrature(c);
        const double tol = c.num("tol", 1e-10);
        c.reject_unused();
        const Certificate cert =
            odd ? verify_lower_bound_odd(data.profile, data.assumptions, n / 2, grid, q, tol)
                : verify_lower_bound_even(data.profile, data.assumptions, n / 2, grid, q, tol);
        return certificate_result(cert, out, log);
    }
    if (which == "lower-low") {
        const int n = c.integer("n", 3);
        if (n != 2 && n != 3) throw ConfigError("lower-low needs n = 2 or 3");
        const ResolvedData data = resolve_data(c, n, "builtin");
        const auto [nr, nt] = parse_grid(c.str("grid", "32x32"));
        const RegionGrid grid = make_sigma2_grid(sigma2_region(n, data.assumptions.R), nr, nt);
        const QuadratureSpec q = quadrature(c, 256, 64, 64);
        const double tol = c.num("tol", 1e-10);
        c.reject_unused();
        return certificate_result(
            verify_lower_bound_low(lift_radial(data.profile, n), data.assumptions, n, grid, q, tol),
            out, log);
    }
    throw ConfigError("unknown verifier '" + which + "'");
}

IterationConfig iteration_config(RunConfig& c) {
    IterationConfig ic;
    ic.n = c.integer("n", 5);
    ic.p = c.num("p", 2.0);
    ic.A = c.num("A", 1.0);
    ic.R = c.num("R", 1.0);
    ic.r_apex = c.num("apex_r", 0.0);
    ic.t_apex = c.num("apex_t", 0.0);
    ic.levels = c.integer("levels", ic.n <= 3 ? 32 : 128);
    ic.max_iters = c.integer("max_iters", 200);
    ic.threshold = c.num("threshold", 1e6);
    const double seed = c.num("seed_constant", 0.0);
    if (seed > 0.0) ic.seed_constant = seed;
    ic.quad = quadrature(c, 64, 16, 16);
    return ic;
}

std::string sweep_summary(const std::vector<BlowupReport>& reports) {
    std::ostringstream os;
    os << "kappa,kappa0,verdict,diverged_at,value,growth_ratio_30\n";
    for (const auto& r : reports) {
        os << num(r.kappa) << "," << num(r.kappa0) << ","
           << (r.verdict == Verdict::Diverged ? "diverged" : "bounded") << "," << r.diverged_at
           << "," << num(r.value) << "," << num(growth_ratio(r, 30)) << "\n";
    }
    return os.str();
}

int cmd_iterate(RunConfig& c, Output& out, std::ostream& log) {
    IterationConfig ic = iteration_config(c);
    ic.kappa = c.num("kappa", 1.0);
    c.reject_unused();
    const BlowupReport rep = run_iteration(ic);
    out.files["report.json"] = rep.to_json();
    out.files["trajectory.csv"] = trajectory_csv({rep});
    log << "iterate: kappa=" << num(rep.kappa) << " kappa0=" << num(rep.kappa0) << " -> "
        << (rep.verdict == Verdict::Diverged ? "diverged at k=" + std::to_string(rep.diverged_at)
                                             : "bounded at horizon")
        << "\n";
    return kOk;
}

int cmd_sweep(RunConfig& c, Output& out, std::ostream& log) {
    const IterationConfig ic = iteration_config(c);
    const std::vector<double> kappas = c.list("kappas", "0.5,1,1.5,2,3");
    c.reject_unused();
    const auto reports = kappa_sweep(ic, kappas);
    out.files["trajectories.csv"] = trajectory_csv(reports);
    out.files["sweep.csv"] = sweep_summary(reports);
    log << sweep_summary(reports);
    return kOk;
}

FdmConfig fdm_config(RunConfig& c, int n) {
    FdmConfig f;
    f.n = n;
    f.r_max = c.num("fdm_r_max", 20.0);
    f.dr = c.num("dr", 0.01);
    f.cfl = c.num("cfl", 0.5);
    f.t_end = c.num("t_end", 3.0);
    f.blowup_cutoff = c.num("cutoff", 1e8);
    return f;
}

int cmd_fdm(RunConfig& c, Output& out, std::ostream& log) {
    const int n = c.integer("n", 5);
    const ResolvedData data = resolve_data(c, n, "gaussian");
    FdmConfig f = fdm_config(c, n);
    const double A = c.num("A_fdm", 0.0);
    const double p = data.assumptions.p;
    if (A != 0.0) f.F = Nonlinearity::power(A, p).F;
    f.snapshot_times = c.list("snapshots", "");
    c.reject_unused();
    const FdmResult res = solve(data.profile, f);
    nlohmann::ordered_json j;
    j["status"] = res.status == FdmStatus::Completed ? "completed" : "cutoff_hit";
    if (res.status == FdmStatus::CutoffHit) j["t_cut"] = res.t_cut;
    j["steps"] = res.steps;
    j["dt"] = res.dt;
    j["t_final"] = res.t_final;
    if (!res.energy.empty()) j["energy_drift"] = res.energy_drift();
    out.files["summary.json"] = j.dump(2) + "\n";
    out.files["field.csv"] = res.snapshots_csv();
    log << "fdm: " << j["status"].get<std::string>() << " after " << res.steps << " steps\n";
    return kOk;
}

int cmd_compare(RunConfig& c, Output& out, std::ostream& log) {
    const int n = c.integer("n", 5);
    const int m = c.integer("m", std::max(n / 2, 2));
    const ResolvedData data = resolve_data(c, n, "gaussian");
    FdmConfig f = fdm_config(c, n);
    const std::string pts = c.str("points", "4:0.5;5:1;6:1;7:1.5;8:2");
    const QuadratureSpec q = quadrature(c);
    c.reject_unused();
    return certificate_result(compare_with_representation(data.profile, m, parse_points(pts), f, q),
                              out, log);
}

}  // namespace

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names = {"constants",
                                                   "free",
                                                   "verify assumption",
                                                   "verify theta",
                                                   "verify nfact",
                                                   "verify dtheta",
                                                   "verify kernel",
                                                   "verify lower-odd",
                                                   "verify lower-even",
                                                   "verify lower-low",
                                                   "iterate",
                                                   "sweep",
                                                   "fdm",
                                                   "compare"};
    return names;
}

int run_command(const std::string& command, RunConfig& cfg, std::ostream& log) {
    Output out;
    out.dir = cfg.str("out", "radwave-out");
    int code = kOk;
    if (command == "constants") {
        code = cmd_constants(cfg, out, log);
    } else if (command == "free") {
        code = cmd_free(cfg, out, log);
    } else if (command.rfind("verify ", 0) == 0) {
        code = cmd_verify(command.substr(7), cfg, out, log);
    } else if (command == "iterate") {
        code = cmd_iterate(cfg, out, log);
    } else if (command == "sweep") {
        code = cmd_sweep(cfg, out, log);
    } else if (command == "fdm") {
        code = cmd_fdm(cfg, out, log);
    } else if (command == "compare") {
        code = cmd_compare(cfg, out, log);
    } else {
        throw ConfigError("unknown command '" + command + "'");
    }
    finish(cfg, command, out);
    return code;
}

}  // namespace radwave::cli
