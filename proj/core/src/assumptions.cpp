#include "radwave/assumptions.hpp"

#include <cmath>
#include <numbers>

#include "radwave/constants.hpp"
#include "radwave/errors.hpp"

namespace radwave {
namespace {

double require(const std::optional<double>& c, const char* name) {
    if (!c) throw PreconditionError(std::string("assumption needs constant ") + name);
    if (!(*c > 0.0)) throw PreconditionError(std::string(name) + " must be positive");
    return *c;
}

DataFamily make_family(AssumptionKind kind, double p, double kappa, double R, double C1, double G) {
    DataFamily fam;
    fam.G = G;
    fam.profile = decay_profile(C1, G, kappa);
    fam.profile.family_name = "decay-" + to_string(kind);
    fam.assumptions.p = p;
    fam.assumptions.kappa = kappa;
    fam.assumptions.R = R;
    fam.assumptions.which = kind;
    fam.assumptions.C1 = C1;
    return fam;
}

}  // namespace

std::string to_string(AssumptionKind kind) {
    switch (kind) {
        case AssumptionKind::Low:
            return "low";
        case AssumptionKind::Odd1:
            return "odd1";
        case AssumptionKind::Odd2:
            return "odd2";
        case AssumptionKind::Even:
            return "even";
    }
    return "unknown";
}

AssumptionKind parse_assumption_kind(const std::string& name) {
    if (name == "low") return AssumptionKind::Low;
    if (name == "odd1") return AssumptionKind::Odd1;
    if (name == "odd2") return AssumptionKind::Odd2;
    if (name == "even") return AssumptionKind::Even;
    throw ConfigError("unknown assumption '" + name + "' (expected low|odd1|odd2|even)");
}

void check_parameters(const DataAssumptions& a) {
    if (!(a.p > 1.0)) throw PreconditionError("p must exceed 1");
    if (!(a.A > 0.0)) throw PreconditionError("A must be positive");
    if (!(a.R > 0.0)) throw PreconditionError("R must be positive");
    const double k0 = critical_decay(a.p);
    if (!(a.kappa > 0.0) || !(a.kappa < k0)) {
        throw PreconditionError("kappa must lie in (0, kappa0) with kappa0 = " +
                                std::to_string(k0));
    }
}

DataFamily odd1_family(int m, double p, double kappa, double R, double C1, double margin) {
    const double c1m = m * (m - 1.0);
    const double G = (1.0 + margin) * c1m * C1 * (1.0 + R) / R;
    return make_family(AssumptionKind::Odd1, p, kappa, R, C1, G);
}

DataFamily odd2_family(int m, double p, double kappa, double R, double C1, double C2,
                       double margin) {
    const double c1m = m * (m - 1.0);
    const double G = (1.0 + margin) * (C2 + c1m * C1 * (1.0 + R) / R);
    DataFamily fam = make_family(AssumptionKind::Odd2, p, kappa, R, C1, G);
    fam.assumptions.C2 = C2;
    return fam;
}

DataFamily even_family(int m, double p, double kappa, double R, double C1, double C3,
                       double margin) {
    const double c2m = lemma_constants(m).c2m;
    const double G = 2.0 * (1.0 + margin) * (C3 + c2m * C1 * (1.0 + R) / R + kappa * C1);
    DataFamily fam = make_family(AssumptionKind::Even, p, kappa, R, C1, G);
    fam.assumptions.C3 = C3;
    return fam;
}

DataFamily low_family(double p, double kappa, double R, double C1, double C0, double margin) {
    const double G = std::max(C0 - C1 * (1.0 - kappa), 0.0) + margin * C0;
    DataFamily fam = make_family(AssumptionKind::Low, p, kappa, R, C1, G);
    fam.assumptions.C0 = C0;
    return fam;
}

DataFamily default_family(int n, double p, double kappa, double R) {
    const Dimension d = Dimension::from_n(n);
    if (d.low) return low_family(p, kappa, R);
    return d.odd ? odd2_family(d.m, p, kappa, R) : even_family(d.m, p, kappa, R);
}

Certificate check_assumption(const RadialProfile& profile, const DataAssumptions& a, int m,
                             double r_max, int n_samples) {
    check_parameters(a);
    if (!(r_max > a.R)) throw PreconditionError("r_max must exceed R");
    if (n_samples < 100) throw PreconditionError("at least 100 samples are required");

    Certificate cert("assumption-" + to_string(a.which),
                     "r in [" + std::to_string(a.R) + ", " + std::to_string(r_max) + "]");
    cert.constants["kappa0"] = critical_decay(a.p);
    const double c1m = m * (m - 1.0);
    double c2m = 0.0;
    if (a.which == AssumptionKind::Even) {
        c2m = lemma_constants(m).c2m;
        cert.constants["C2m"] = c2m;
    } else if (a.which != AssumptionKind::Low) {
        cert.constants["C1m"] = c1m;
    }

    const double la = std::log(a.R);
    const double lb = std::log(r_max);
    for (int i = 0; i < n_samples; ++i) {
        const double r = std::exp(la + (lb - la) * i / (n_samples - 1));
        const double f = profile.f(r);
        const double g = profile.g(r);
        const double decay = std::pow(1.0 + r, -1.0 - a.kappa);
        std::vector<std::pair<std::string, double>> at{{"r", r}};
        switch (a.which) {
            case AssumptionKind::Low: {
                const double C0 = require(a.C0, "C0");
                cert.record_strict(f, "f>0", at);
                const double lhs = f / (1.0 + r) - std::abs(profile.f_prime(r)) + g;
                cert.record(lhs - C0 * decay, "f/(1+r)-|f'|+g>=C0(1+r)^(-1-kappa)", at);
                break;
            }
            case AssumptionKind::Odd1: {
                const double C1 = require(a.C1, "C1");
                cert.record(f - C1 * std::pow(1.0 + r, -a.kappa), "f>=C1(1+r)^(-kappa)", at);
                cert.record_strict(g, "g>0", at);
                cert.record_strict(-c1m * f / r + g, "-C1m f/r+g>0", at);
                break;
            }
            case AssumptionKind::Odd2: {
                const double C2 = require(a.C2, "C2");
                cert.record_strict(f, "f>0", at);
                cert.record_strict(g, "g>0", at);
                cert.record(-c1m * f / r + g - C2 * decay, "-C1m f/r+g>=C2(1+r)^(-1-kappa)", at);
                break;
            }
            case AssumptionKind::Even: {
                const double C3 = require(a.C3, "C3");
                cert.record_strict(f, "f>0", at);
                cert.record_strict(g, "g>0", at);
                const double lhs = -c2m * f / r - std::abs(profile.f_prime(r)) + 0.5 * g;
                cert.record(lhs - C3 * decay, "-C2m f/r-|f'|+g/2>=C3(1+r)^(-1-kappa)", at);
                break;
            }
        }
    }
    if (!profile.has_analytic_df() &&
        (a.which == AssumptionKind::Even || a.which == AssumptionKind::Low)) {
        cert.notes.push_back("f' approximated by central differences");
    }
    return cert;
}

double seed_constant(const DataAssumptions& a, int m) {
    switch (a.which) {
        case AssumptionKind::Low:
            return require(a.C0, "C0");
        case AssumptionKind::Odd1:
            return 0.5 * require(a.C1, "C1") * (1.0 + std::pow(2.0 / 3.0, m));
        case AssumptionKind::Odd2:
            return require(a.C2, "C2") / 4.0;
        case AssumptionKind::Even:
            return require(a.C3, "C3") / (std::numbers::pi * std::numbers::sqrt2);
    }
    throw InternalError("unhandled assumption kind");
}

}  // namespace radwave
