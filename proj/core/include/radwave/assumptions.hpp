#pragma once

#include <optional>
#include <string>

#include "radwave/certificate.hpp"
#include "radwave/profile.hpp"

namespace radwave {

enum class AssumptionKind { Low, Odd1, Odd2, Even };

std::string to_string(AssumptionKind kind);
AssumptionKind parse_assumption_kind(const std::string& name);

/// Parameters of the data/nonlinearity hypotheses. Unused constants stay empty.
struct DataAssumptions {
    double p = 2.0;
    double A = 1.0;
    double kappa = 1.0;
    double R = 1.0;
    AssumptionKind which = AssumptionKind::Odd2;
    std::optional<double> C0, C1, C2, C3;
};

/// Throws PreconditionError unless p > 1, A > 0, R > 0 and 0 < kappa < 2/(p-1).
void check_parameters(const DataAssumptions& a);

/// A built-in profile f = C1 (1+r)^-kappa, g = G (1+r)^(-1-kappa) together
/// with the assumption it is constructed to satisfy.
struct DataFamily {
    RadialProfile profile;
    DataAssumptions assumptions;
    double G = 0.0;
};

/// G is the smallest admissible value times (1 + margin); the supremum of
/// (1 + r)/r over r >= R is attained at r = R.
DataFamily odd1_family(int m, double p, double kappa, double R, double C1 = 1.0,
                       double margin = 0.1);
DataFamily odd2_family(int m, double p, double kappa, double R, double C1 = 1.0, double C2 = 1.0,
                       double margin = 0.1);
DataFamily even_family(int m, double p, double kappa, double R, double C1 = 1.0, double C3 = 1.0,
                       double margin = 0.1);
DataFamily low_family(double p, double kappa, double R, double C1 = 1.0, double C0 = 1.0,
                      double margin = 0.1);

/// Built-in family for dimension n: Low for n = 2, 3, Odd2 for odd n, Even otherwise.
DataFamily default_family(int n, double p, double kappa, double R);

/// Pointwise check of the selected assumption at n_samples log-spaced radii
/// in [R, r_max]. For Low data the profile is radial, so |grad f| = |f'|.
Certificate check_assumption(const RadialProfile& profile, const DataAssumptions& a, int m,
                             double r_max, int n_samples = 1000);

/// Seed constant of the lower bound C t / (1 + r + t)^(1 + kappa):
/// Odd1 -> C1 (1 + (2/3)^m) / 2, Odd2 -> C2 / 4, Even -> C3 / (pi sqrt 2),
/// Low -> C0.
double seed_constant(const DataAssumptions& a, int m);

}  // namespace radwave
