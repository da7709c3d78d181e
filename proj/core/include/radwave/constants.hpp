#pragma once

#include "radwave/polynomials.hpp"

namespace radwave {

/// Largest eta in (0, 1] with P_{m-1} >= 1/2 and 0 < P'_{m-1} <= m(m-1)/2 on
/// [1/(1+eta), 1]. The cap value 1 is returned exactly when admissible;
/// otherwise the bisection result (absolute tolerance 1e-6) is scaled by 0.999.
double find_eta_m(int m);

/// Same construction for T_{m-1} with 1/2 <= T <= 1 and 0 < T' <= (m-1)^2.
double find_zeta_m(int m);

/// Checks the defining conditions of eta_m (Legendre) or zeta_m (Chebyshev)
/// on [1/(1+width), 1] by dense sampling with local refinement of the
/// worst sample. Exposed for property tests.
bool endpoint_conditions_hold(PolyKind kind, int m, double width);

struct LemmaConstants {
    int m = 0;
    double eta_m = 0.0;
    double zeta_m = 0.0;
    double delta = 0.0;  ///< max{2/eta_m, 2/zeta_m}
    double c1m = 0.0;    ///< m(m-1)
    double c2m = 0.0;    ///< m - 3/8 + 5 zeta_m (m-1)^2 / 3
    double e_m = 0.0;    ///< m + 1/8 + 5 zeta_m (m-1)^2 / 3
};

/// All constants for a given m. Results are memoised per m (thread-safe).
LemmaConstants lemma_constants(int m);

/// Builds the dependent constants from explicitly supplied eta/zeta.
LemmaConstants lemma_constants_from(int m, double eta_m, double zeta_m);

/// kappa0 = 2/(p-1); throws PreconditionError for p <= 1.
double critical_decay(double p);

/// Positive root of (n-1)p^2 - (n+1)p - 2 = 0 (Strauss exponent), n >= 2.
double strauss_exponent(int n);

struct CriticalExponents {
    double p = 0.0;
    double kappa0 = 0.0;
    int n = 0;
    double p0 = 0.0;
};

CriticalExponents critical_exponents(double p, int n);

/// Parity decomposition n = 2m+1 or n = 2m.
struct Dimension {
    int n = 0;
    int m = 0;
    bool odd = false;
    bool low = false;  ///< n = 2 or 3

    static Dimension from_n(int n);
};

}  // namespace radwave
