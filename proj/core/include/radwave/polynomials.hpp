#pragma once

// Legendre and Chebyshev (first kind) polynomials evaluated by three-term
// recurrences, together with their first two derivatives.

namespace radwave {

inline constexpr int kMaxPolyDegree = 64;

enum class PolyKind { Legendre, Chebyshev };

struct PolyFamily {
    PolyKind kind = PolyKind::Legendre;
    int degree = 0;
};

struct PolyValues {
    double value = 0.0;
    double d1 = 0.0;
    double d2 = 0.0;
};

/// Value and first two derivatives at z. Arguments with |z| <= 1 + 1e-12 are
/// clamped to [-1, 1]; anything further out throws DomainError.
PolyValues poly_eval_all(PolyFamily family, double z);

/// Single derivative order (0, 1 or 2).
double poly_eval(PolyFamily family, double z, int derivative_order = 0);

/// Closed-form endpoint derivatives of P_{m-1} and T_{m-1} at z = 1.
struct EndpointDerivatives {
    int m = 0;
    double p1 = 0.0;  ///< P'_{m-1}(1)  = m(m-1)/2
    double p2 = 0.0;  ///< P''_{m-1}(1) = (m-1)(m-2)/4 * binom(m+1, m-1)
    double t1 = 0.0;  ///< T'_{m-1}(1)  = (m-1)^2
    double t2 = 0.0;  ///< T''_{m-1}(1) = m(m-2)(m-1)^2 / 3
};

/// Computes the closed forms and checks them against the recurrences to 1e-10
/// relative; a mismatch raises InternalError.
EndpointDerivatives poly_endpoint_derivatives(int m);

}  // namespace radwave
