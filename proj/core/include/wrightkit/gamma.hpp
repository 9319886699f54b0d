#pragma once

// Gamma-family primitives: Gamma, log-Gamma, digamma, Beta, Pochhammer and
// the abscissa of the Gamma minimum. Everything here is a pure function of
// its arguments and safe to call concurrently.

namespace wrightkit {

/// Abscissa and value of the minimum of Gamma on (0, inf).
struct GammaMinConstant {
    double x_star;
    double gamma_at_x_star;
};

/// Sign-decomposed log |Gamma(x)|. At a pole, `sign == 0` and `log_abs` is
/// +inf; this encodes the reciprocal-Gamma convention 1/Gamma(pole) = 0 used
/// by the series evaluators.
struct SignedLogGamma {
    double log_abs;
    int sign;  // +1, -1, or 0 at a pole
    bool pole() const { return sign == 0; }
};

/// Gamma(x) for real x. Lanczos approximation, reflection for x < 0.5.
/// Relative error <= 1e-13 on [1e-3, 170].
/// Throws PoleError at non-positive integers, OverflowError past
/// gamma_overflow_threshold().
double gamma(double x);

/// log Gamma(x) for x > 0. Throws DomainError otherwise.
double log_gamma(double x);

/// log |Gamma(x)| with sign, defined for every real x (poles flagged).
SignedLogGamma signed_log_gamma(double x);

/// Euler digamma psi(x) for x > 0. Throws DomainError otherwise.
double digamma(double x);

/// Beta function B(x, y) = Gamma(x)Gamma(y)/Gamma(x+y) for x, y > 0,
/// computed through log-Gamma differences.
double beta(double x, double y);

/// Rising factorial (tau)_n = tau (tau+1) ... (tau+n-1); (tau)_0 = 1.
/// Product form, total for every real tau and n >= 0.
double pochhammer(double tau, int n);

/// Locate the Gamma minimum on (1, 2) by bisecting digamma to 1e-12.
GammaMinConstant find_gamma_min();

/// Largest x for which gamma(x) is finite in double precision (~171.624).
double gamma_overflow_threshold();

/// True if x is exactly a non-positive integer (a Gamma pole).
bool is_gamma_pole(double x);

}  // namespace wrightkit
