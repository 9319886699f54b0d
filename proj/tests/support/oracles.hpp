#pragma once

// Independent test oracles, deliberately decoupled from the library's
// log-Gamma + compensated-summation path:
//   - Gamma at positive integer/half-integer points from exact factorial and
//     double-factorial closed forms, in double-double arithmetic;
//   - plain double-double term-by-term series summation with a 1e-32
//     relative stopping threshold;
//   - a golden-section minimizer for the Gamma minimum.
//
// The dd series oracles therefore cover every grid whose alpha and beta are
// multiples of 1/2, which includes all acceptance grids.

#include <cmath>
#include <stdexcept>

#include "dd.hpp"

namespace oracles {

using ddtest::dd;

inline bool is_half_integer_multiple(double x) {
    return std::nearbyint(2.0 * x) == 2.0 * x;
}

// Gamma(x) for x > 0 with 2x integral: (n-1)! or the half-integer closed form
// Gamma(m + 1/2) = (2m-1)!! sqrt(pi) / 2^m.
inline dd dd_gamma_half(double x) {
    if (!(x > 0.0) || !is_half_integer_multiple(x)) {
        throw std::invalid_argument("dd_gamma_half: x must be a positive multiple of 1/2");
    }
    if (std::nearbyint(x) == x) {
        dd acc = ddtest::from(1.0);
        for (double k = 2.0; k < x - 0.5; k += 1.0) acc = ddtest::mul(acc, k);
        return acc;
    }
    dd acc = ddtest::sqrt_pi();
    for (double f = x - 1.0; f > 0.0; f -= 1.0) acc = ddtest::mul(acc, f);
    return acc;
}

// W_{alpha,beta}(z) summed in double-double; requires alpha, beta multiples
// of 1/2 so every Gamma(alpha k + beta) has an exact closed form.
inline dd dd_wright(double alpha, double beta, double z, int max_terms = 400) {
    dd sum = ddtest::from(0.0);
    dd zpow = ddtest::from(1.0);
    dd kfact = ddtest::from(1.0);
    for (int k = 0; k < max_terms; ++k) {
        if (k > 0) {
            zpow = ddtest::mul(zpow, z);
            kfact = ddtest::mul(kfact, double(k));
        }
        const dd g = dd_gamma_half(alpha * k + beta);
        const dd term = ddtest::div(zpow, ddtest::mul(kfact, g));
        sum = ddtest::add(sum, term);
        if (k > 4 &&
            ddtest::dd_abs(term).hi <= 1e-32 * std::fabs(ddtest::dd_abs(sum).hi) + 1e-320) {
            break;
        }
    }
    return sum;
}

// W^{gamma,sigma}_{alpha,beta}(z) in double-double; gamma/sigma arbitrary
// positive reals (the Pochhammer products are exact dd updates).
inline dd dd_gen_wright(double alpha, double beta, double gamma, double sigma, double z,
                        int max_terms = 400) {
    dd sum = ddtest::from(0.0);
    dd zpow = ddtest::from(1.0);
    dd kfact = ddtest::from(1.0);
    dd poch_g = ddtest::from(1.0);
    dd poch_s = ddtest::from(1.0);
    for (int k = 0; k < max_terms; ++k) {
        if (k > 0) {
            zpow = ddtest::mul(zpow, z);
            kfact = ddtest::mul(kfact, double(k));
            poch_g = ddtest::mul(poch_g, gamma + (k - 1));
            poch_s = ddtest::mul(poch_s, sigma + (k - 1));
        }
        const dd g = dd_gamma_half(alpha * k + beta);
        dd term = ddtest::div(zpow, ddtest::mul(kfact, g));
        term = ddtest::mul(term, ddtest::div(poch_g, poch_s));
        sum = ddtest::add(sum, term);
        if (k > 4 &&
            ddtest::dd_abs(term).hi <= 1e-32 * std::fabs(ddtest::dd_abs(sum).hi) + 1e-320) {
            break;
        }
    }
    return sum;
}

// Four-parametric Mittag-Leffler in double-double; offsets and weights must
// keep every Gamma argument a positive multiple of 1/2.
inline dd dd_ml4(double B1, double beta1, double B2, double beta2, double z,
                 int max_terms = 400) {
    dd sum = ddtest::from(0.0);
    dd zpow = ddtest::from(1.0);
    for (int k = 0; k < max_terms; ++k) {
        if (k > 0) zpow = ddtest::mul(zpow, z);
        const dd g1 = dd_gamma_half(beta1 + B1 * k);
        const dd g2 = dd_gamma_half(beta2 + B2 * k);
        const dd term = ddtest::div(zpow, ddtest::mul(g1, g2));
        sum = ddtest::add(sum, term);
        if (k > 4 &&
            ddtest::dd_abs(term).hi <= 1e-32 * std::fabs(ddtest::dd_abs(sum).hi) + 1e-320) {
            break;
        }
    }
    return sum;
}

// Golden-section minimizer, used as the independent route to the Gamma
// minimum abscissa.
template <typename F>
double golden_min(F&& f, double lo, double hi, double tol = 1e-10) {
    const double inv_phi = 0.6180339887498949;
    double a = lo, b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > tol) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace oracles
