#pragma once

// Quadrature over the kernel integral representations of the Wright family.
// These routes are independent of the series path and serve as its
// cross-validation oracle.

#include "wrightkit/types.hpp"

namespace wrightkit {

enum class QuadRule {
    jacobi_weighted,      // substitution + Gauss-Jacobi, endpoint weights exact
    adaptive_subdivision  // adaptive Gauss-Legendre on the raw integrand
};

struct QuadratureSpec {
    int node_count = 32;           // starting node count, >= 8
    double target_abs_tol = 1e-10;
    QuadRule rule = QuadRule::jacobi_weighted;
};

/// W_{alpha,beta}(z) = 1/(alpha Gamma(beta-alpha))
///   * Int_0^1 (1 - t^{1/alpha})^{beta-alpha-1} W_{alpha,alpha}(z t) dt,
/// valid for beta > alpha > 0. The jacobi_weighted rule substitutes t = u^alpha
/// so the weight (1-u)^{beta-alpha-1} u^{alpha-1} absorbs both endpoint
/// singularities.
Evaluation wright_via_lemma1(const WrightParams& p, double z, const QuadratureSpec& q = {});

/// W^{gamma,sigma}_{alpha,beta}(z) = Gamma(sigma)/(Gamma(gamma)Gamma(sigma-gamma))
///   * Int_0^1 t^{gamma-1} (1-t)^{sigma-gamma-1} W_{alpha,beta}(z t) dt,
/// valid for sigma > gamma > 0, alpha > -1.
Evaluation gen_wright_via_eq34(const GenWrightParams& p, double z, const QuadratureSpec& q = {});

/// W^{gamma,sigma}_{alpha,beta}(z) = 1/(alpha Gamma(beta-alpha))
///   * Int_0^1 (1 - t^{1/alpha})^{beta-alpha-1} W^{gamma,sigma}_{alpha,alpha}(z t) dt,
/// the generalized kernel form, valid for beta > alpha > 0.
Evaluation gen_wright_via_remark(const GenWrightParams& p, double z, const QuadratureSpec& q = {});

namespace quadrature {

/// Nodes/weights for Int_0^1 (1-u)^a u^b f(u) du ~ sum w_i f(u_i).
/// Requires a, b > -1. Tables are memoized behind an internal mutex.
struct JacobiRule {
    std::vector<double> nodes;    // in (0, 1)
    std::vector<double> weights;  // positive
};
const JacobiRule& gauss_jacobi_01(int n, double a, double b);

}  // namespace quadrature

}  // namespace wrightkit
