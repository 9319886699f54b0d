#pragma once

// Error-controlled truncated-series evaluation of the Wright, generalized
// Wright, Fox-Wright and multi-parametric Mittag-Leffler functions.
//
// Terms are computed through log-Gamma differences with sign tracking and
// exponentiated once per term, so Gamma(alpha k + beta) never overflows
// mid-series. Summation is compensated (Neumaier). The stopping rule:
// sum until |t_k| <= eps * max(|S|, eps * sum|t|) for 3 consecutive k with
// k >= 8 and measured term ratio < 1/2; the reported error estimate is the
// geometric tail bound |t_K| r/(1-r) plus an accumulated roundoff noise
// floor. Exceeding the term budget raises NonConvergenceError.
//
// Gamma poles met by a descending denominator argument (alpha < 0) zero the
// term (reciprocal-Gamma convention); poles met on a non-descending path are
// parameter degeneracies and raise PoleError.
//
// Overflow guard: arguments large enough that an individual term exceeds
// double range (roughly |z| beyond a few hundred for small alpha) raise
// OverflowError instead of returning inf.

#include "wrightkit/types.hpp"

namespace wrightkit {

struct SeriesOptions {
    int term_budget = 10'000;
};

/// W_{alpha,beta}(z) = sum z^k / (k! Gamma(alpha k + beta)).
Evaluation wright(const WrightParams& p, double z, const SeriesOptions& opt = {});

/// W_{alpha,beta}(-z); the monotonicity claims are audited on z in (0,1) but
/// the function is evaluated for any z >= 0.
Evaluation wright_neg(const WrightParams& p, double z, const SeriesOptions& opt = {});

/// d/dz W_{alpha,beta}(z) = W_{alpha,beta+alpha}(z).
Evaluation wright_derivative(const WrightParams& p, double z, const SeriesOptions& opt = {});

/// W^{gamma,sigma}_{alpha,beta}(z) = sum (gamma)_n/(sigma)_n
///   * z^n / (n! Gamma(alpha n + beta)).
Evaluation gen_wright(const GenWrightParams& p, double z, const SeriesOptions& opt = {});

/// pPsiq[(a_i,alpha_i);(b_j,beta_j) | z].
Evaluation fox_wright(const FoxWrightSpec& s, double z, const SeriesOptions& opt = {});

/// E_{(B,beta)_n}(z) = sum z^k / prod Gamma(beta_j + k B_j), evaluated as the
/// Fox-Wright instance with numerator pair (1,1).
Evaluation mittag_leffler(const MittagLefflerSpec& s, double z, const SeriesOptions& opt = {});

/// Four-parametric Mittag-Leffler E_{B1,beta1;B2,beta2}(z).
Evaluation ml4(double B1, double beta1, double B2, double beta2, double z,
               const SeriesOptions& opt = {});

}  // namespace wrightkit
