#pragma once

#include <cstddef>
#include <vector>

namespace wrightkit {

enum class EvalMethod { series, integral };

/// Result of one function evaluation: the value, an absolute error estimate
/// (truncation tail plus roundoff noise floor for series; successive-refinement
/// difference plus inner-series error for quadrature), and work counters.
struct Evaluation {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    int terms_used = 0;  // series terms, or quadrature nodes at the final level
    EvalMethod method = EvalMethod::series;
};

/// Parameters (alpha, beta) of the Wright function; the series is entire for
/// alpha > -1.
struct WrightParams {
    double alpha;
    double beta;

    /// beta > alpha > 0: hypothesis of the kernel integral representation.
    bool integral_hypothesis() const;
    /// beta > alpha > x*: hypothesis under which W(-z) is completely
    /// monotonic on (0,1).
    bool monotonicity_hypothesis() const;
    /// alpha > -1 and both entries finite.
    bool valid() const;
};

/// Parameters (alpha, beta, gamma, sigma) of the generalized Wright function.
struct GenWrightParams {
    double alpha;
    double beta;
    double gamma;
    double sigma;

    /// sigma > gamma > 0: hypothesis of the Beta-kernel integral representation.
    bool integral_hypothesis() const;
    bool valid() const;
};

/// One Gamma factor Gamma(offset + weight * k) of a Fox-Wright term.
struct GammaPair {
    double offset;
    double weight;
};

/// Upper/lower parameter lists of pPsiq.
struct FoxWrightSpec {
    std::vector<GammaPair> upper;
    std::vector<GammaPair> lower;

    /// 1 + sum(lower weights) - sum(upper weights); must be > 0 to sum.
    double convergence_margin() const;
};

/// Parameter pairs (B_j, beta_j) of the 2n-parametric Mittag-Leffler function.
/// GammaPair.weight carries B_j, GammaPair.offset carries beta_j.
struct MittagLefflerSpec {
    std::vector<GammaPair> pairs;

    /// At least one pair and sum B_j^2 != 0.
    bool valid() const;
};

}  // namespace wrightkit
