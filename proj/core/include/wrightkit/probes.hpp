#pragma once

// Numerical probes for structural claims: complete monotonicity via
// higher-order forward differences, and midpoint log-convexity in the
// argument or in a parameter. Probes are falsifiers, not provers: a pass
// means no violation was found above the roundoff slack.

#include <functional>

namespace wrightkit {

struct ProbePoint {
    double x = 0.0;  // abscissa (or parameter value) of the reported margin
    int order = -1;  // difference order for monotonicity probes, -1 otherwise
};

struct ProbeResult {
    bool passed = false;
    double worst_margin = 0.0;  // minimum signed margin seen
    ProbePoint worst_point;     // where; on failure, the smallest failing order
    int samples = 0;            // function evaluations performed
    double slack = 0.0;         // tolerance the pass/fail decision used
};

/// Check (-1)^n Delta_h^n f(x) >= -slack for n = 0..max_order on grid_n
/// points of [lo, hi - max_order*h]. Requires 0 < lo < hi,
/// h * max_order < hi - lo, grid_n >= 2 (DomainError otherwise).
/// slack = 64 * 2^max_order * eps * max|f| absorbs difference-amplified
/// roundoff.
ProbeResult check_completely_monotone(const std::function<double(double)>& f,
                                      double lo, double hi,
                                      int max_order = 6, double h = 0.01,
                                      int grid_n = 25);

/// Midpoint log-convexity on [lo, hi]: for every grid pair x < y,
/// log f(x) + log f(y) - 2 log f((x+y)/2) >= -slack. Midpoints of a uniform
/// grid land on the half-step lattice, so f is sampled 2*grid_n - 1 times.
/// Throws PositivityError if any sample is <= 0.
ProbeResult check_log_convex_arg(const std::function<double(double)>& f,
                                 double lo, double hi, int grid_n = 25);

/// Same midpoint test applied to a parameter sweep s -> family(s).
ProbeResult check_log_convex_param(const std::function<double(double)>& family,
                                   double param_lo, double param_hi,
                                   int grid_n = 25);

}  // namespace wrightkit
