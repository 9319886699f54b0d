#include "wrightkit/probes.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "wrightkit/errors.hpp"

namespace wrightkit {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Shared midpoint log-convexity engine: samples g on the half-step lattice of
// a uniform grid so every pair midpoint is itself a lattice point.
ProbeResult midpoint_log_convexity(const std::function<double(double)>& g,
                                   double lo, double hi, int grid_n,
                                   const char* what) {
    if (!(lo < hi) || grid_n < 2) {
        throw DomainError(std::string(what) + ": malformed interval or grid");
    }
    const int m = 2 * grid_n - 1;  // lattice resolution
    std::vector<double> xs(m), logf(m);
    double max_logabs = 1.0;
    for (int i = 0; i < m; ++i) {
        xs[i] = lo + (hi - lo) * i / double(m - 1);
        const double v = g(xs[i]);
        if (!(v > 0.0)) {
            throw PositivityError(std::string(what) + ": sample f(" +
                                  std::to_string(xs[i]) + ") = " +
                                  std::to_string(v) + " is not positive");
        }
        logf[i] = std::log(v);
        max_logabs = std::max(max_logabs, std::fabs(logf[i]));
    }
    const double slack = 100.0 * kEps * max_logabs;

    ProbeResult res;
    res.samples = m;
    res.slack = slack;
    res.passed = true;
    double worst = std::numeric_limits<double>::infinity();
    ProbePoint worst_pt;
    // Grid points sit at even lattice indices; the midpoint of 2i and 2j is
    // lattice index i + j.
    for (int i = 0; i < grid_n; ++i) {
        for (int j = i + 1; j < grid_n; ++j) {
            const double margin = logf[2 * i] + logf[2 * j] - 2.0 * logf[i + j];
            if (margin < worst) {
                worst = margin;
                worst_pt = {0.5 * (xs[2 * i] + xs[2 * j]), -1};
            }
            if (margin < -slack) res.passed = false;
        }
    }
    res.worst_margin = worst;
    res.worst_point = worst_pt;
    return res;
}

}  // namespace

ProbeResult check_completely_monotone(const std::function<double(double)>& f,
                                      double lo, double hi, int max_order,
                                      double h, int grid_n) {
    if (!(0.0 < lo) || !(lo < hi) || !(h > 0.0) || max_order < 0 || grid_n < 2 ||
        !(h * max_order < hi - lo)) {
        throw DomainError("check_completely_monotone: malformed interval/grid "
                          "(need 0 < lo < hi, h*max_order < hi-lo, grid_n >= 2)");
    }
    // All difference stencils stay inside (lo, hi): grid points span
    // [lo, hi - max_order*h].
    const double span = hi - lo - max_order * h;
    std::vector<std::vector<double>> rows(grid_n);
    double max_abs_f = 0.0;
    int samples = 0;
    for (int j = 0; j < grid_n; ++j) {
        const double x = lo + span * j / double(grid_n - 1);
        rows[j].resize(max_order + 1);
        for (int i = 0; i <= max_order; ++i) {
            rows[j][i] = f(x + i * h);
            max_abs_f = std::max(max_abs_f, std::fabs(rows[j][i]));
            ++samples;
        }
    }
    // Order-n forward differences amplify roundoff by up to 2^n.
    const double slack = 64.0 * std::ldexp(1.0, max_order) * kEps * std::max(1.0, max_abs_f);

    ProbeResult res;
    res.samples = samples;
    res.slack = slack;
    res.passed = true;
    double worst = std::numeric_limits<double>::infinity();
    ProbePoint worst_pt;
    int first_fail_order = -1;
    double first_fail_margin = 0.0;
    ProbePoint first_fail_pt;
    for (int n = 0; n <= max_order; ++n) {
        for (int j = 0; j < grid_n; ++j) {
            // In-place fold: after n passes rows[j][i] holds Delta^n f(x_j + i h).
            if (n > 0) {
                for (int i = 0; i + n <= max_order; ++i) {
                    rows[j][i] = rows[j][i + 1] - rows[j][i];
                }
            }
            const double x = lo + span * j / double(grid_n - 1);
            const double margin = (n % 2 == 0 ? rows[j][0] : -rows[j][0]);
            if (margin < worst) {
                worst = margin;
                worst_pt = {x, n};
            }
            if (margin < -slack) {
                res.passed = false;
                if (first_fail_order < 0 || n == first_fail_order) {
                    if (first_fail_order < 0 || margin < first_fail_margin) {
                        first_fail_order = n;
                        first_fail_margin = margin;
                        first_fail_pt = {x, n};
                    }
                }
            }
        }
    }
    res.worst_margin = worst;
    // On failure report the smallest failing order (worst point within it).
    res.worst_point = res.passed ? worst_pt : first_fail_pt;
    if (!res.passed) res.worst_margin = first_fail_margin;
    return res;
}

ProbeResult check_log_convex_arg(const std::function<double(double)>& f,
                                 double lo, double hi, int grid_n) {
    return midpoint_log_convexity(f, lo, hi, grid_n, "check_log_convex_arg");
}

ProbeResult check_log_convex_param(const std::function<double(double)>& family,
                                   double param_lo, double param_hi, int grid_n) {
    return midpoint_log_convexity(family, param_lo, param_hi, grid_n,
                                  "check_log_convex_param");
}

}  // namespace wrightkit
