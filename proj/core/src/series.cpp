#include "wrightkit/series.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "wrightkit/errors.hpp"
#include "wrightkit/gamma.hpp"

namespace wrightkit {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Neumaier compensated summation.
struct CompensatedSum {
    double s = 0.0;
    double c = 0.0;
    void add(double x) {
        const double t = s + x;
        if (std::fabs(s) >= std::fabs(x)) {
            c += (s - t) + x;
        } else {
            c += (x - t) + s;
        }
        s = t;
    }
    double value() const { return s + c; }
};

// One series term: its value and the magnitude sum of the log components it
// was assembled from, which scales the per-term roundoff bound.
struct Term {
    double value;
    double log_components;
};

// Sum terms produced by term_at(k) for k = 0, 1, 2, ... (called in order).
// Stops once three consecutive terms from k >= 8 fall below
// eps * max(|S|, eps * sum|t|) and the measured ratio of the last two nonzero
// terms is < 1/2. Error estimate: geometric tail |t_K| r/(1-r) plus the
// accumulated roundoff noise floor.
template <typename TermFn>
Evaluation sum_series(TermFn&& term_at, int budget, const char* what) {
    if (budget < 1) {
        throw ConfigError(std::string(what) + ": term budget must be >= 1");
    }
    CompensatedSum sum;
    double sum_abs = 0.0;
    double noise = 0.0;
    double prev_nonzero = 0.0, last_nonzero = 0.0;
    int small_run = 0;
    bool stopped = false;
    int k = 0;
    double last_abs = 0.0;
    for (; k < budget; ++k) {
        const Term t = term_at(k);
        if (!std::isfinite(t.value)) {
            throw OverflowError(std::string(what) + ": term overflow at k = " +
                                std::to_string(k));
        }
        sum.add(t.value);
        const double a = std::fabs(t.value);
        sum_abs += a;
        noise += a * kEps * (t.log_components + 2.0);
        if (t.value != 0.0) {
            prev_nonzero = last_nonzero;
            last_nonzero = t.value;
        }
        last_abs = a;
        const double threshold =
            kEps * std::max(std::fabs(sum.value()), kEps * sum_abs);
        if (k >= 8 && a <= threshold) {
            ++small_run;
        } else {
            small_run = 0;
        }
        if (small_run >= 3) {
            // Guard against premature truncation: require the measured term
            // ratio to have decayed below 1/2 (all these series are entire,
            // so the true ratio tends to 0).
            double ratio = 0.0;
            if (prev_nonzero != 0.0 && last_nonzero != 0.0) {
                ratio = std::fabs(last_nonzero / prev_nonzero);
            }
            if (ratio < 0.5) {
                ++k;
                stopped = true;
                break;
            }
        }
    }
    if (!stopped) {
        throw NonConvergenceError(std::string(what) +
                                  ": stopping rule not met within " +
                                  std::to_string(budget) + " terms");
    }
    double tail = 0.0;
    if (prev_nonzero != 0.0 && last_nonzero != 0.0) {
        const double r = std::fabs(last_nonzero / prev_nonzero);
        if (r < 1.0) {
            tail = last_abs * r / (1.0 - r);
        }
    }
    const double value = sum.value();
    Evaluation ev;
    ev.value = value;
    ev.abs_error_estimate = tail + noise + kEps * std::fabs(value);
    ev.terms_used = k;
    ev.method = EvalMethod::series;
    return ev;
}

// Log magnitude of z^k, safe at k = 0 for every z including 0.
double log_pow_abs(double z, int k) {
    return k == 0 ? 0.0 : k * std::log(std::fabs(z));
}

int sign_pow(double z, int k) {
    return (z < 0.0 && (k & 1)) ? -1 : +1;
}

void validate_wright(const WrightParams& p, const char* what) {
    if (!p.valid()) {
        throw DomainError(std::string(what) + ": requires finite parameters with alpha > -1");
    }
}

}  // namespace

bool WrightParams::valid() const {
    return std::isfinite(alpha) && std::isfinite(beta) && alpha > -1.0;
}

bool WrightParams::integral_hypothesis() const { return beta > alpha && alpha > 0.0; }

bool WrightParams::monotonicity_hypothesis() const {
    static const double x_star = find_gamma_min().x_star;
    return beta > alpha && alpha > x_star;
}

bool GenWrightParams::valid() const {
    return std::isfinite(alpha) && std::isfinite(beta) && std::isfinite(gamma) &&
           std::isfinite(sigma) && alpha > -1.0;
}

bool GenWrightParams::integral_hypothesis() const {
    return sigma > gamma && gamma > 0.0;
}

double FoxWrightSpec::convergence_margin() const {
    double m = 1.0;
    for (const auto& u : upper) m -= u.weight;
    for (const auto& l : lower) m += l.weight;
    return m;
}

bool MittagLefflerSpec::valid() const {
    if (pairs.empty()) return false;
    double s = 0.0;
    for (const auto& p : pairs) {
        if (!std::isfinite(p.weight) || !std::isfinite(p.offset)) return false;
        s += p.weight * p.weight;
    }
    return s != 0.0;
}

Evaluation wright(const WrightParams& p, double z, const SeriesOptions& opt) {
    validate_wright(p, "wright");
    if (!std::isfinite(z)) {
        throw DomainError("wright: z must be finite");
    }
    const double alpha = p.alpha, beta = p.beta;
    auto term_at = [&](int k) -> Term {
        const SignedLogGamma g = signed_log_gamma(alpha * k + beta);
        if (g.pole()) {
            // Denominator pole. With alpha < 0 the argument descends through
            // the poles and the term vanishes by 1/Gamma(pole) = 0; on a
            // non-descending path this is a degenerate beta.
            const bool numerator_nonzero = (k == 0) || (z != 0.0);
            if (alpha >= 0.0 && numerator_nonzero) {
                throw PoleError("wright: Gamma pole at alpha*k+beta = " +
                                std::to_string(alpha * k + beta) + " (k = " +
                                std::to_string(k) + ")");
            }
            return {0.0, 0.0};
        }
        if (z == 0.0 && k > 0) return {0.0, 0.0};
        const double lz = log_pow_abs(z, k);
        const double lk = k == 0 ? 0.0 : log_gamma(double(k) + 1.0);
        const double lm = lz - lk - g.log_abs;
        const double value = sign_pow(z, k) * g.sign * std::exp(lm);
        return {value, std::fabs(lz) + lk + std::fabs(g.log_abs)};
    };
    return sum_series(term_at, opt.term_budget, "wright");
}

Evaluation wright_neg(const WrightParams& p, double z, const SeriesOptions& opt) {
    if (!(z >= 0.0)) {
        throw DomainError("wright_neg: requires z >= 0");
    }
    return wright(p, -z, opt);
}

Evaluation wright_derivative(const WrightParams& p, double z, const SeriesOptions& opt) {
    validate_wright(p, "wright_derivative");
    return wright({p.alpha, p.beta + p.alpha}, z, opt);
}

Evaluation gen_wright(const GenWrightParams& p, double z, const SeriesOptions& opt) {
    if (!p.valid()) {
        throw DomainError("gen_wright: requires finite parameters with alpha > -1");
    }
    if (!std::isfinite(z)) {
        throw DomainError("gen_wright: z must be finite");
    }
    const double alpha = p.alpha, beta = p.beta, gam = p.gamma, sig = p.sigma;
    // Running Pochhammer ratio (gamma)_k / (sigma)_k, tracked in log space.
    double log_ratio = 0.0;
    int sign_ratio = 1;
    bool truncated = false;  // (gamma)_k hit zero: all later terms vanish
    auto term_at = [&, log_ratio, sign_ratio, truncated](int k) mutable -> Term {
        if (k > 0) {
            const double fn = gam + (k - 1);
            const double fd = sig + (k - 1);
            if (fd == 0.0) {
                throw PoleError("gen_wright: (sigma)_n hits zero factor at n = " +
                                std::to_string(k));
            }
            if (fn == 0.0) truncated = true;
            if (!truncated) {
                log_ratio += std::log(std::fabs(fn)) - std::log(std::fabs(fd));
                if (fn < 0.0) sign_ratio = -sign_ratio;
                if (fd < 0.0) sign_ratio = -sign_ratio;
            }
        }
        if (truncated) return {0.0, 0.0};
        const SignedLogGamma g = signed_log_gamma(alpha * k + beta);
        if (g.pole()) {
            const bool numerator_nonzero = (k == 0) || (z != 0.0);
            if (alpha >= 0.0 && numerator_nonzero) {
                throw PoleError("gen_wright: Gamma pole at alpha*k+beta = " +
                                std::to_string(alpha * k + beta));
            }
            return {0.0, 0.0};
        }
        if (z == 0.0 && k > 0) return {0.0, 0.0};
        const double lz = log_pow_abs(z, k);
        const double lk = k == 0 ? 0.0 : log_gamma(double(k) + 1.0);
        const double lm = lz + log_ratio - lk - g.log_abs;
        const double value = sign_pow(z, k) * sign_ratio * g.sign * std::exp(lm);
        return {value, std::fabs(lz) + std::fabs(log_ratio) + lk + std::fabs(g.log_abs)};
    };
    return sum_series(term_at, opt.term_budget, "gen_wright");
}

Evaluation fox_wright(const FoxWrightSpec& s, double z, const SeriesOptions& opt) {
    for (const auto& g : s.upper) {
        if (!std::isfinite(g.offset) || !std::isfinite(g.weight)) {
            throw DomainError("fox_wright: non-finite upper parameter");
        }
    }
    for (const auto& g : s.lower) {
        if (!std::isfinite(g.offset) || !std::isfinite(g.weight)) {
            throw DomainError("fox_wright: non-finite lower parameter");
        }
    }
    if (!std::isfinite(z)) {
        throw DomainError("fox_wright: z must be finite");
    }
    const double margin = s.convergence_margin();
    if (!(margin > 0.0)) {
        throw ConvergenceDomainError(
            "fox_wright: convergence condition 1 + sum(beta_j) - sum(alpha_i) > 0 "
            "fails (margin = " + std::to_string(margin) + ")");
    }
    auto term_at = [&](int k) -> Term {
        if (z == 0.0 && k > 0) return {0.0, 0.0};
        double lm = log_pow_abs(z, k);
        double comps = std::fabs(lm);
        int sign = sign_pow(z, k);
        for (const auto& u : s.upper) {
            const SignedLogGamma g = signed_log_gamma(u.offset + u.weight * k);
            if (g.pole()) {
                // An infinite numerator factor is a degeneracy regardless of
                // the direction the argument moves in.
                throw PoleError("fox_wright: numerator Gamma pole at k = " +
                                std::to_string(k));
            }
            lm += g.log_abs;
            comps += std::fabs(g.log_abs);
            sign *= g.sign;
        }
        for (const auto& l : s.lower) {
            const SignedLogGamma g = signed_log_gamma(l.offset + l.weight * k);
            if (g.pole()) {
                if (l.weight >= 0.0) {
                    throw PoleError("fox_wright: denominator Gamma pole at k = " +
                                    std::to_string(k));
                }
                return {0.0, 0.0};
            }
            lm -= g.log_abs;
            comps += std::fabs(g.log_abs);
            sign *= g.sign;
        }
        const double lk = k == 0 ? 0.0 : log_gamma(double(k) + 1.0);
        lm -= lk;
        comps += lk;
        return {sign * std::exp(lm), comps};
    };
    return sum_series(term_at, opt.term_budget, "fox_wright");
}

Evaluation mittag_leffler(const MittagLefflerSpec& s, double z, const SeriesOptions& opt) {
    if (!s.valid()) {
        throw DomainError(
            "mittag_leffler: requires >= 1 pair and sum B_j^2 != 0");
    }
    // Each factor is Gamma(beta_j + B_j k); the numerator pair (1,1)
    // contributes Gamma(1 + k) = k!, cancelling the Fox-Wright 1/k!.
    FoxWrightSpec fw;
    fw.upper = {{1.0, 1.0}};
    fw.lower = s.pairs;
    return fox_wright(fw, z, opt);
}

Evaluation ml4(double B1, double beta1, double B2, double beta2, double z,
               const SeriesOptions& opt) {
    MittagLefflerSpec s;
    s.pairs = {{beta1, B1}, {beta2, B2}};
    return mittag_leffler(s, z, opt);
}

}  // namespace wrightkit
