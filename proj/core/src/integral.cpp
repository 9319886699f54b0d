#include "wrightkit/integral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <queue>
#include <string>
#include <tuple>

#include "wrightkit/errors.hpp"
#include "wrightkit/gamma.hpp"
#include "wrightkit/series.hpp"

namespace wrightkit {

namespace quadrature {

namespace {

// Implicit-shift QL on a symmetric tridiagonal matrix, tracking only the
// first component of each eigenvector (Golub-Welsch). d = diagonal,
// e = subdiagonal (e[n-1] unused), z starts as (1, 0, ..., 0).
void tridiag_ql_first_components(std::vector<double>& d, std::vector<double>& e,
                                 std::vector<double>& z) {
    const int n = static_cast<int>(d.size());
    e[n - 1] = 0.0;
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
                if (std::fabs(e[m]) <= std::numeric_limits<double>::epsilon() * dd) break;
            }
            if (m != l) {
                if (iter++ == 50) {
                    throw ConvergenceError("gauss_jacobi: QL iteration failed");
                }
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                bool underflow = false;
                for (int i = m - 1; i >= l; --i) {
                    double f = s * e[i];
                    const double bb = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        underflow = true;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * bb;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - bb;
                    f = z[i + 1];
                    z[i + 1] = s * z[i] + c * f;
                    z[i] = c * z[i] - s * f;
                }
                if (underflow) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
}

// Gauss-Jacobi nodes/weights on (-1,1) for weight (1-x)^a (1+x)^b via
// Golub-Welsch: eigenvalues of the Jacobi-recurrence tridiagonal matrix are
// the nodes, mu0 times the squared first eigenvector components the weights.
void gauss_jacobi_m11(int n, double a, double b,
                      std::vector<double>& x, std::vector<double>& w) {
    std::vector<double> d(n), e(n, 0.0), z(n, 0.0);
    z[0] = 1.0;
    const double ab = a + b;
    // Three-term recurrence coefficients of the monic Jacobi polynomials.
    d[0] = (b - a) / (ab + 2.0);
    for (int k = 1; k < n; ++k) {
        const double t = 2.0 * k + ab;
        d[k] = (b * b - a * a) / (t * (t + 2.0));
        double beta_k;
        if (k == 1) {
            beta_k = 4.0 * (a + 1.0) * (b + 1.0) / ((ab + 2.0) * (ab + 2.0) * (ab + 3.0));
        } else {
            beta_k = 4.0 * k * (k + a) * (k + b) * (k + ab) /
                     (t * t * (t + 1.0) * (t - 1.0));
        }
        e[k - 1] = std::sqrt(beta_k);
    }
    tridiag_ql_first_components(d, e, z);

    // mu0 = Int_{-1}^{1} (1-x)^a (1+x)^b dx = 2^{a+b+1} B(a+1, b+1)
    const double log_mu0 = (ab + 1.0) * std::log(2.0) + log_gamma(a + 1.0) +
                           log_gamma(b + 1.0) - log_gamma(ab + 2.0);
    const double mu0 = std::exp(log_mu0);

    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int i, int j) { return d[i] < d[j]; });
    x.resize(n);
    w.resize(n);
    for (int i = 0; i < n; ++i) {
        x[i] = d[order[i]];
        w[i] = mu0 * z[order[i]] * z[order[i]];
    }
}

struct RuleKey {
    int n;
    double a, b;
    bool operator<(const RuleKey& o) const {
        return std::tie(n, a, b) < std::tie(o.n, o.a, o.b);
    }
};

}  // namespace

const JacobiRule& gauss_jacobi_01(int n, double a, double b) {
    if (n < 4) throw ConfigError("gauss_jacobi_01: need n >= 4");
    if (!(a > -1.0) || !(b > -1.0)) {
        throw DomainError("gauss_jacobi_01: weight exponents must be > -1");
    }
    static std::mutex mu;
    static std::map<RuleKey, std::unique_ptr<JacobiRule>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({n, a, b});
    if (it == cache.end()) {
        std::vector<double> x, w;
        gauss_jacobi_m11(n, a, b, x, w);
        auto rule = std::make_unique<JacobiRule>();
        rule->nodes.resize(n);
        rule->weights.resize(n);
        // Map x in (-1,1) descending to u = (1+x)/2 in (0,1) ascending:
        // Int_0^1 (1-u)^a u^b f = 2^{-(a+b+1)} Int_{-1}^1 (1-x)^a (1+x)^b f((1+x)/2).
        const double scale = std::pow(2.0, -(a + b + 1.0));
        for (int i = 0; i < n; ++i) {
            rule->nodes[i] = 0.5 * (1.0 + x[n - 1 - i]);
            rule->weights[i] = scale * w[n - 1 - i];
        }
        it = cache.emplace(RuleKey{n, a, b}, std::move(rule)).first;
    }
    return *it->second;
}

}  // namespace quadrature

namespace {

constexpr int kMaxNodes = 4096;
constexpr double kEps = std::numeric_limits<double>::epsilon();

int clamp_start_nodes(const QuadratureSpec& q) {
    if (q.node_count < 8) {
        throw ConfigError("quadrature: node_count must be >= 8");
    }
    if (!(q.target_abs_tol > 0.0)) {
        throw ConfigError("quadrature: target_abs_tol must be > 0");
    }
    return q.node_count;
}

struct WeightedSum {
    double value = 0.0;
    double inner_err = 0.0;
};

// sum_i w_i f(u_i) for a Jacobi rule, where f returns a series Evaluation.
WeightedSum jacobi_apply(const quadrature::JacobiRule& rule,
                         const std::function<Evaluation(double)>& f) {
    WeightedSum out;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const Evaluation ev = f(rule.nodes[i]);
        out.value += rule.weights[i] * ev.value;
        out.inner_err += std::fabs(rule.weights[i]) * ev.abs_error_estimate;
    }
    return out;
}

struct RefinedQuad {
    double value = 0.0;
    double est = 0.0;  // |Q(2n) - Q(n)| + propagated inner-series error
    int nodes = 0;
};

// Double the node count until successive estimates differ by <= tol.
RefinedQuad refine_jacobi(double a, double b, double tol, int n_start,
                          const std::function<Evaluation(double)>& f,
                          const char* what) {
    int n = n_start;
    WeightedSum prev = jacobi_apply(quadrature::gauss_jacobi_01(n, a, b), f);
    while (2 * n <= kMaxNodes) {
        n *= 2;
        const WeightedSum cur = jacobi_apply(quadrature::gauss_jacobi_01(n, a, b), f);
        const double diff = std::fabs(cur.value - prev.value);
        if (diff <= tol) {
            return {cur.value, diff + cur.inner_err, n};
        }
        prev = cur;
    }
    throw QuadratureError(std::string(what) + ": tolerance " + std::to_string(tol) +
                          " unmet at " + std::to_string(kMaxNodes) + " nodes");
}

// 15-point Gauss-Legendre on (-1,1), positive half.
constexpr double kGL15Nodes[8] = {
    0.0,
    0.2011940939974345,
    0.3941513470775634,
    0.5709721726085388,
    0.7244177313601700,
    0.8482065834104272,
    0.9372733924007059,
    0.9879925180204854,
};
constexpr double kGL15W[8] = {
    0.2025782419255613,
    0.1984314853271116,
    0.1861610000155622,
    0.1662692058169939,
    0.1395706779261543,
    0.1071592204671719,
    0.0703660474881081,
    0.0307532419961173,
};

double gl15(const std::function<double(double)>& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double acc = kGL15W[0] * f(mid);
    for (int i = 1; i < 8; ++i) {
        const double dx = half * kGL15Nodes[i];
        acc += kGL15W[i] * (f(mid + dx) + f(mid - dx));
    }
    return acc * half;
}

// Globally adaptive subdivision: keep a heap of panels ordered by their
// two-level error estimate and split the worst one until the estimates sum
// below the tolerance. Handles integrable endpoint singularities (the panels
// hugging the endpoint shrink geometrically) without over-refining the
// smooth interior.
struct Panel {
    double a, b;
    double value;  // refined estimate GL15(left half) + GL15(right half)
    double err;    // |GL15(whole) - value|
};

struct PanelWorse {
    bool operator()(const Panel& p, const Panel& q) const { return p.err < q.err; }
};

struct HeapQuad {
    double value = 0.0;
    double err = 0.0;
    int evals = 0;
};

HeapQuad heap_integrate(const std::function<double(double)>& f, double a, double b,
                        double tol) {
    constexpr int kMaxPanels = 20000;
    int evals = 0;
    auto make_panel = [&](double lo, double hi) {
        const double whole = gl15(f, lo, hi);
        const double mid = 0.5 * (lo + hi);
        const double value = gl15(f, lo, mid) + gl15(f, mid, hi);
        evals += 45;
        return Panel{lo, hi, value, std::fabs(whole - value)};
    };
    std::priority_queue<Panel, std::vector<Panel>, PanelWorse> heap;
    Panel root = make_panel(a, b);
    double total = root.value;
    double err_sum = root.err;
    heap.push(root);
    int panels = 1;
    while (err_sum > tol && panels < kMaxPanels) {
        const Panel worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        const Panel left = make_panel(worst.a, mid);
        const Panel right = make_panel(mid, worst.b);
        total += left.value + right.value - worst.value;
        err_sum += left.err + right.err - worst.err;
        heap.push(left);
        heap.push(right);
        ++panels;
    }
    return {total, err_sum, evals};
}

// Integrate f over (0,1) given two cancellation-free parameterizations:
// f_t(t) for the lower half and f_s(s) = f(1-s) for the upper half, written
// directly in s so an endpoint singularity at t = 1 sits at s = 0, where
// doubles have abundant resolution.
RefinedQuad adaptive_01(const std::function<double(double)>& f_t,
                        const std::function<double(double)>& f_s, double tol,
                        const char* what) {
    const HeapQuad lower = heap_integrate(f_t, 0.0, 0.5, 0.5 * tol);
    const HeapQuad upper = heap_integrate(f_s, 0.0, 0.5, 0.5 * tol);
    const double err_sum = lower.err + upper.err;
    if (err_sum > tol) {
        throw QuadratureError(std::string(what) + ": adaptive subdivision residual " +
                              std::to_string(err_sum) + " exceeds tolerance " +
                              std::to_string(tol));
    }
    return {lower.value + upper.value, err_sum, lower.evals + upper.evals};
}

// (1 - t^{1/alpha})^p evaluated without cancellation for t = 1 - s, s small.
double kernel_pow_from_s(double s, double alpha, double p) {
    const double one_minus_root = -std::expm1(std::log1p(-s) / alpha);
    return std::pow(one_minus_root, p);
}

}  // namespace

Evaluation wright_via_lemma1(const WrightParams& p, double z, const QuadratureSpec& q) {
    if (!p.integral_hypothesis()) {
        throw DomainError("wright_via_lemma1: requires beta > alpha > 0");
    }
    const int n0 = clamp_start_nodes(q);
    const double alpha = p.alpha, beta = p.beta;
    const double rec_gamma_ba = std::exp(-log_gamma(beta - alpha));

    RefinedQuad rq;
    if (q.rule == QuadRule::jacobi_weighted) {
        // t = w^{2 alpha} turns the kernel into the Jacobi weight
        // (1-w)^{beta-alpha-1} w^{2 alpha - 1}; the remaining factor
        // (1+w)^{beta-alpha-1} W(z w^{2 alpha}) is analytic in w whenever
        // 2 alpha is an integer, which covers the half-integer grids. This is
        // the t = u^alpha substitution composed with u = w^2, which also
        // absorbs the u^{alpha} endpoint kink of the plain substitution.
        auto f = [&](double w) -> Evaluation {
            Evaluation ev = wright({alpha, alpha}, z * std::pow(w, 2.0 * alpha));
            const double smooth = std::pow(1.0 + w, beta - alpha - 1.0);
            ev.value *= smooth;
            ev.abs_error_estimate *= smooth;
            return ev;
        };
        rq = refine_jacobi(beta - alpha - 1.0, 2.0 * alpha - 1.0, q.target_abs_tol, n0, f,
                           "wright_via_lemma1");
        rq.value *= 2.0 * rec_gamma_ba;
        rq.est *= 2.0 * rec_gamma_ba;
    } else {
        // Raw kernel in t; the integrable singularity at t = 1 (when
        // beta - alpha < 1) is integrated in s = 1 - t.
        double inner_err_max = 0.0;
        const double p = beta - alpha - 1.0;
        auto f_t = [&](double t) {
            const Evaluation ev = wright({alpha, alpha}, z * t);
            inner_err_max = std::max(inner_err_max, ev.abs_error_estimate);
            return std::pow(1.0 - std::pow(t, 1.0 / alpha), p) * ev.value;
        };
        auto f_s = [&](double s) {
            const Evaluation ev = wright({alpha, alpha}, z * (1.0 - s));
            inner_err_max = std::max(inner_err_max, ev.abs_error_estimate);
            return kernel_pow_from_s(s, alpha, p) * ev.value;
        };
        rq = adaptive_01(f_t, f_s, q.target_abs_tol, "wright_via_lemma1");
        const double c = 1.0 / (alpha * std::exp(log_gamma(beta - alpha)));
        // Kernel mass Int (1-t^{1/alpha})^{beta-alpha-1} dt = alpha B(beta-alpha, alpha)
        // bounds the propagated inner-series error.
        const double mass = alpha * wrightkit::beta(beta - alpha, alpha);
        rq.value *= c;
        rq.est = c * rq.est + c * mass * inner_err_max;
    }

    Evaluation ev;
    ev.value = rq.value;
    ev.abs_error_estimate = rq.est + kEps * std::fabs(rq.value);
    ev.terms_used = rq.nodes;
    ev.method = EvalMethod::integral;
    return ev;
}

Evaluation gen_wright_via_eq34(const GenWrightParams& p, double z, const QuadratureSpec& q) {
    if (!p.integral_hypothesis()) {
        throw DomainError("gen_wright_via_eq34: requires sigma > gamma > 0");
    }
    if (!p.valid()) {
        throw DomainError("gen_wright_via_eq34: requires alpha > -1");
    }
    const int n0 = clamp_start_nodes(q);
    const double pf =
        std::exp(log_gamma(p.sigma) - log_gamma(p.gamma) - log_gamma(p.sigma - p.gamma));

    RefinedQuad rq;
    if (q.rule == QuadRule::jacobi_weighted) {
        // Weight t^{gamma-1}(1-t)^{sigma-gamma-1} is already a Jacobi weight;
        // the inner Wright series is analytic in t.
        auto f = [&](double t) { return wright({p.alpha, p.beta}, z * t); };
        rq = refine_jacobi(p.sigma - p.gamma - 1.0, p.gamma - 1.0, q.target_abs_tol, n0,
                           f, "gen_wright_via_eq34");
    } else {
        double inner_err_max = 0.0;
        const double pg = p.gamma - 1.0, ps = p.sigma - p.gamma - 1.0;
        auto f_t = [&](double t) {
            const Evaluation ev = wright({p.alpha, p.beta}, z * t);
            inner_err_max = std::max(inner_err_max, ev.abs_error_estimate);
            return std::pow(t, pg) * std::pow(1.0 - t, ps) * ev.value;
        };
        auto f_s = [&](double s) {
            const Evaluation ev = wright({p.alpha, p.beta}, z * (1.0 - s));
            inner_err_max = std::max(inner_err_max, ev.abs_error_estimate);
            return std::pow(1.0 - s, pg) * std::pow(s, ps) * ev.value;
        };
        rq = adaptive_01(f_t, f_s, q.target_abs_tol, "gen_wright_via_eq34");
        rq.est += wrightkit::beta(p.gamma, p.sigma - p.gamma) * inner_err_max;
    }

    Evaluation ev;
    ev.value = pf * rq.value;
    ev.abs_error_estimate = pf * rq.est + kEps * std::fabs(ev.value);
    ev.terms_used = rq.nodes;
    ev.method = EvalMethod::integral;
    return ev;
}

Evaluation gen_wright_via_remark(const GenWrightParams& p, double z, const QuadratureSpec& q) {
    WrightParams wp{p.alpha, p.beta};
    if (!wp.integral_hypothesis()) {
        throw DomainError("gen_wright_via_remark: requires beta > alpha > 0");
    }
    const int n0 = clamp_start_nodes(q);
    const double alpha = p.alpha, beta_ = p.beta;
    const double rec_gamma_ba = std::exp(-log_gamma(beta_ - alpha));

    RefinedQuad rq;
    if (q.rule == QuadRule::jacobi_weighted) {
        // Same t = w^{2 alpha} substitution as the classical kernel route.
        auto f = [&](double w) -> Evaluation {
            GenWrightParams inner{alpha, alpha, p.gamma, p.sigma};
            Evaluation ev = gen_wright(inner, z * std::pow(w, 2.0 * alpha));
            const double smooth = std::pow(1.0 + w, beta_ - alpha - 1.0);
            ev.value *= smooth;
            ev.abs_error_estimate *= smooth;
            return ev;
        };
        rq = refine_jacobi(beta_ - alpha - 1.0, 2.0 * alpha - 1.0, q.target_abs_tol, n0, f,
                           "gen_wright_via_remark");
        rq.value *= 2.0 * rec_gamma_ba;
        rq.est *= 2.0 * rec_gamma_ba;
    } else {
        double inner_err_max = 0.0;
        const double pw = beta_ - alpha - 1.0;
        const GenWrightParams inner{alpha, alpha, p.gamma, p.sigma};
        auto f_t = [&](double t) {
            const Evaluation ev = gen_wright(inner, z * t);
            inner_err_max = std::max(inner_err_max, ev.abs_error_estimate);
            return std::pow(1.0 - std::pow(t, 1.0 / alpha), pw) * ev.value;
        };
        auto f_s = [&](double s) {
            const Evaluation ev = gen_wright(inner, z * (1.0 - s));
            inner_err_max = std::max(inner_err_max, ev.abs_error_estimate);
            return kernel_pow_from_s(s, alpha, pw) * ev.value;
        };
        rq = adaptive_01(f_t, f_s, q.target_abs_tol, "gen_wright_via_remark");
        const double c = 1.0 / (alpha * std::exp(log_gamma(beta_ - alpha)));
        const double mass = alpha * wrightkit::beta(beta_ - alpha, alpha);
        rq.value *= c;
        rq.est = c * rq.est + c * mass * inner_err_max;
    }

    Evaluation ev;
    ev.value = rq.value;
    ev.abs_error_estimate = rq.est + kEps * std::fabs(rq.value);
    ev.terms_used = rq.nodes;
    ev.method = EvalMethod::integral;
    return ev;
}

}  // namespace wrightkit
