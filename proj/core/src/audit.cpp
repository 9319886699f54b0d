#include "wrightkit/audit.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <string>

#include "wrightkit/errors.hpp"
#include "wrightkit/gamma.hpp"
#include "wrightkit/series.hpp"

namespace wrightkit {

namespace {

double x_star() {
    static const double v = find_gamma_min().x_star;
    return v;
}

// --- evaluation shorthands (series route for every side) -------------------

double W(double a, double b, double z) { return wright({a, b}, z).value; }
double Wc(double a, double b, double z) { return wright({a, b}, -z).value; }
double GW(double a, double b, double g, double s, double z) {
    return gen_wright({a, b, g, s}, z).value;
}
double GWc(double a, double b, double g, double s, double z) {
    return gen_wright({a, b, g, s}, -z).value;
}
double FW11(double a0, double aw, double b0, double bw, double z) {
    FoxWrightSpec s;
    s.upper = {{a0, aw}};
    s.lower = {{b0, bw}};
    return fox_wright(s, z).value;
}
// Four-parametric Mittag-Leffler E_{alpha,beta;1,sigma}.
double E1s(double a, double b, double s, double z) {
    return ml4(a, b, 1.0, s, z).value;
}
double G(double x) { return gamma(x); }

double scale2(double a, double b) {
    return std::max({1.0, std::fabs(a), std::fabs(b)});
}

// Signed margin of the claim `larger >= smaller`, normalized.
double margin_ge(double larger, double smaller) {
    return (larger - smaller) / scale2(larger, smaller);
}

double req(const std::optional<double>& v, const char* which) {
    if (!v) throw ConfigError(std::string("audit point is missing '") + which + "'");
    return *v;
}

// Which axes a catalog entry sweeps.
enum class Domain {
    wright_z_unit,   // (alpha, beta, z in (0,1))
    wright_z_pos,    // (alpha, beta, z > 0)
    wright_z_real,   // (alpha, beta, z in R) -- two-sided Fox-Wright bounds
    wright_xy,       // (alpha, beta, x, y)
    gen_z_unit,      // + (gamma, sigma)
    gen_z_pos,
    gen_xy,
    gs_z_real,       // (gamma, sigma, z in R)
    ml_z_unit,       // (alpha, beta, sigma, z in (0,1))
    ml_z_pos,
    ml_xy,
};

struct CatalogEntry {
    InequalityId id;
    const char* name;
    AuditClass cls;
    Domain domain;
    const char* hypothesis;
    std::function<bool(const AuditPoint&)> hyp;
    // Fills lhs/rhs (and fn_value for two-sided entries) and the normalized
    // margin; record.point is already set.
    std::function<void(const AuditPoint&, AuditRecord&)> eval;
    double slack = 1e-12;
};

void one_sided_ge(AuditRecord& r, double lhs, double rhs) {
    r.lhs = lhs;
    r.rhs = rhs;
    r.margin = margin_ge(lhs, rhs);
}

void one_sided_le(AuditRecord& r, double lhs, double rhs) {
    r.lhs = lhs;
    r.rhs = rhs;
    r.margin = margin_ge(rhs, lhs);
}

void two_sided(AuditRecord& r, double lo, double value, double up) {
    r.lhs = lo;
    r.rhs = up;
    r.fn_value = value;
    r.margin = std::min(margin_ge(value, lo), margin_ge(up, value));
}

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = [] {
        std::vector<CatalogEntry> c;
        const auto A = [](const AuditPoint& p) { return req(p.alpha, "alpha"); };
        const auto B = [](const AuditPoint& p) { return req(p.beta, "beta"); };
        const auto Gm = [](const AuditPoint& p) { return req(p.gamma, "gamma"); };
        const auto S = [](const AuditPoint& p) { return req(p.sigma, "sigma"); };
        const auto Z = [](const AuditPoint& p) { return req(p.z, "z"); };
        const auto X = [](const AuditPoint& p) { return req(p.x, "x"); };
        const auto Y = [](const AuditPoint& p) { return req(p.y, "y"); };

        c.push_back({InequalityId::W_NONNEG, "W_NONNEG", AuditClass::asserted,
                     Domain::wright_z_unit, "alpha > 0, beta > x*, z in (0,1)",
                     [=](const AuditPoint& p) {
                         return A(p) > 0.0 && B(p) > x_star() && Z(p) > 0.0 && Z(p) < 1.0;
                     },
                     [=](const AuditPoint& p, AuditRecord& r) {
                         one_sided_ge(r, Wc(A(p), B(p), Z(p)), 0.0);
                     }});

        c.push_back({InequalityId::SUPERADD_25, "SUPERADD_25", AuditClass::swept,
                     Domain::wright_xy, "beta > alpha > x*, x,y > 0, x+y < 1",
                     [=](const AuditPoint& p) {
                         return B(p) > A(p) && A(p) > x_star() && X(p) > 0.0 && Y(p) > 0.0 &&
                                X(p) + Y(p) < 1.0;
                     },
                     [=](const AuditPoint& p, AuditRecord& r) {
                         const double a = A(p), b = B(p), x = X(p), y = Y(p);
                         one_sided_ge(r, Wc(a, b, x + y), Wc(a, b, x) * Wc(a, b, y) / G(b));
                     }});

        c.push_back({InequalityId::SUPERADD_25K, "SUPERADD_25K", AuditClass::swept,
                     Domain::wright_xy, "beta > alpha > x*, x,y > 0, x+y < 1",
                     [=](const AuditPoint& p) {
                         return B(p) > A(p) && A(p) > x_star() && X(p) > 0.0 && Y(p) > 0.0 &&
                                X(p) + Y(p) < 1.0;
                     },
                     [=](const AuditPoint& p, AuditRecord& r) {
                         const double a = A(p), b = B(p), x = X(p), y = Y(p);
                         one_sided_ge(r, Wc(a, b, x + y), G(b) * Wc(a, b, x) * Wc(a, b, y));
                     }});

        c.push_back({InequalityId::TURAN_26, "TURAN_26", AuditClass::asserted,
                     Domain::wright_z_unit, "beta > alpha > x*, z in (0,1)",
                     [=](const AuditPoint& p) {
                         return B(p) > A(p) && A(p) > x_star() && Z(p) > 0.0 && Z(p) < 1.0;
                     },
                     [=](const AuditPoint& p, AuditRecord& r) {
                         const double a = A(p), b = B(p), z = Z(p);
                         const double s1 = Wc(a, b + a, z);
                         one_sided_ge(r, Wc(a, b + 2 * a, z) * Wc(a, b, z), s1 * s1);
                     }});

        c.push_back({InequalityId::EXPLB_27, "EXPLB_27", AuditClass::asserted,
                     Domain::wright_z_unit, "beta > alpha > x*, z in (0,1)",
                     [=](const AuditPoint& p) {
                         return B(p) > A(p) && A(p) > x_star() && Z(p) > 0.0 && Z(p) < 1.0;
                     },
                     [=](const AuditPoint& p, AuditRecord& r) {
                         const double a = A(p), b = B(p), z = Z(p);
                         one_sided_ge(r, Wc(a, b, z), std::exp(-G(b) * z / G(b + a)) / G(b));
                     }});

        // The Chebyshev-derived constant Gamma(2a)/(Gamma(a)Gamma(b)); it has
        // the correct z -> 0 limit 1/Gamma(b) on both sides.
        c.push_back({InequalityId::UB_29, "UB_29", AuditClass::asserted,
                     Domain::wright_z_pos, "alpha > 0, beta - alpha >= 1, z > 0",
                     [=](const AuditPoint& p) {
                         return A(p) > 0.0 && B(p) - A(p) >= 1.0 && Z(p) > 0.0;
                     },
                     [=](const AuditPoint& p, AuditRecord& r) {
                         const double a = A(p), b = B(p), z = Z(p);
                         const double rhs = (G(2 * a) / (G(a) * G(b))) *
                                            (std::expm1(G(a) * z / G(2 * a))) / z;
                         one_sided_le(r, W(a, b, z), rhs);
                     }});

        c.push_back({InequalityId::PROD_210, "PROD_210", AuditClass::asserted,
                     Domain::wright_z_pos, "alpha > 0, beta - alpha >= 2, z > 0",
                     [=](const AuditPoint& p) {
                         return A(p) > 0.0 && B(p) - A(p) >= 2.0 && Z(p) > 0.0;
                     },
                     [=](const AuditPoint& p, AuditRecord& r) {
                         const double a = A(p), b = B(p), z = Z(p);
                         const double C = G(b - a) / (G(b - a - 1) * G(b - a + 1));
                         one_sided_le(r, W(a, b + 1, z) * W(a, b - 1, z),
                                      C * W(a, a + 1, z) * W(a, b, z));
                     }});

        c.push_back({InequalityId::DOUBLING_211, "DOUBLING_211", AuditClass::asserted,
                     Domain::wright_z_pos, "alpha > 0, z > 0",
                     [=](const AuditPoint& p) { return A(p) > 0.0 && Z(p) > 0.0; },
                     [=](const AuditPoint& p, AuditRecord& r) {
                         const double a = A(p), z = Z(p);
                         one_sided_le(r, 2.0 * W(a, a + 3, z), W(a, a + 2, z));
                     }});

        c.push_back({InequalityId::TS_FW_ALPHA, "TS_FW_ALPHA", AuditClass::asserted,
                     Domain::wright_z_real, "beta > alpha > 0",
                     [=](const AuditPoint& p) { return B(p) > A(p) && A(p) > 0.0; },
                     [=](const AuditPoint& p, AuditRecord& r) {
                         const double a = A(p), b = B(p), z = Z(p);
                         const double p0 = G(a) / G(b);
                         const double p1 = G(2 * a) / G(b + a);
                         const double lo = p0 * std::exp(p1 / p0 * std::fabs(z));
                         const double up = p0 + p1 * std::expm1(std::fabs(z));
                         two_sided(r, lo, FW11(a, a, b, a, z), up);
                     }});

        c.push_back({InequalityId::UB_6666, "UB_6666", AuditClass::asserted,
                     Domain::wright_z_pos, "beta > alpha > 0, z > 0",
                     [=](const AuditPoint& p) {
                         return B(p) > A(p) && A(p) > 0.0 && Z(p) > 0.0;
                     },
                     [=](const AuditPoint& p, AuditRecord& r) {
                         const double a = A(p), b = B(p), z = Z(p);
                         const double rhs =
                             1.0 / G(b) +
                             G(2 * a) * std::expm1(G(a) * z / G(2 * a)) / (G(a) * G(b + a));
                         one_sided_le(r, W(a, b, z), rhs);
                     }});

        c.push_back({InequalityId::LB_777, "LB_777", AuditClass::suspect,
                     Domain::wright_z_unit, "beta > alpha > 0, z in (0,1)",
                     [=](const AuditPoint& p) {
                         return B(p) > A(p) && A(p) > 0.0 && Z(p) > 0.0 && Z(p) < 1.0;
                     },
                     [=](const AuditPoint& p, AuditRecord& r) {
                         const double a = A(p), b = B(p), z = Z(p);
                         one_sided_ge(r, Wc(a, b, z), std::exp(G(b) * z / G(a + b)) / G(b));
                     }});

        c.push_back({InequalityId::SUPERADD_Z0, "SUPERADD_Z0", AuditClass::swept,
                     Domain::gen_xy,
                     "beta > alpha > x*, sigma > gamma > 0, x,y > 0, x+y < 1",
                     [=](const AuditPoint& p) {
                         return B(p) > A(p) && A(p) > x_star() && S(p) > Gm(p) &&
                                Gm(p) > 0.0 && X(p) > 0.0 && Y(p) > 0.0 && X(p) + Y(p) < 1.0;
                     },
                     [=](const AuditPoint& p, AuditRecord& r) {
                         const double a = A(p), b = B(p), g = Gm(p), s = S(p);
                         one_sided_ge(r, GWc(a, b, g, s, X(p) + Y(p)),
                                      GWc(a, b, g, s, X(p)) * GWc(a, b, g, s, Y(p)) / G(b));
                     }});

        c.push_back({InequalityId::TURAN_Z1, "TURAN_Z1", AuditClass::asserted,
                     Domain::gen_z_unit,
                     "beta > alpha > x*, sigma > gamma > 0, z in (0,1)",
                     [=](const AuditPoint& p) {
                         return B(p) > A(p) && A(p) > x_star() && S(p) > Gm(p) &&
                                Gm(p) > 0.0 && Z(p) > 0.0 && Z(p) < 1.0;
                     },
                     [=](const AuditPoint& p, AuditRecord& r) {
                         const double a = A(p), b = B(p), g = Gm(p), s = S(p), z = Z(p);
                         const double mid = GWc(a, b + a, g + 1, s + 1, z);
                         one_sided_ge(r,
                                      ((g + 1) / (s + 1)) * GWc(a, b + 2 * a, g + 2, s + 2, z) *
                                          GWc(a, b, g, s, z),
                                      (g / s) * mid * mid);
                     }});

        c.push_back({InequalityId::EXPLB_Z2, "EXPLB_Z2", AuditClass::asserted,
                     Domain::gen_z_unit,
                     "beta > alpha > x*, sigma > gamma > 0, z in (0,1)",
                     [=](const AuditPoint& p) {
                         return B(p) > A(p) && A(p) > x_star() && S(p) > Gm(p) &&
                                Gm(p) > 0.0 && Z(p) > 0.0 && Z(p) < 1.0;
                     },
                     [=](const AuditPoint& p, AuditRecord& r) {
                         const double a = A(p), b = B(p), g = Gm(p), s = S(p), z = Z(p);
                         one_sided_ge(r, GWc(a, b, g, s, z),
                                      std::exp(-g * G(b) * z / (s * G(b + a))) / G(b));
                     }});

        c.push_back({InequalityId::TURAN_SIGMA_Z3, "TURAN_SIGMA_Z3", AuditClass::asserted,
                     Domain::gen_z_pos, "alpha, beta, gamma, sigma > 0, z > 0",
                     [=](const AuditPoint& p) {
                         return A(p) > 0.0 && B(p) > 0.0 && Gm(p) > 0.0 && S(p) > 0.0 &&
                                Z(p) > 0.0;
                     },
                     [=](const AuditPoint& p, AuditRecord& r) {
                         const double a = A(p), b = B(p), g = Gm(p), s = S(p), z = Z(p);
                         const double mid = GW(a, b, g, s + 1, z);
                         one_sided_ge(r, GW(a, b, g, s, z) * GW(a, b, g, s + 2, z), mid * mid);
                     }});

        c.push_back({InequalityId::TURAN_GAMMA, "TURAN_GAMMA", AuditClass::asserted,
                     Domain::gen_z_pos, "alpha, beta, gamma, sigma > 0, z > 0",
                     [=](const AuditPoint& p) {
                         return A(p) > 0.0 && B(p) > 0.0 && Gm(p) > 0.0 && S(p) > 0.0 &&
                                Z(p) > 0.0;
                     },
                     [=](const AuditPoint& p, AuditRecord& r) {
                         const double a = A(p), b = B(p), g = Gm(p), s = S(p), z = Z(p);
                         const double mid = GW(a, b, g + 1, s, z);
                         one_sided_ge(r, GW(a, b, g, s, z) * GW(a, b, g + 2, s, z),
                                      (g / (g + 1)) * mid * mid);
                     }});

        c.push_back({InequalityId::TS_FW_GS, "TS_FW_GS", AuditClass::asserted,
                     Domain::gs_z_real, "sigma > gamma > 0",
                     [=](const AuditPoint& p) { return S(p) > Gm(p) && Gm(p) > 0.0; },
                     [=](const AuditPoint& p, AuditRecord& r) {
                         const double g = Gm(p), s = S(p), z = Z(p);
                         const double p0 = G(g) / G(s);
                         const double lo = p0 * std::exp((g / s) * std::fabs(z));
                         const double up = p0 * (1.0 + (g / s) * std::expm1(std::fabs(z)));
                         two_sided(r, lo, FW11(g, 1, s, 1, z), up);
                     }});

        c.push_back({InequalityId::UB_88, "UB_88", AuditClass::asserted,
                     Domain::gen_z_pos, "beta > alpha > 0, sigma > gamma > 0, z > 0",
                     [=](const AuditPoint& p) {
                         return B(p) > A(p) && A(p) > 0.0 && S(p) > Gm(p) && Gm(p) > 0.0 &&
                                Z(p) > 0.0;
                     },
                     [=](const AuditPoint& p, AuditRecord& r) {
                         const double a = A(p), b = B(p), g = Gm(p), s = S(p), z = Z(p);
                         const double rhs =
                             (1.0 + (g / s) * std::expm1(G(b) * z / G(b + a))) / G(b);
                         one_sided_le(r, GW(a, b, g, s, z), rhs);
                     }});

        c.push_back({InequalityId::LB_888, "LB_888", AuditClass::suspect,
                     Domain::gen_z_unit,
                     "beta > alpha > 0, sigma > gamma > 0, z in (0,1)",
                     [=](const AuditPoint& p) {
                         return B(p) > A(p) && A(p) > 0.0 && S(p) > Gm(p) && Gm(p) > 0.0 &&
                                Z(p) > 0.0 && Z(p) < 1.0;
                     },
                     [=](const AuditPoint& p, AuditRecord& r) {
                         const double a = A(p), b = B(p), g = Gm(p), s = S(p), z = Z(p);
                         one_sided_ge(r, GWc(a, b, g, s, z),
                                      std::exp(g * G(b) * z / (s * G(b + a))) / G(b));
                     }});

        c.push_back({InequalityId::UB_1010, "UB_1010", AuditClass::asserted,
                     Domain::gen_z_pos, "0 < gamma <= 1, sigma - gamma >= 1, z > 0",
                     [=](const AuditPoint& p) {
                         return Gm(p) > 0.0 && Gm(p) <= 1.0 && S(p) - Gm(p) >= 1.0 &&
                                Z(p) > 0.0;
                     },
                     [=](const AuditPoint& p, AuditRecord& r) {
                         const double a = A(p), b = B(p), g = Gm(p), s = S(p), z = Z(p);
                         const double gba = G(b - a);
                         const double rhs = (gba * W(a, b - a, z) - 1.0) / (gba * z);
                         one_sided_le(r, GW(a, b, g, s, z), rhs);
                     }});

        c.push_back({InequalityId::IDENT_1010, "IDENT_1010", AuditClass::asserted,
                     Domain::wright_z_pos, "beta > alpha, z > 0",
                     [=](const AuditPoint& p) { return B(p) > A(p) && Z(p) > 0.0; },
                     [=](const AuditPoint& p, AuditRecord& r) {
                         const double a = A(p), b = B(p), z = Z(p);
                         const double gba = G(b - a);
                         const double lhs = (gba * W(a, b - a, z) - 1.0) / (gba * z);
                         const double rhs = GW(a, b, 1.0, 2.0, z);
                         r.lhs = lhs;
                         r.rhs = rhs;
                         r.margin = -std::fabs(lhs - rhs) / scale2(lhs, rhs);
                     },
                     1e-10});

        c.push_back({InequalityId::PROD_11111, "PROD_11111", AuditClass::asserted,
                     Domain::gen_z_pos, "0 < gamma <= 1, sigma - gamma >= 2, z > 0",
                     [=](const AuditPoint& p) {
                         return Gm(p) > 0.0 && Gm(p) <= 1.0 && S(p) - Gm(p) >= 2.0 &&
                                Z(p) > 0.0;
                     },
                     [=](const AuditPoint& p, AuditRecord& r) {
                         const double a = A(p), b = B(p), g = Gm(p), s = S(p), z = Z(p);
                         const double C = G(s - g) * G(s + 1) * G(s - 1) /
                                          (G(s) * G(g) * G(s - g + 1) * G(s - g - 1));
                         one_sided_le(r, GW(a, b, g, s + 1, z) * GW(a, b, g, s - 1, z),
                                      C * GW(a, b, 1.0, 2.0, z) * GW(a, b, g, s, z));
                     }});

        c.push_back({InequalityId::ML_SUPERADD, "ML_SUPERADD", AuditClass::swept,
                     Domain::ml_xy, "beta > alpha > x*, sigma > 1, x,y > 0, x+y < 1",
                     [=](const AuditPoint& p) {
                         return B(p) > A(p) && A(p) > x_star() && S(p) > 1.0 && X(p) > 0.0 &&
                                Y(p) > 0.0 && X(p) + Y(p) < 1.0;
                     },
                     [=](const AuditPoint& p, AuditRecord& r) {
                         const double a = A(p), b = B(p), s = S(p);
                         one_sided_ge(r, E1s(a, b, s, -(X(p) + Y(p))),
                                      (G(s) / G(b)) * E1s(a, b, s, -X(p)) *
                                          E1s(a, b, s, -Y(p)));
                     }});

        // The gamma = 1 instance of TURAN_Z1, restated for the four-parametric
        // Mittag-Leffler function through E = W^{1,sigma}/Gamma(sigma).
        c.push_back({InequalityId::ML_TURAN_Z, "ML_TURAN_Z", AuditClass::swept,
                     Domain::ml_z_unit, "beta > alpha > x*, sigma > 1, z in (0,1)",
                     [=](const AuditPoint& p) {
                         return B(p) > A(p) && A(p) > x_star() && S(p) > 1.0 && Z(p) > 0.0 &&
                                Z(p) < 1.0;
                     },
                     [=](const AuditPoint& p, AuditRecord& r) {
                         const double a = A(p), b = B(p), s = S(p), z = Z(p);
                         const double mid = GWc(a, b + a, 2, s + 1, z);
                         one_sided_ge(r,
                                      (2.0 / (s + 1)) * GWc(a, b + 2 * a, 3, s + 2, z) *
                                          GWc(a, b, 1, s, z),
                                      (1.0 / s) * mid * mid);
                     }});

        c.push_back({InequalityId::ML_EXPLB, "ML_EXPLB", AuditClass::suspect,
                     Domain::ml_z_unit, "beta > alpha > x*, sigma > 1, z in (0,1)",
                     [=](const AuditPoint& p) {
                         return B(p) > A(p) && A(p) > x_star() && S(p) > 1.0 && Z(p) > 0.0 &&
                                Z(p) < 1.0;
                     },
                     [=](const AuditPoint& p, AuditRecord& r) {
                         const double a = A(p), b = B(p), s = S(p), z = Z(p);
                         one_sided_ge(r, E1s(a, b, s, -z),
                                      std::exp(G(b) * z / (s * G(b + a))) / G(s));
                     }});

        c.push_back({InequalityId::ML_TURAN_SIGMA, "ML_TURAN_SIGMA", AuditClass::asserted,
                     Domain::ml_z_pos, "alpha, beta, sigma > 0, z > 0",
                     [=](const AuditPoint& p) {
                         return A(p) > 0.0 && B(p) > 0.0 && S(p) > 0.0 && Z(p) > 0.0;
                     },
                     [=](const AuditPoint& p, AuditRecord& r) {
                         const double a = A(p), b = B(p), s = S(p), z = Z(p);
                         const double mid = E1s(a, b, s + 1, z);
                         one_sided_ge(r, E1s(a, b, s + 2, z) * E1s(a, b, s, z),
                                      (s / (s + 1)) * mid * mid);
                     }});

        // Via the exact identity E_{alpha,beta;1,sigma} = W^{1,sigma}/Gamma(sigma)
        // applied to UB_88 at gamma = 1, which pins the prefactor to
        // 1/(Gamma(beta) Gamma(sigma)).
        c.push_back({InequalityId::ML_UB, "ML_UB", AuditClass::asserted,
                     Domain::ml_z_pos, "beta > alpha > 0, sigma > 1, z > 0",
                     [=](const AuditPoint& p) {
                         return B(p) > A(p) && A(p) > 0.0 && S(p) > 1.0 && Z(p) > 0.0;
                     },
                     [=](const AuditPoint& p, AuditRecord& r) {
                         const double a = A(p), b = B(p), s = S(p), z = Z(p);
                         const double rhs = (1.0 + (1.0 / s) * std::expm1(G(b) * z / G(b + a))) /
                                            (G(b) * G(s));
                         one_sided_le(r, E1s(a, b, s, z), rhs);
                     }});

        c.push_back({InequalityId::ML_PROD, "ML_PROD", AuditClass::asserted,
                     Domain::ml_z_pos, "beta > alpha > 0, sigma >= 3, z > 0",
                     [=](const AuditPoint& p) {
                         return B(p) > A(p) && A(p) > 0.0 && S(p) >= 3.0 && Z(p) > 0.0;
                     },
                     [=](const AuditPoint& p, AuditRecord& r) {
                         const double a = A(p), b = B(p), s = S(p), z = Z(p);
                         const double C = G(s - 1) / (G(s) * G(s - 2));
                         one_sided_le(r, E1s(a, b, s + 1, z) * E1s(a, b, s - 1, z),
                                      C * E1s(a, b, 2.0, z) * E1s(a, b, s, z));
                     }});

        return c;
    }();
    return entries;
}

const CatalogEntry& entry_for(InequalityId id) {
    for (const auto& e : catalog()) {
        if (e.id == id) return e;
    }
    throw ConfigError("unknown inequality id");
}

bool uses_xy(Domain d) {
    return d == Domain::wright_xy || d == Domain::gen_xy || d == Domain::ml_xy;
}

}  // namespace

PSMoments ps_moments(const FoxWrightSpec& s) {
    double psi[3];
    for (int m = 0; m < 3; ++m) {
        double lg = 0.0;
        for (const auto& u : s.upper) {
            const double arg = u.offset + u.weight * m;
            if (!(arg > 0.0)) {
                throw DomainError("ps_moments: non-positive Gamma argument " +
                                  std::to_string(arg));
            }
            lg += log_gamma(arg);
        }
        for (const auto& l : s.lower) {
            const double arg = l.offset + l.weight * m;
            if (!(arg > 0.0)) {
                throw DomainError("ps_moments: non-positive Gamma argument " +
                                  std::to_string(arg));
            }
            lg -= log_gamma(arg);
        }
        psi[m] = std::exp(lg);
    }
    return {psi[0], psi[1], psi[2]};
}

bool ps_conditions_hold(const PSMoments& m) {
    return m.psi1 > m.psi2 && m.psi1 * m.psi1 < m.psi0 * m.psi2;
}

AuditRecord evaluate_inequality(InequalityId id, const AuditPoint& point) {
    const CatalogEntry& e = entry_for(id);
    AuditRecord rec;
    rec.id = id;
    rec.point = point;
    bool hyp_ok = false;
    try {
        hyp_ok = e.hyp(point);
    } catch (const ConfigError&) {
        throw;  // missing coordinates are caller errors, not eval errors
    }
    if (!hyp_ok) {
        rec.status = AuditStatus::hypothesis_not_met;
        return rec;
    }
    try {
        e.eval(point, rec);
    } catch (const ConfigError&) {
        throw;
    } catch (const Error& err) {
        rec.status = AuditStatus::eval_error;
        rec.note = err.what();
        return rec;
    }
    const double m = *rec.margin;
    if (m >= 0.0) {
        rec.status = AuditStatus::holds;
    } else if (m > -e.slack) {
        rec.status = AuditStatus::holds;
        rec.note = "margin within roundoff slack of zero";
    } else {
        rec.status = AuditStatus::violated;
    }
    if (e.domain == Domain::wright_z_real || e.domain == Domain::gs_z_real) {
        if (point.z && *point.z < 0.0) {
            rec.note = rec.note.empty() ? "negative-z extension"
                                        : rec.note + "; negative-z extension";
        }
    }
    return rec;
}

GridSpec GridSpec::default_grid() {
    GridSpec g;
    g.alphas = {0.5, 1.0, 1.5, 2.0, x_star() + 0.1};
    g.beta_offsets = {0.5, 1.0, 2.0};
    g.gammas = {0.5, 1.0};
    g.sigma_offsets = {0.5, 1.0, 2.0, 3.0};
    g.z_unit = {0.01, 0.1, 0.25, 0.5, 0.75, 0.9};
    g.z_positive_extra = {1.5, 3.0, 5.0};
    // Triangular grid of 15 pairs with x <= y <= 0.45, so x + y <= 0.9 < 1.
    for (int i = 0; i < 5; ++i) {
        for (int j = i; j < 5; ++j) {
            g.xy_pairs.emplace_back(0.05 + 0.1 * i, 0.05 + 0.1 * j);
        }
    }
    return g;
}

namespace {

void validate_axis(const std::vector<double>& v, const char* name) {
    if (v.empty()) throw ConfigError(std::string("grid axis '") + name + "' is empty");
    for (double x : v) {
        if (!std::isfinite(x)) {
            throw ConfigError(std::string("grid axis '") + name + "' has a non-finite entry");
        }
    }
}

std::vector<double> sorted(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    return v;
}

std::vector<AuditPoint> points_for(Domain d, const GridSpec& grid) {
    if (d != Domain::gs_z_real) {
        validate_axis(grid.alphas, "alphas");
        validate_axis(grid.beta_offsets, "beta_offsets");
    }
    switch (d) {
        case Domain::gen_z_unit:
        case Domain::gen_z_pos:
        case Domain::gen_xy:
        case Domain::gs_z_real:
            validate_axis(grid.gammas, "gammas");
            validate_axis(grid.sigma_offsets, "sigma_offsets");
            break;
        case Domain::ml_z_unit:
        case Domain::ml_z_pos:
        case Domain::ml_xy:
            validate_axis(grid.sigma_offsets, "sigma_offsets");
            break;
        default: break;
    }
    validate_axis(grid.z_unit, "z_unit");
    const std::vector<double> z_pos =
        sorted([&] {
            std::vector<double> v = grid.z_unit;
            v.insert(v.end(), grid.z_positive_extra.begin(), grid.z_positive_extra.end());
            return v;
        }());
    const std::vector<double> z_real = [&] {
        std::vector<double> v;
        for (double z : z_pos) v.push_back(-z);
        v.insert(v.end(), z_pos.begin(), z_pos.end());
        return sorted(v);
    }();
    const std::vector<double> sigmas = [&] {
        std::vector<double> v;
        for (double g0 : grid.gammas) {
            for (double off : grid.sigma_offsets) v.push_back(g0 + off);
        }
        return sorted(v);
    }();
    // Mittag-Leffler sigma values descend from the gamma = 1 identity.
    const std::vector<double> ml_sigmas = [&] {
        std::vector<double> v;
        for (double off : grid.sigma_offsets) v.push_back(1.0 + off);
        return sorted(v);
    }();

    std::vector<AuditPoint> pts;
    auto wright_axes = [&](const std::vector<double>& zs, bool xy) {
        for (double a : grid.alphas) {
            for (double off : grid.beta_offsets) {
                AuditPoint p;
                p.alpha = a;
                p.beta = a + off;
                if (xy) {
                    for (auto [x, y] : grid.xy_pairs) {
                        p.x = x;
                        p.y = y;
                        pts.push_back(p);
                    }
                } else {
                    for (double z : zs) {
                        p.z = z;
                        pts.push_back(p);
                    }
                }
            }
        }
    };
    auto gen_axes = [&](const std::vector<double>& zs, bool xy) {
        for (double a : grid.alphas) {
            for (double off : grid.beta_offsets) {
                for (double g0 : grid.gammas) {
                    for (double soff : grid.sigma_offsets) {
                        AuditPoint p;
                        p.alpha = a;
                        p.beta = a + off;
                        p.gamma = g0;
                        p.sigma = g0 + soff;
                        if (xy) {
                            for (auto [x, y] : grid.xy_pairs) {
                                p.x = x;
                                p.y = y;
                                pts.push_back(p);
                            }
                        } else {
                            for (double z : zs) {
                                p.z = z;
                                pts.push_back(p);
                            }
                        }
                    }
                }
            }
        }
    };
    auto ml_axes = [&](const std::vector<double>& zs, bool xy) {
        for (double a : grid.alphas) {
            for (double off : grid.beta_offsets) {
                for (double s : ml_sigmas) {
                    AuditPoint p;
                    p.alpha = a;
                    p.beta = a + off;
                    p.sigma = s;
                    if (xy) {
                        for (auto [x, y] : grid.xy_pairs) {
                            p.x = x;
                            p.y = y;
                            pts.push_back(p);
                        }
                    } else {
                        for (double z : zs) {
                            p.z = z;
                            pts.push_back(p);
                        }
                    }
                }
            }
        }
    };

    switch (d) {
        case Domain::wright_z_unit: wright_axes(sorted(grid.z_unit), false); break;
        case Domain::wright_z_pos: wright_axes(z_pos, false); break;
        case Domain::wright_z_real: wright_axes(z_real, false); break;
        case Domain::wright_xy: wright_axes({}, true); break;
        case Domain::gen_z_unit: gen_axes(sorted(grid.z_unit), false); break;
        case Domain::gen_z_pos: gen_axes(z_pos, false); break;
        case Domain::gen_xy: gen_axes({}, true); break;
        case Domain::gs_z_real: {
            for (double g0 : grid.gammas) {
                for (double soff : grid.sigma_offsets) {
                    AuditPoint p;
                    p.gamma = g0;
                    p.sigma = g0 + soff;
                    for (double z : z_real) {
                        p.z = z;
                        pts.push_back(p);
                    }
                }
            }
            break;
        }
        case Domain::ml_z_unit: ml_axes(sorted(grid.z_unit), false); break;
        case Domain::ml_z_pos: ml_axes(z_pos, false); break;
        case Domain::ml_xy: ml_axes({}, true); break;
    }
    return pts;
}

}  // namespace

AuditReport audit_sweep(const std::vector<InequalityId>& ids, const GridSpec& grid) {
    if (ids.empty()) throw ConfigError("audit_sweep: no inequality ids given");
    AuditReport report;
    // Deterministic order: catalog order, each id once.
    for (const auto& e : catalog()) {
        if (std::find(ids.begin(), ids.end(), e.id) == ids.end()) continue;
        const bool xy = uses_xy(e.domain);
        if (xy && grid.xy_pairs.empty()) {
            throw ConfigError("audit_sweep: grid has no (x, y) pairs");
        }
        AuditSummary sum;
        sum.id = e.id;
        sum.worst_margin = std::numeric_limits<double>::infinity();
        bool any_margin = false;
        for (const AuditPoint& pt : points_for(e.domain, grid)) {
            AuditRecord rec = evaluate_inequality(e.id, pt);
            const bool neg_z = pt.z && *pt.z < 0.0;
            ++sum.points;
            switch (rec.status) {
                case AuditStatus::holds:
                    neg_z ? void(++sum.neg_z_holds) : void(++sum.holds);
                    break;
                case AuditStatus::violated:
                    neg_z ? void(++sum.neg_z_violated) : void(++sum.violated);
                    break;
                case AuditStatus::hypothesis_not_met: ++sum.hypothesis_not_met; break;
                case AuditStatus::eval_error: ++sum.eval_errors; break;
            }
            if (neg_z) ++sum.neg_z_points;
            if (rec.margin && !neg_z) {
                if (*rec.margin < sum.worst_margin) {
                    sum.worst_margin = *rec.margin;
                    sum.worst_point = pt;
                }
                any_margin = true;
            }
            report.records.push_back(std::move(rec));
        }
        if (!any_margin) sum.worst_margin = 0.0;
        report.summaries.push_back(std::move(sum));
    }
    return report;
}

const std::vector<InequalityId>& all_inequality_ids() {
    static const std::vector<InequalityId> ids = [] {
        std::vector<InequalityId> v;
        for (const auto& e : catalog()) v.push_back(e.id);
        return v;
    }();
    return ids;
}

AuditClass audit_class(InequalityId id) { return entry_for(id).cls; }

std::string to_string(InequalityId id) { return entry_for(id).name; }

std::optional<InequalityId> inequality_id_from_string(const std::string& name) {
    for (const auto& e : catalog()) {
        if (name == e.name) return e.id;
    }
    return std::nullopt;
}

std::string to_string(AuditStatus s) {
    switch (s) {
        case AuditStatus::holds: return "holds";
        case AuditStatus::violated: return "violated";
        case AuditStatus::hypothesis_not_met: return "hypothesis_not_met";
        case AuditStatus::eval_error: return "eval_error";
    }
    return "unknown";
}

std::string hypothesis_text(InequalityId id) { return entry_for(id).hypothesis; }

}  // namespace wrightkit
