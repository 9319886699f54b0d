#pragma once

// Catalog of auditable inequalities for the Wright family, each entry a
// signed-margin evaluator gated by its stated hypothesis, plus grid sweeps
// producing machine-readable reports.
//
// margin = (claimed-larger side - claimed-smaller side) / max(1,|lhs|,|rhs|);
// margin >= 0 means the inequality holds at the point. Margins in
// (-slack, 0) with slack = 1e-12 are reported as holds with a roundoff note.
// Entries marked `suspect` are swept but never hard-asserted; violations are
// expected and recorded with reproducible counterexample points.

#include <optional>
#include <string>
#include <vector>

#include "wrightkit/types.hpp"

namespace wrightkit {

enum class InequalityId {
    W_NONNEG,
    SUPERADD_25,
    SUPERADD_25K,
    TURAN_26,
    EXPLB_27,
    UB_29,
    PROD_210,
    DOUBLING_211,
    TS_FW_ALPHA,
    UB_6666,
    LB_777,
    SUPERADD_Z0,
    TURAN_Z1,
    EXPLB_Z2,
    TURAN_SIGMA_Z3,
    TURAN_GAMMA,
    TS_FW_GS,
    UB_88,
    LB_888,
    UB_1010,
    IDENT_1010,
    PROD_11111,
    ML_SUPERADD,
    ML_TURAN_Z,
    ML_EXPLB,
    ML_TURAN_SIGMA,
    ML_UB,
    ML_PROD,
};

/// Assertion class of a catalog entry.
///   asserted: expected to hold at every hypothesis-satisfying grid point.
///   suspect:  stated with a sign/constant that fails an expansion sanity
///             check; swept, violations recorded, never asserted.
///   swept:    audited and reported without any assertion either way.
enum class AuditClass { asserted, suspect, swept };

/// One sweep point. Unused coordinates stay disengaged; super-additivity
/// entries use (x, y) instead of z.
struct AuditPoint {
    std::optional<double> alpha, beta, gamma, sigma, z, x, y;
};

enum class AuditStatus { holds, violated, hypothesis_not_met, eval_error };

struct AuditRecord {
    InequalityId id;
    AuditPoint point;
    std::optional<double> lhs, rhs;   // the two sides as written in the catalog
    std::optional<double> fn_value;   // sandwiched value for two-sided bounds
    std::optional<double> margin;     // normalized signed margin
    AuditStatus status = AuditStatus::hypothesis_not_met;
    std::string note;
};

struct AuditSummary {
    InequalityId id;
    int points = 0;
    int holds = 0;
    int violated = 0;
    int hypothesis_not_met = 0;
    int eval_errors = 0;
    double worst_margin = 0.0;  // minimum margin among evaluated points
    AuditPoint worst_point;
    // z < 0 extension of the two-sided Fox-Wright bounds, summarized apart.
    int neg_z_points = 0;
    int neg_z_holds = 0;
    int neg_z_violated = 0;
};

struct AuditReport {
    std::vector<AuditRecord> records;
    std::vector<AuditSummary> summaries;
};

/// Pogany-Srivastava moments psi_m = prod Gamma(a_j + alpha_j m)
///                                  / prod Gamma(b_j + beta_j m), m = 0,1,2.
struct PSMoments {
    double psi0, psi1, psi2;
};

/// Throws DomainError if any Gamma argument is non-positive for m in {0,1,2}.
PSMoments ps_moments(const FoxWrightSpec& s);

/// The two-sided bound applies when psi1 > psi2 and psi1^2 < psi0 psi2.
bool ps_conditions_hold(const PSMoments& m);

/// Cartesian sweep description. betas are alpha + beta_offsets; sigmas are
/// gamma + sigma_offsets; z-in-(0,1) entries sweep z_unit, z > 0 entries
/// additionally sweep z_positive_extra, two-sided real-z entries also sweep
/// the negated values; super-additivity entries sweep xy_pairs.
struct GridSpec {
    std::vector<double> alphas;
    std::vector<double> beta_offsets;
    std::vector<double> gammas;
    std::vector<double> sigma_offsets;
    std::vector<double> z_unit;
    std::vector<double> z_positive_extra;
    std::vector<std::pair<double, double>> xy_pairs;

    static GridSpec default_grid();
};

/// Evaluate one catalog entry at one point. Hypothesis failure yields
/// status hypothesis_not_met; evaluation failures are wrapped into
/// status eval_error with the cause in `note`.
AuditRecord evaluate_inequality(InequalityId id, const AuditPoint& point);

/// Sweep the given entries over the grid. Records are ordered by id, then
/// lexicographically by point; summaries aggregate exactly the records.
/// Throws ConfigError on an empty or non-finite grid.
AuditReport audit_sweep(const std::vector<InequalityId>& ids, const GridSpec& grid);

/// Catalog access.
const std::vector<InequalityId>& all_inequality_ids();
AuditClass audit_class(InequalityId id);
std::string to_string(InequalityId id);
std::optional<InequalityId> inequality_id_from_string(const std::string& name);
std::string to_string(AuditStatus s);
/// Human-readable hypothesis of the entry, as gated by the evaluator.
std::string hypothesis_text(InequalityId id);

}  // namespace wrightkit
