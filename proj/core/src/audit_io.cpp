#include "wrightkit/audit_io.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace wrightkit {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

void put(ordered_json& j, const char* key, const std::optional<double>& v) {
    if (v) j[key] = *v;  // non-finite doubles serialize as null
}

ordered_json point_json(const AuditPoint& p) {
    ordered_json j = ordered_json::object();
    put(j, "alpha", p.alpha);
    put(j, "beta", p.beta);
    put(j, "gamma", p.gamma);
    put(j, "sigma", p.sigma);
    put(j, "z", p.z);
    put(j, "x", p.x);
    put(j, "y", p.y);
    return j;
}

std::string point_compact(const AuditPoint& p) {
    std::ostringstream os;
    os.precision(17);
    bool first = true;
    auto emit = [&](const char* k, const std::optional<double>& v) {
        if (!v) return;
        if (!first) os << ";";
        os << k << "=" << *v;
        first = false;
    };
    emit("alpha", p.alpha);
    emit("beta", p.beta);
    emit("gamma", p.gamma);
    emit("sigma", p.sigma);
    emit("z", p.z);
    emit("x", p.x);
    emit("y", p.y);
    return os.str();
}

}  // namespace

std::string record_to_json(const AuditRecord& rec) {
    ordered_json j;
    j["id"] = to_string(rec.id);
    j["point"] = point_json(rec.point);
    put(j, "lhs", rec.lhs);
    put(j, "rhs", rec.rhs);
    put(j, "value", rec.fn_value);
    put(j, "margin", rec.margin);
    j["status"] = to_string(rec.status);
    if (!rec.note.empty()) j["note"] = rec.note;
    return j.dump();
}

void write_jsonl(const AuditReport& report, std::ostream& os) {
    for (const auto& rec : report.records) {
        os << record_to_json(rec) << "\n";
    }
}

void write_csv_summary(const AuditReport& report, std::ostream& os) {
    os << "id,class,points,holds,violated,hypothesis_not_met,eval_errors,"
          "worst_margin,worst_point,neg_z_points,neg_z_holds,neg_z_violated\n";
    os.precision(17);
    for (const auto& s : report.summaries) {
        const char* cls = "asserted";
        if (audit_class(s.id) == AuditClass::suspect) cls = "suspect";
        if (audit_class(s.id) == AuditClass::swept) cls = "swept";
        os << to_string(s.id) << "," << cls << "," << s.points << "," << s.holds << ","
           << s.violated << "," << s.hypothesis_not_met << "," << s.eval_errors << ","
           << s.worst_margin << ",\"" << point_compact(s.worst_point) << "\","
           << s.neg_z_points << "," << s.neg_z_holds << "," << s.neg_z_violated << "\n";
    }
}

}  // namespace wrightkit
