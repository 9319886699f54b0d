#pragma once

// Stable report serialization.
//
// JSON lines, one record per line:
//   {"id": "...", "point": {"alpha": ..., "z": ...}, "lhs": ..., "rhs": ...,
//    "value": ..., "margin": ..., "status": "...", "note": "..."}
// "value" appears only for two-sided entries; non-finite numbers serialize
// as null; "note" is omitted when empty. Doubles use the shortest
// round-trip representation.
//
// CSV summary, one row per entry:
//   id,class,points,holds,violated,hypothesis_not_met,eval_errors,
//   worst_margin,worst_point,neg_z_points,neg_z_holds,neg_z_violated

#include <iosfwd>
#include <string>

#include "wrightkit/audit.hpp"

namespace wrightkit {

void write_jsonl(const AuditReport& report, std::ostream& os);
void write_csv_summary(const AuditReport& report, std::ostream& os);

std::string record_to_json(const AuditRecord& rec);

}  // namespace wrightkit
