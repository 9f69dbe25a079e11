#pragma once

#include <string>

#include "qrhc/config.hpp"
#include "qrhc/json_writer.hpp"

namespace qrhc {

// Outcome of one inequality check.  slack is signed with positive meaning
// satisfied, so pass <=> slack >= -tol regardless of the inequality's
// direction.
struct VerificationReport {
  std::string inequality_id;
  JsonValue::Object params;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  double tol = 0.0;
  bool pass = false;
  JsonValue witness;  // null when no witness is attached
};

// tol = tol_rel * max(1, |lhs|, |rhs|); throws if lhs or rhs is not finite
VerificationReport make_report(std::string inequality_id, JsonValue::Object params, double lhs,
                               double rhs, double slack, double tol_rel = default_tol_rel,
                               JsonValue witness = nullptr);

JsonValue report_to_json(const VerificationReport& r);

}  // namespace qrhc
