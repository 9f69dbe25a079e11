#include "qrhc/report.hpp"

#include <cmath>
#include <stdexcept>

namespace qrhc {

VerificationReport make_report(std::string inequality_id, JsonValue::Object params, double lhs,
                               double rhs, double slack, double tol_rel, JsonValue witness) {
  if (!std::isfinite(lhs) || !std::isfinite(rhs))
    throw std::domain_error("make_report: non-finite side in " + inequality_id);
  VerificationReport r;
  r.inequality_id = std::move(inequality_id);
  r.params = std::move(params);
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = slack;
  r.tol = tol_rel * std::max({1.0, std::abs(lhs), std::abs(rhs)});
  r.pass = slack >= -r.tol;
  r.witness = std::move(witness);
  return r;
}

JsonValue report_to_json(const VerificationReport& r) {
  JsonValue out = JsonValue::object();
  out.set("inequality_id", r.inequality_id);
  out.set("params", JsonValue(r.params));
  out.set("lhs", r.lhs);
  out.set("rhs", r.rhs);
  out.set("slack", r.slack);
  out.set("tol", r.tol);
  out.set("pass", r.pass);
  out.set("witness", r.witness);
  return out;
}

}  // namespace qrhc
