#include "tepperlab/report_io.hpp"

#include "tepperlab/parser.hpp"

namespace tepperlab {

void Tally::add(const IdentityReport& r) {
  ++total;
  switch (r.status) {
    case ReportStatus::passed: ++passed; break;
    case ReportStatus::failed: ++failed; break;
    case ReportStatus::input_error: ++input_errors; break;
  }
}

void Tally::add(const CommandReport& r) {
  ++total;
  if (!r.passed) return;
  if (*r.passed) {
    ++passed;
  } else {
    ++failed;
  }
}

Json value_to_json(const ReportValue& v) {
  if (const auto* q = std::get_if<Rational>(&v)) return q->to_fraction_string();
  if (const auto* p = std::get_if<Polynomial>(&v)) {
    Json arr = Json::array();
    for (const auto& c : p->coefficients()) arr.push_back(c.to_fraction_string());
    return arr;
  }
  return nullptr;
}

std::string value_to_text(const ReportValue& v) {
  if (const auto* q = std::get_if<Rational>(&v)) return q->to_string();
  if (const auto* p = std::get_if<Polynomial>(&v)) return render_polynomial(*p);
  return "none";
}

Json to_json(const IdentityReport& r) {
  Json j;
  j["schema_version"] = kReportSchemaVersion;
  j["identity_name"] = std::string(to_string(r.name));
  j["parameters"] = r.parameters;
  j["claimed"] = value_to_json(r.claimed);
  j["computed"] = value_to_json(r.computed);
  j["passed"] = r.passed();
  if (r.witness) j["witness"] = value_to_json(*r.witness);
  if (r.is_input_error()) j["input_error"] = r.input_error;
  return j;
}

std::string to_text(const IdentityReport& r) {
  const std::string subject = std::string(to_string(r.name)) + " " + r.parameters;
  if (r.is_input_error()) return "INPUT-ERROR " + r.input_error + ": " + subject;
  return std::string(r.passed() ? "PASS " : "FAIL ") + subject + " computed=" + value_to_text(r.computed) +
         " claimed=" + value_to_text(r.claimed);
}

Json to_json(const CommandReport& r) {
  Json j;
  j["schema_version"] = kReportSchemaVersion;
  j["command"] = r.command;
  j["parameters"] = r.parameters;
  j["claimed"] = r.claimed ? Json(*r.claimed) : Json(nullptr);
  j["computed"] = r.computed ? Json(*r.computed) : Json(nullptr);
  j["passed"] = r.passed ? Json(*r.passed) : Json(nullptr);
  return j;
}

std::string to_text(const CommandReport& r) {
  std::string status = r.text_status;
  if (status.empty()) status = !r.passed ? "INFO" : (*r.passed ? "PASS" : "FAIL");
  std::string line = status + " " + r.command + " " + r.parameters;
  if (!r.note.empty()) line += " " + r.note;
  return line;
}

Json to_json(const Tally& t) {
  Json j;
  j["schema_version"] = kReportSchemaVersion;
  j["command"] = "summary";
  j["total"] = t.total;
  j["passed"] = t.passed;
  j["failed"] = t.failed;
  j["input_errors"] = t.input_errors;
  return j;
}

std::string to_text(const Tally& t) {
  return "SUMMARY total=" + std::to_string(t.total) + " passed=" + std::to_string(t.passed) +
         " failed=" + std::to_string(t.failed) + " input-errors=" + std::to_string(t.input_errors);
}

CommandReport to_command_report(const OccupancyParams& params, const OccupancyResult& result) {
  CommandReport r;
  r.command = "occupancy";
  r.parameters = "wagons=" + std::to_string(params.wagons()) + " passengers=" + std::to_string(params.passengers()) +
                 " occupied=" + std::to_string(params.occupied());
  r.claimed = result.closed_form.to_string();
  r.note = "closed_form=" + result.closed_form.to_string();
  if (result.oracle) {
    r.computed = result.oracle->to_string();
    r.passed = *result.agrees();
    r.note += " oracle=" + result.oracle->to_string() + (*r.passed ? " agrees" : " disagrees");
  } else {
    r.note += " oracle=not-checked";
  }
  return r;
}

CommandReport to_command_report(const ModularCheck& check) {
  CommandReport r;
  r.command = "wilson";
  r.parameters = "p=" + std::to_string(check.modulus) + " route=" + std::string(to_string(check.route));
  r.claimed = std::to_string(check.expected_residue);
  r.computed = std::to_string(check.computed_residue);
  r.passed = check.passed();
  r.note = "computed=" + *r.computed + " expected=" + *r.claimed;
  return r;
}

}  // namespace tepperlab
