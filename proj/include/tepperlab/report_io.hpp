#pragma once

// Text and JSON renderings of verification results.
//
// JSON objects carry "schema_version": 1 and either "identity_name" (identity
// reports) or "command" (occupancy, wilson, powersum, summary). Rationals are
// "num/den" strings, polynomials are arrays of such strings lowest degree
// first, counts and residues are decimal strings. Nothing is ever emitted as
// a JSON number except the summary tallies.

#include "tepperlab/identities.hpp"
#include "tepperlab/numtheory.hpp"
#include "tepperlab/occupancy.hpp"

#include <nlohmann/json.hpp>

#include <cstddef>
#include <optional>
#include <string>

namespace tepperlab {

inline constexpr int kReportSchemaVersion = 1;

using Json = nlohmann::ordered_json;

/// Report for commands that are not one of the named identities.
struct CommandReport {
  std::string command;
  std::string parameters;
  std::optional<std::string> claimed;
  std::optional<std::string> computed;
  /// nullopt for informational reports that make no claim.
  std::optional<bool> passed;
  /// Free-form trailer for the text rendering ("agrees", "oracle=unavailable").
  std::string note;
  std::string text_status;  // overrides PASS/FAIL/INFO when set
};

struct Tally {
  std::size_t total = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t input_errors = 0;

  void add(const IdentityReport& r);
  void add(const CommandReport& r);
};

Json value_to_json(const ReportValue& v);
std::string value_to_text(const ReportValue& v);

Json to_json(const IdentityReport& r);
std::string to_text(const IdentityReport& r);

Json to_json(const CommandReport& r);
std::string to_text(const CommandReport& r);

Json to_json(const Tally& t);
std::string to_text(const Tally& t);

CommandReport to_command_report(const OccupancyParams& params, const OccupancyResult& result);
CommandReport to_command_report(const ModularCheck& check);

}  // namespace tepperlab
