#pragma once

// Outcome record shared by every property check.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace submul {

enum class Verdict {
  holds,         // verified exhaustively
  fails,         // a replayable witness is attached
  holds_capped,  // no failure found, but some quantifier was bounded
  vacuous,       // a precondition of the statement failed, nothing asserted
  inconclusive,  // a size cap stopped the check before any verdict
};

/// Serialized value of the "holds" field: true, false, "holds-capped",
/// "vacuous" or "inconclusive".
nlohmann::json verdict_to_json(Verdict v);
Verdict verdict_from_json(const nlohmann::json& j);
std::string verdict_to_text(Verdict v);

struct PropertyReport {
  std::string property;
  Verdict verdict = Verdict::holds;
  nlohmann::json witness;  // null unless verdict == fails
  std::map<std::string, std::uint64_t> counters;
  std::vector<std::string> caps;
  std::optional<std::uint64_t> seed;

  bool ok() const noexcept { return verdict == Verdict::holds || verdict == Verdict::holds_capped; }
  bool operator==(const PropertyReport&) const = default;
};

void to_json(nlohmann::json& j, const PropertyReport& r);
void from_json(const nlohmann::json& j, PropertyReport& r);

/// One "key: value" line per field, in the same order and with the same
/// values as the structured form.
std::string report_to_text(const PropertyReport& r);
PropertyReport report_from_text(const std::string& text);

/// CLI exit status: 0 holds, 1 fails, 2 for every other verdict.
int exit_code(const PropertyReport& r);

}  // namespace submul
