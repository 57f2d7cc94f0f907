#include "submul/report.hpp"

#include <sstream>

#include "submul/error.hpp"

namespace submul {

nlohmann::json verdict_to_json(Verdict v) {
  switch (v) {
    case Verdict::holds: return true;
    case Verdict::fails: return false;
    case Verdict::holds_capped: return "holds-capped";
    case Verdict::vacuous: return "vacuous";
    case Verdict::inconclusive: return "inconclusive";
  }
  return nullptr;
}

Verdict verdict_from_json(const nlohmann::json& j) {
  if (j.is_boolean()) return j.get<bool>() ? Verdict::holds : Verdict::fails;
  if (j == "holds-capped") return Verdict::holds_capped;
  if (j == "vacuous") return Verdict::vacuous;
  if (j == "inconclusive") return Verdict::inconclusive;
  throw InvalidArgument("unknown verdict " + j.dump());
}

std::string verdict_to_text(Verdict v) {
  auto j = verdict_to_json(v);
  return j.is_string() ? j.get<std::string>() : j.dump();
}

void to_json(nlohmann::json& j, const PropertyReport& r) {
  j = nlohmann::json{{"property", r.property},
                     {"holds", verdict_to_json(r.verdict)},
                     {"witness", r.witness},
                     {"counters", r.counters},
                     {"caps", r.caps},
                     {"seed", r.seed ? nlohmann::json(*r.seed) : nlohmann::json(nullptr)}};
}

void from_json(const nlohmann::json& j, PropertyReport& r) {
  try {
    r.property = j.at("property").get<std::string>();
    r.verdict = verdict_from_json(j.at("holds"));
    r.witness = j.value("witness", nlohmann::json(nullptr));
    r.counters = j.value("counters", std::map<std::string, std::uint64_t>{});
    r.caps = j.value("caps", std::vector<std::string>{});
    if (j.contains("seed") && !j["seed"].is_null())
      r.seed = j["seed"].get<std::uint64_t>();
    else
      r.seed.reset();
  } catch (const nlohmann::json::exception& ex) {
    throw InvalidArgument(std::string("malformed report: ") + ex.what());
  }
}

std::string report_to_text(const PropertyReport& r) {
  nlohmann::json j = r;
  std::ostringstream os;
  for (const char* key : {"property", "holds", "witness", "counters", "caps", "seed"}) {
    const auto& v = j[key];
    os << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
  }
  return os.str();
}

PropertyReport report_from_text(const std::string& text) {
  nlohmann::json j = nlohmann::json::object();
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    auto colon = line.find(": ");
    if (colon == std::string::npos) continue;
    std::string key = line.substr(0, colon), value = line.substr(colon + 2);
    if (key == "property") {
      j[key] = value;
    } else if (key == "holds" && (value == "holds-capped" || value == "vacuous" || value == "inconclusive")) {
      j[key] = value;
    } else {
      try {
        j[key] = nlohmann::json::parse(value);
      } catch (const nlohmann::json::exception&) {
        throw InvalidArgument("malformed report line: " + line);
      }
    }
  }
  return j.get<PropertyReport>();
}

int exit_code(const PropertyReport& r) {
  switch (r.verdict) {
    case Verdict::holds: return 0;
    case Verdict::fails: return 1;
    default: return 2;
  }
}

}  // namespace submul
