#pragma once

// Command layer behind the submul tool, plus the verification harness.

#include <algorithm>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <thread>
#include <vector>

#include "submul/constructors.hpp"
#include "submul/properties.hpp"
#include "submul/report.hpp"

namespace submul {

enum class OutputFormat { text, structured };

struct RunConfig {
  std::size_t closure_cap = 4096;
  std::size_t section_cap = 256;
  int power_cap = 2;
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  OutputFormat format = OutputFormat::text;
  std::uint64_t seed = 1;

  /// Throws InvalidArgument unless every cap is positive.
  void validate() const;
};

/// Extra arguments for properties that take one.
struct CheckArgs {
  int engel_k = 0;  // 0 means p - 1
  int chi_j = 1;
};

std::vector<std::string> property_names();

/// Catalog of representations used for s-hat and s-tilde: Galois conjugates
/// for matrix groups, induced representations for basic groups, none
/// otherwise.
std::vector<RepImages> catalog_for(const GroupRecipe& recipe, const FiniteGroup& g);

/// Runs one property check. Cap overruns come back as an inconclusive
/// report rather than an exception.
PropertyReport cmd_check(const std::string& property, const GroupRecipe& recipe, const RunConfig& config,
                         const CheckArgs& args = {});

/// Writes the group file to out_path (or the stream if empty). Returns the exit code.
int cmd_construct(const GroupFamilySpec& spec, const std::string& out_path, std::ostream& out);

/// Order, exponent, class, series, center and power-structure orders.
nlohmann::json analyze(const FiniteGroup& g);
int cmd_analyze(const GroupRecipe& recipe, const RunConfig& config, std::ostream& out);

/// Spectrum, eigenvalues, order and determinant of a matrix file, or of each
/// generator of a monomial group file.
int cmd_spectrum(const nlohmann::json& file, const RunConfig& config, std::ostream& out);

/// Writes a report in the configured format.
void print_report(const PropertyReport& r, const RunConfig& config, std::ostream& out);

/// Renders a JSON object as "key: value" lines, or as indented JSON.
void print_object(const nlohmann::json& j, const RunConfig& config, std::ostream& out);

// Verification harness.

struct CorpusEntry {
  std::string name;
  GroupRecipe recipe;
};

/// The fixed set of groups used by the implication suites.
std::vector<CorpusEntry> corpus();

struct SuiteResult {
  std::string id;
  std::string title;
  bool passed = true;
  std::vector<std::string> lines;
  double seconds = 0;

  void expect(bool cond, const std::string& what);
  void note(const std::string& what);
};

std::vector<std::string> suite_ids();
SuiteResult run_suite(const std::string& id, const RunConfig& config);

/// Runs one suite or "all"; prints one verdict line per suite and returns 0
/// iff every suite passed.
int cmd_verify(const std::string& suite, const RunConfig& config, std::ostream& out, bool verbose = false);

}  // namespace submul
