#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "relcalc/algebra.hpp"
#include "relcalc/bayes.hpp"
#include "relcalc/catalog.hpp"
#include "relcalc/evidence.hpp"
#include "relcalc/opinion.hpp"

namespace relcalc {

inline constexpr int kSchemaVersion = 1;

/// Decimal places used for every real number in machine-readable output;
/// fixed so that identical inputs give identical bytes.
inline constexpr int kOutputPrecision = 9;

enum class OutputFormat { text, json, csv };

std::string_view output_format_name(OutputFormat format);
std::optional<OutputFormat> output_format_from_name(std::string_view name);

/// Run-wide computation settings. Defaults: the 40:20:40 weightage, signs
/// (-1, +1, +1), epsilon 0.1, derived septuple, text output.
struct RunConfig {
  WeightConfig weights{0.40, 0.20, 0.40};
  SignConfig signs = default_signs();
  std::optional<SeptupleConfig> septuple;
  double epsilon = 0.1;
  OutputFormat format = OutputFormat::text;
};

// File parsers. Schemas are strict: unknown fields are rejected. Errors carry
// the offending field path; IoError / SchemaError / ValidationError.
PropertyCatalog parse_catalog(const std::filesystem::path& path);
Dossier parse_dossier(const std::filesystem::path& path);
RunConfig parse_config(const std::filesystem::path& path);
MassFunction parse_mass(const std::filesystem::path& path);
SeptupleConfig parse_septuple(const std::filesystem::path& path);
Opinion parse_opinion(const std::filesystem::path& path);

/// Priors plus a stream of likelihood vectors for sequential updating.
struct BayesPartition {
  std::vector<double> priors;
  std::vector<std::vector<double>> evidence;
};
BayesPartition parse_partition(const std::filesystem::path& path);

// String-level parsers backing the file parsers; `origin` labels error
// messages.
PropertyCatalog parse_catalog_text(const std::string& text, const std::string& origin);
Dossier parse_dossier_text(const std::string& text, const std::string& origin);
RunConfig parse_config_text(const std::string& text, const std::string& origin);
MassFunction parse_mass_text(const std::string& text, const std::string& origin);
SeptupleConfig parse_septuple_text(const std::string& text, const std::string& origin);
Opinion parse_opinion_text(const std::string& text, const std::string& origin);
BayesPartition parse_partition_text(const std::string& text, const std::string& origin);

/// One line of the per-property contribution table. The signed weighted
/// contributions sum to the headline trust perception.
struct ContributionRow {
  Stance stance = Stance::neutral;
  std::string property_id;
  AssessmentStatus status = AssessmentStatus::disabled;
  double effective_value = 0.0;
  double contribution = 0.0;
};

/// Full relation-computation result with its input echo.
struct Report {
  std::string observer;
  NationId subject;
  NationId object;
  Period period;
  WeightConfig weights;
  SignConfig signs;
  double epsilon = 0.1;
  MassVector masses;
  ScaleBounds bounds;
  TrustPerception perception;
  std::vector<ContributionRow> contributions;
};

Report build_report(const Dossier& d, const PropertyCatalog& c, const RunConfig& cfg);

std::string render_report(const Report& report, OutputFormat format);
std::string render_catalog(const PropertyCatalog& c, OutputFormat format);
std::string render_ds(const MassFunction& m, OutputFormat format);
std::string render_mass(const MassFunction& m, OutputFormat format);
std::string render_posteriors(std::span<const double> posteriors, OutputFormat format);
std::string render_opinion(const Opinion& o);

}  // namespace relcalc
