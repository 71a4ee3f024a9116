#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "relcalc/algebra.hpp"

namespace relcalc {

/// Uppercase alphanumeric nation code ("USA", "IRN").
struct NationId {
  std::string code;

  static NationId make(std::string code);

  friend bool operator==(const NationId&, const NationId&) = default;
};

struct PropertyDef {
  std::string id;
  Stance stance = Stance::neutral;
  double value = 0.0;
  std::string description;
};

/// Per-stance property definitions with nominal values. Stance sums must not
/// exceed 1.
class PropertyCatalog {
 public:
  static PropertyCatalog make(std::vector<PropertyDef> properties);

  std::span<const PropertyDef> stance_properties(Stance s) const {
    return by_stance_[static_cast<std::size_t>(s)];
  }
  const PropertyDef* find(Stance s, std::string_view id) const;
  double stance_total(Stance s) const;

 private:
  std::array<std::vector<PropertyDef>, kStanceCount> by_stance_;
};

/// Built-in per-stance property tables with their nominal values.
PropertyCatalog default_catalog();

enum class AssessmentStatus { enabled, disabled, toggled };

std::string_view assessment_status_name(AssessmentStatus status);
std::optional<AssessmentStatus> assessment_status_from_name(std::string_view name);

/// One observer judgement about one catalog property. A toggled property
/// (events that both held and lapsed within the period) contributes half its
/// value.
struct Assessment {
  Stance stance = Stance::neutral;
  std::string property_id;
  AssessmentStatus status = AssessmentStatus::disabled;
  std::optional<double> override_value;
};

struct Period {
  int from_year = 0;
  int to_year = 0;
};

/// One observer's assessment of a nation pair over a period.
class Dossier {
 public:
  static Dossier make(std::string observer, NationId subject, NationId object,
                      Period period, std::vector<Assessment> assessments,
                      std::vector<std::string> evidence_notes = {});

  const std::string& observer() const { return observer_; }
  const NationId& subject() const { return subject_; }
  const NationId& object() const { return object_; }
  const Period& period() const { return period_; }
  const std::vector<Assessment>& assessments() const { return assessments_; }
  const std::vector<std::string>& evidence_notes() const { return evidence_notes_; }

  const Assessment* find_assessment(Stance s, std::string_view property_id) const;

  /// True when at least one assessment is enabled or toggled; otherwise the
  /// relation is undefined.
  bool has_active_assessment() const;

 private:
  std::string observer_;
  NationId subject_;
  NationId object_;
  Period period_;
  std::vector<Assessment> assessments_;
  std::vector<std::string> evidence_notes_;
};

/// Enabled -> v, Disabled -> 0, Toggled -> v/2, where v is the override value
/// when present and the nominal value otherwise.
double effective_value(const PropertyDef& property, const Assessment& assessment);

/// Per-stance sums of effective values over the catalog; properties without
/// an assessment count as disabled. Throws UnknownProperty / MassOverflow.
MassVector assemble_masses(const Dossier& d, const PropertyCatalog& c);

/// Full pipeline from a dossier to a trust perception. A reflexive dossier
/// (subject = object) is always friendly at the scale's upper bound; a
/// dossier with no enabled or toggled assessment yields an undefined stance.
/// Passing no septuple config selects the default septuple for the bounds.
TrustPerception evaluate_dossier(const Dossier& d, const PropertyCatalog& c,
                                 const WeightConfig& w, const SignConfig& s,
                                 const std::optional<SeptupleConfig>& septuple,
                                 double epsilon);

}  // namespace relcalc
