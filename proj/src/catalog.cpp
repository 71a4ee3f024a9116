#include "relcalc/catalog.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

#include "relcalc/error.hpp"

namespace relcalc {

NationId NationId::make(std::string code) {
  if (code.empty()) {
    fail(errc::validation_error, "nation code must be non-empty");
  }
  for (char c : code) {
    if (!std::isupper(static_cast<unsigned char>(c)) &&
        !std::isdigit(static_cast<unsigned char>(c))) {
      fail(errc::validation_error,
           "nation code '" + code + "' must be uppercase alphanumeric");
    }
  }
  return NationId{std::move(code)};
}

PropertyCatalog PropertyCatalog::make(std::vector<PropertyDef> properties) {
  PropertyCatalog catalog;
  for (auto& p : properties) {
    if (p.id.empty()) {
      fail(errc::validation_error, "property id must be non-empty");
    }
    if (!std::isfinite(p.value) || p.value < 0.0 || p.value > 1.0) {
      std::ostringstream out;
      out << stance_name(p.stance) << " property " << p.id << " value " << p.value
          << " is outside [0, 1]";
      fail(errc::validation_error, out.str());
    }
    auto& bucket = catalog.by_stance_[static_cast<std::size_t>(p.stance)];
    for (const auto& existing : bucket) {
      if (existing.id == p.id) {
        std::ostringstream out;
        out << "duplicate " << stance_name(p.stance) << " property id " << p.id;
        fail(errc::validation_error, out.str());
      }
    }
    bucket.push_back(std::move(p));
  }
  for (Stance s : kStances) {
    const double total = catalog.stance_total(s);
    if (total > 1.0 + kTol) {
      std::ostringstream out;
      out << stance_name(s) << " property values sum to " << total << ", exceeding 1";
      fail(errc::validation_error, out.str());
    }
  }
  return catalog;
}

const PropertyDef* PropertyCatalog::find(Stance s, std::string_view id) const {
  for (const auto& p : by_stance_[static_cast<std::size_t>(s)]) {
    if (p.id == id) return &p;
  }
  return nullptr;
}

double PropertyCatalog::stance_total(Stance s) const {
  double total = 0.0;
  for (const auto& p : by_stance_[static_cast<std::size_t>(s)]) total += p.value;
  return total;
}

PropertyCatalog default_catalog() {
  std::vector<PropertyDef> properties;
  const auto add = [&properties](Stance stance, const char* id, double value,
                                 const char* description) {
    properties.push_back(PropertyDef{id, stance, value, description});
  };

  add(Stance::friendly, "P1", 0.5, "War ally and mutual defense pact during war.");
  add(Stance::friendly, "P2", 0.2,
      "Share/trade nuclear technologies and materials (e.g. uranium) or mass destruction "
      "weapon for warfare. Arm collaboration in R&D for warfare. Financial aid for "
      "warfare.");
  add(Stance::friendly, "P3", 0.1, "Head of the state political sentiment and relationships.");
  add(Stance::friendly, "P4", 0.1,
      "Loan or share strategic technologies and equipment. Civil nuclear trade and "
      "agreement. Defense pact that enable during peace.");
  add(Stance::friendly, "P5", 0.075,
      "Share military intelligent. Large scale of joint military drills.");
  add(Stance::friendly, "P6", 0.025, "Global War on Terrorism (GWOT)");

  add(Stance::neutral, "P1", 0.25, "Member of UN or nation state recognized by UN.");
  add(Stance::neutral, "P2", 0.35,
      "Economic cooperation. E.g. Bilateral trade, multilateral open market, free trade.");
  add(Stance::neutral, "P3", 0.40,
      "Diplomatic mission (embassy or representative). Disaster aid and peacekeeping.");

  add(Stance::hostile, "P1", 0.5, "War Enemy");
  add(Stance::hostile, "P2", 0.2,
      "Strong disapproval of share/trade/usage nuclear technologies and materials, or mass "
      "destruction weapon. E.g. nuclear testing, intercontinental ballistic missile (ICBM) "
      "development and testing, and arms races.");
  add(Stance::hostile, "P3", 0.075,
      "Economy blockage or sanction. Embargo or boycott. (e.g. large scale product boycott, "
      "ban visa)");
  add(Stance::hostile, "P4", 0.125,
      "Closed border military aggressive or hostility. Including land, air, maritime "
      "trespassing and terrorism. *peaceful dispute through international law is not "
      "included.");
  add(Stance::hostile, "P5", 0.05, "Political sentiments and threat by the head of state.");
  add(Stance::hostile, "P6", 0.05,
      "Kill or arrest another nation diplomats. Espionage. (e.g. spying and hacking)");

  return PropertyCatalog::make(std::move(properties));
}

std::string_view assessment_status_name(AssessmentStatus status) {
  switch (status) {
    case AssessmentStatus::enabled: return "enabled";
    case AssessmentStatus::disabled: return "disabled";
    case AssessmentStatus::toggled: return "toggled";
  }
  return "?";
}

std::optional<AssessmentStatus> assessment_status_from_name(std::string_view name) {
  for (AssessmentStatus s : {AssessmentStatus::enabled, AssessmentStatus::disabled,
                             AssessmentStatus::toggled}) {
    if (assessment_status_name(s) == name) return s;
  }
  return std::nullopt;
}

Dossier Dossier::make(std::string observer, NationId subject, NationId object,
                      Period period, std::vector<Assessment> assessments,
                      std::vector<std::string> evidence_notes) {
  if (period.from_year > period.to_year) {
    std::ostringstream out;
    out << "period " << period.from_year << "-" << period.to_year << " is reversed";
    fail(errc::validation_error, out.str());
  }
  for (std::size_t i = 0; i < assessments.size(); ++i) {
    const auto& a = assessments[i];
    if (a.property_id.empty()) {
      fail(errc::validation_error, "assessment property id must be non-empty");
    }
    if (a.override_value) {
      const double v = *a.override_value;
      if (!std::isfinite(v) || v < 0.0 || v > 1.0) {
        std::ostringstream out;
        out << "override value " << v << " for " << stance_name(a.stance) << " "
            << a.property_id << " is outside [0, 1]";
        fail(errc::validation_error, out.str());
      }
    }
    for (std::size_t j = i + 1; j < assessments.size(); ++j) {
      if (assessments[j].stance == a.stance && assessments[j].property_id == a.property_id) {
        std::ostringstream out;
        out << "duplicate assessment for " << stance_name(a.stance) << " property "
            << a.property_id;
        fail(errc::validation_error, out.str());
      }
    }
  }
  Dossier d;
  d.observer_ = std::move(observer);
  d.subject_ = std::move(subject);
  d.object_ = std::move(object);
  d.period_ = period;
  d.assessments_ = std::move(assessments);
  d.evidence_notes_ = std::move(evidence_notes);
  return d;
}

const Assessment* Dossier::find_assessment(Stance s, std::string_view property_id) const {
  for (const auto& a : assessments_) {
    if (a.stance == s && a.property_id == property_id) return &a;
  }
  return nullptr;
}

bool Dossier::has_active_assessment() const {
  for (const auto& a : assessments_) {
    if (a.status != AssessmentStatus::disabled) return true;
  }
  return false;
}

double effective_value(const PropertyDef& property, const Assessment& assessment) {
  const double nominal = assessment.override_value.value_or(property.value);
  switch (assessment.status) {
    case AssessmentStatus::enabled: return nominal;
    case AssessmentStatus::disabled: return 0.0;
    case AssessmentStatus::toggled: return nominal / 2.0;
  }
  return 0.0;
}

MassVector assemble_masses(const Dossier& d, const PropertyCatalog& c) {
  for (const auto& a : d.assessments()) {
    if (c.find(a.stance, a.property_id) == nullptr) {
      std::ostringstream out;
      out << stance_name(a.stance) << " property " << a.property_id
          << " is not in the catalog";
      fail(errc::unknown_property, out.str());
    }
  }
  std::array<std::vector<double>, kStanceCount> values;
  for (Stance s : kStances) {
    for (const auto& p : c.stance_properties(s)) {
      const Assessment* a = d.find_assessment(s, p.id);
      values[static_cast<std::size_t>(s)].push_back(a ? effective_value(p, *a) : 0.0);
    }
  }
  return aggregate_mass(values[0], values[1], values[2]);
}

TrustPerception evaluate_dossier(const Dossier& d, const PropertyCatalog& c,
                                 const WeightConfig& w, const SignConfig& s,
                                 const std::optional<SeptupleConfig>& septuple,
                                 double epsilon) {
  const ScaleBounds bounds = scale_bounds(w, s);
  const SeptupleConfig& sep = septuple ? *septuple : default_septuple(bounds);

  MassVector masses;
  if (d.subject() == d.object()) {
    // A nation always trusts itself: full neutral and friendly mass puts the
    // perception exactly at the scale's upper bound.
    masses = MassVector{0.0, 1.0, 1.0};
  } else {
    masses = assemble_masses(d, c);
    if (!d.has_active_assessment()) {
      TrustPerception undefined;
      undefined.septuple_label = "Undefined";
      return undefined;
    }
  }

  TrustPerception result;
  result.t_mass = trust_mass(masses, w, s);
  result.strength = trust_strength(masses, w);
  result.stance = classify(result.t_mass, bounds);
  result.septuple_label = septuple_label(result.t_mass, bounds, sep);
  const Interpretation notes = interpret(result.t_mass, result.strength, masses, bounds, epsilon);
  result.fragile = notes.fragile;
  result.notes = notes.notes;
  return result;
}

}  // namespace relcalc
