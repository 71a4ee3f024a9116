#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <optional>
#include <string>
#include <vector>

#include "relcalc/error.hpp"
#include "relcalc/io.hpp"

namespace py = pybind11;
using namespace relcalc;

namespace {

Stance stance_arg(const std::string& name) {
  const auto stance = stance_from_name(name);
  if (!stance) throw py::value_error("unknown stance '" + name + "'");
  return *stance;
}

AssessmentStatus status_arg(const std::string& name) {
  const auto status = assessment_status_from_name(name);
  if (!status) throw py::value_error("unknown status '" + name + "'");
  return *status;
}

OutputFormat format_arg(const std::string& name) {
  const auto format = output_format_from_name(name);
  if (!format) throw py::value_error("unknown output format '" + name + "'");
  return *format;
}

SubsetMask subset_arg(const Frame& frame, const std::vector<std::string>& labels) {
  return frame.subset(labels);
}

std::vector<std::string> note_names(const std::vector<Note>& notes) {
  std::vector<std::string> out;
  out.reserve(notes.size());
  for (Note n : notes) out.emplace_back(note_name(n));
  return out;
}

std::optional<std::string> stance_opt(const std::optional<Stance>& s) {
  if (!s) return std::nullopt;
  return std::string(stance_name(*s));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Trust-relation calculus: relation scoring, Dempster-Shafer evidence, "
            "subjective-logic opinions and Bayesian updates";

  py::register_exception<Error>(m, "Error", PyExc_ValueError);

  // ---- relation algebra -------------------------------------------------
  py::class_<WeightConfig>(m, "WeightConfig")
      .def_readonly("hostile", &WeightConfig::hostile)
      .def_readonly("neutral", &WeightConfig::neutral)
      .def_readonly("friendly", &WeightConfig::friendly)
      .def("__repr__", [](const WeightConfig& w) {
        return "WeightConfig(hostile=" + std::to_string(w.hostile) +
               ", neutral=" + std::to_string(w.neutral) +
               ", friendly=" + std::to_string(w.friendly) + ")";
      });

  py::class_<SignConfig>(m, "SignConfig")
      .def_readonly("hostile", &SignConfig::hostile)
      .def_readonly("neutral", &SignConfig::neutral)
      .def_readonly("friendly", &SignConfig::friendly);

  py::class_<ScaleBounds>(m, "ScaleBounds")
      .def_readonly("lower", &ScaleBounds::lower)
      .def_readonly("upper", &ScaleBounds::upper)
      .def_readonly("middle_lo", &ScaleBounds::middle_lo)
      .def_readonly("middle_hi", &ScaleBounds::middle_hi)
      .def("band_width", &ScaleBounds::band_width)
      .def("__repr__", [](const ScaleBounds& b) {
        return "ScaleBounds(lower=" + std::to_string(b.lower) + ", middle=[" +
               std::to_string(b.middle_lo) + ", " + std::to_string(b.middle_hi) +
               "], upper=" + std::to_string(b.upper) + ")";
      });

  py::class_<MassVector>(m, "MassVector")
      .def_readonly("hostile", &MassVector::hostile)
      .def_readonly("neutral", &MassVector::neutral)
      .def_readonly("friendly", &MassVector::friendly)
      .def("__repr__", [](const MassVector& v) {
        return "MassVector(hostile=" + std::to_string(v.hostile) +
               ", neutral=" + std::to_string(v.neutral) +
               ", friendly=" + std::to_string(v.friendly) + ")";
      });

  py::class_<SeptupleConfig>(m, "SeptupleConfig")
      .def(py::init([](const std::vector<std::pair<double, std::string>>& intervals) {
             SeptupleConfig cfg;
             for (const auto& [upper, label] : intervals) {
               cfg.intervals.push_back({upper, label});
             }
             return cfg;
           }),
           py::arg("intervals"))
      .def_property_readonly("intervals", [](const SeptupleConfig& cfg) {
        std::vector<std::pair<double, std::string>> out;
        for (const auto& iv : cfg.intervals) out.emplace_back(iv.upper, iv.label);
        return out;
      });

  py::class_<TrustPerception>(m, "TrustPerception")
      .def_readonly("t_mass", &TrustPerception::t_mass)
      .def_readonly("strength", &TrustPerception::strength)
      .def_property_readonly("stance",
                             [](const TrustPerception& p) { return stance_opt(p.stance); })
      .def_readonly("septuple_label", &TrustPerception::septuple_label)
      .def_readonly("fragile", &TrustPerception::fragile)
      .def_property_readonly("notes",
                             [](const TrustPerception& p) { return note_names(p.notes); })
      .def("__repr__", [](const TrustPerception& p) {
        return "TrustPerception(t_mass=" + std::to_string(p.t_mass) +
               ", strength=" + std::to_string(p.strength) + ", stance=" +
               stance_opt(p.stance).value_or("undefined") + ")";
      });

  m.def("validate_weights",
        [](const std::array<double, 3>& raw) { return validate_weights(raw); },
        py::arg("weights"), "Validate (hostile, neutral, friendly) weights summing to 1.");
  m.def("validate_signs", [](const std::array<int, 3>& raw) { return validate_signs(raw); },
        py::arg("signs"));
  m.def("default_signs", &default_signs);
  m.def("scale_bounds", &scale_bounds, py::arg("weights"), py::arg("signs"));
  m.def("mass_vector", &make_mass_vector, py::arg("hostile"), py::arg("neutral"),
        py::arg("friendly"));
  m.def("aggregate_mass",
        [](const std::vector<double>& hostile, const std::vector<double>& neutral,
           const std::vector<double>& friendly) {
          return aggregate_mass(hostile, neutral, friendly);
        },
        py::arg("hostile") = std::vector<double>{},
        py::arg("neutral") = std::vector<double>{},
        py::arg("friendly") = std::vector<double>{},
        "Sum per-stance property values into a mass vector.");
  m.def("trust_mass", &trust_mass, py::arg("masses"), py::arg("weights"), py::arg("signs"),
        "Signed weighted sum locating the relation on the scale.");
  m.def("trust_strength", &trust_strength, py::arg("masses"), py::arg("weights"),
        "Unsigned weighted sum of the observed masses.");
  m.def("classify",
        [](double t_mass, const ScaleBounds& b) {
          return std::string(stance_name(classify(t_mass, b)));
        },
        py::arg("t_mass"), py::arg("bounds"));
  m.def("default_septuple", &default_septuple, py::arg("bounds"));
  m.def("septuple_label", &septuple_label, py::arg("t_mass"), py::arg("bounds"),
        py::arg("config"));
  m.def("interpret",
        [](double t_mass, double strength, const MassVector& masses, const ScaleBounds& b,
           double epsilon) {
          const Interpretation r = interpret(t_mass, strength, masses, b, epsilon);
          return py::make_tuple(r.fragile, note_names(r.notes));
        },
        py::arg("t_mass"), py::arg("strength"), py::arg("masses"), py::arg("bounds"),
        py::arg("epsilon") = 0.1,
        "Returns (fragile, notes) for a computed perception.");

  // ---- Dempster-Shafer evidence ------------------------------------------
  py::class_<Frame>(m, "Frame")
      .def(py::init([](const std::vector<std::string>& labels) { return Frame::make(labels); }),
           py::arg("hypotheses"))
      .def_property_readonly("labels", &Frame::labels)
      .def("__len__", &Frame::size)
      .def("__eq__", [](const Frame& a, const Frame& b) { return a == b; })
      .def("__repr__", [](const Frame& f) {
        std::string out = "Frame([";
        for (std::size_t i = 0; i < f.labels().size(); ++i) {
          if (i) out += ", ";
          out += "'" + f.labels()[i] + "'";
        }
        return out + "])";
      });

  py::class_<MassFunction>(m, "MassFunction")
      .def_property_readonly("frame", &MassFunction::frame)
      .def("mass",
           [](const MassFunction& m, const std::vector<std::string>& subset) {
             return m.mass(subset_arg(m.frame(), subset));
           },
           py::arg("subset"))
      .def_property_readonly("masses", [](const MassFunction& m) {
        std::vector<std::pair<std::vector<std::string>, double>> out;
        for (const auto& [subset, value] : m.masses()) {
          out.emplace_back(m.frame().members(subset), value);
        }
        return out;
      });

  m.def("make_mass",
        [](const Frame& frame,
           const std::vector<std::pair<std::vector<std::string>, double>>& entries) {
          std::vector<std::pair<SubsetMask, double>> masks;
          masks.reserve(entries.size());
          for (const auto& [labels, value] : entries) {
            masks.emplace_back(subset_arg(frame, labels), value);
          }
          return MassFunction::make(frame, masks);
        },
        py::arg("frame"), py::arg("entries"),
        "Build a mass function from (subset labels, value) entries.");
  m.def("vacuous_mass", [](const Frame& frame) { return MassFunction::vacuous(frame); },
        py::arg("frame"));
  m.def("belief",
        [](const MassFunction& m, const std::vector<std::string>& subset) {
          return belief(m, subset_arg(m.frame(), subset));
        },
        py::arg("mass"), py::arg("subset"));
  m.def("plausibility",
        [](const MassFunction& m, const std::vector<std::string>& subset) {
          return plausibility(m, subset_arg(m.frame(), subset));
        },
        py::arg("mass"), py::arg("subset"));
  m.def("combine_dempster", &combine_dempster, py::arg("first"), py::arg("second"),
        "Dempster's normalized combination of two independent observers.");
  m.def("ds_table",
        [](const MassFunction& m) {
          const BeliefSummary summary = ds_table(m);
          py::list rows;
          for (const auto& row : summary.rows) {
            py::dict item;
            item["subset"] = m.frame().members(row.subset);
            item["mass"] = row.mass;
            item["belief"] = row.belief;
            item["plausibility"] = row.plausibility;
            item["uncertainty"] = row.uncertainty;
            rows.append(item);
          }
          py::dict out;
          out["rows"] = rows;
          out["uncertainty_gap"] = summary.uncertainty_gap;
          return out;
        },
        py::arg("mass"));

  // ---- subjective-logic opinions ------------------------------------------
  py::class_<Opinion>(m, "Opinion")
      .def_readonly("belief", &Opinion::belief)
      .def_readonly("disbelief", &Opinion::disbelief)
      .def_readonly("uncertainty", &Opinion::uncertainty)
      .def_readonly("base_rate", &Opinion::base_rate)
      .def("__repr__", [](const Opinion& o) {
        return "Opinion(b=" + std::to_string(o.belief) + ", d=" + std::to_string(o.disbelief) +
               ", u=" + std::to_string(o.uncertainty) + ", a=" + std::to_string(o.base_rate) +
               ")";
      });

  m.def("make_opinion", &make_opinion, py::arg("belief"), py::arg("disbelief"),
        py::arg("uncertainty"), py::arg("base_rate"));
  m.def("classify_opinion",
        [](const Opinion& o) {
          py::set out;
          for (OpinionFlag flag : classify_opinion(o)) {
            out.add(py::str(std::string(opinion_flag_name(flag))));
          }
          return out;
        },
        py::arg("opinion"));
  m.def("projection", &projection, py::arg("opinion"), "Probability projection b + a*u.");
  m.def("complement", &complement, py::arg("opinion"));
  m.def("default_base_rate", &default_base_rate, py::arg("frame"));
  m.def("opinion_from_mass",
        [](const MassFunction& m, const std::vector<std::string>& hypothesis,
           std::optional<double> base_rate) {
          const double a = base_rate ? *base_rate : default_base_rate(m.frame());
          return opinion_from_mass(m, subset_arg(m.frame(), hypothesis), a);
        },
        py::arg("mass"), py::arg("hypothesis"), py::arg("base_rate") = std::nullopt);

  // ---- Bayesian updates ----------------------------------------------------
  m.def("posterior",
        [](double prior, double likelihood, double marginal) {
          return posterior(BayesUpdate{prior, likelihood, marginal});
        },
        py::arg("prior"), py::arg("likelihood"), py::arg("marginal"));
  m.def("posterior_over_partition",
        [](const std::vector<double>& priors, const std::vector<double>& likelihoods) {
          return posterior_over_partition(priors, likelihoods);
        },
        py::arg("priors"), py::arg("likelihoods"));
  m.def("sequential_update",
        [](const std::vector<double>& priors, const std::vector<std::vector<double>>& evidence) {
          return sequential_update(priors, evidence);
        },
        py::arg("priors"), py::arg("evidence"));

  // ---- catalogs and dossiers -----------------------------------------------
  py::class_<PropertyDef>(m, "PropertyDef")
      .def_readonly("id", &PropertyDef::id)
      .def_property_readonly("stance",
                             [](const PropertyDef& p) {
                               return std::string(stance_name(p.stance));
                             })
      .def_readonly("value", &PropertyDef::value)
      .def_readonly("description", &PropertyDef::description);

  py::class_<PropertyCatalog>(m, "PropertyCatalog")
      .def("properties",
           [](const PropertyCatalog& c, const std::string& stance) {
             const auto span = c.stance_properties(stance_arg(stance));
             return std::vector<PropertyDef>(span.begin(), span.end());
           },
           py::arg("stance"))
      .def("stance_total",
           [](const PropertyCatalog& c, const std::string& stance) {
             return c.stance_total(stance_arg(stance));
           },
           py::arg("stance"));

  py::class_<Assessment>(m, "Assessment")
      .def(py::init([](const std::string& stance, const std::string& property_id,
                       const std::string& status, std::optional<double> override_value) {
             return Assessment{stance_arg(stance), property_id, status_arg(status),
                               override_value};
           }),
           py::arg("stance"), py::arg("property"), py::arg("status") = "enabled",
           py::arg("override_value") = std::nullopt)
      .def_property_readonly("stance",
                             [](const Assessment& a) {
                               return std::string(stance_name(a.stance));
                             })
      .def_readonly("property", &Assessment::property_id)
      .def_property_readonly("status",
                             [](const Assessment& a) {
                               return std::string(assessment_status_name(a.status));
                             })
      .def_readonly("override_value", &Assessment::override_value);

  py::class_<Dossier>(m, "Dossier")
      .def(py::init([](const std::string& observer, const std::string& subject,
                       const std::string& object, int from_year, int to_year,
                       const std::vector<Assessment>& assessments,
                       const std::vector<std::string>& evidence_notes) {
             return Dossier::make(observer, NationId::make(subject), NationId::make(object),
                                  Period{from_year, to_year}, assessments, evidence_notes);
           }),
           py::arg("observer"), py::arg("subject"), py::arg("object"), py::arg("from_year"),
           py::arg("to_year"), py::arg("assessments") = std::vector<Assessment>{},
           py::arg("evidence_notes") = std::vector<std::string>{})
      .def_property_readonly("observer", &Dossier::observer)
      .def_property_readonly("subject",
                             [](const Dossier& d) { return d.subject().code; })
      .def_property_readonly("object", [](const Dossier& d) { return d.object().code; })
      .def_property_readonly("period",
                             [](const Dossier& d) {
                               return py::make_tuple(d.period().from_year, d.period().to_year);
                             })
      .def_property_readonly("assessments", &Dossier::assessments)
      .def_property_readonly("evidence_notes", &Dossier::evidence_notes);

  m.def("default_catalog", &default_catalog);
  m.def("effective_value", &effective_value, py::arg("property"), py::arg("assessment"));
  m.def("assemble_masses", &assemble_masses, py::arg("dossier"), py::arg("catalog"));
  m.def("evaluate_dossier",
        [](const Dossier& d, const PropertyCatalog& c, std::optional<WeightConfig> weights,
           std::optional<SignConfig> signs, std::optional<SeptupleConfig> septuple,
           double epsilon) {
          const WeightConfig w = weights ? *weights : validate_weights({0.40, 0.20, 0.40});
          const SignConfig s = signs ? *signs : default_signs();
          return evaluate_dossier(d, c, w, s, septuple, epsilon);
        },
        py::arg("dossier"), py::arg("catalog"), py::arg("weights") = std::nullopt,
        py::arg("signs") = std::nullopt, py::arg("septuple") = std::nullopt,
        py::arg("epsilon") = 0.1,
        "Full pipeline from a dossier to a trust perception.");

  // ---- files and reports -----------------------------------------------------
  py::class_<RunConfig>(m, "RunConfig")
      .def(py::init<>())
      .def_readwrite("weights", &RunConfig::weights)
      .def_readwrite("signs", &RunConfig::signs)
      .def_readwrite("septuple", &RunConfig::septuple)
      .def_readwrite("epsilon", &RunConfig::epsilon);

  py::class_<Report>(m, "Report")
      .def_property_readonly("masses", [](const Report& r) { return r.masses; })
      .def_property_readonly("bounds", [](const Report& r) { return r.bounds; })
      .def_property_readonly("perception", [](const Report& r) { return r.perception; })
      .def("render",
           [](const Report& r, const std::string& format) {
             return render_report(r, format_arg(format));
           },
           py::arg("format") = "json");

  m.def("parse_catalog",
        [](const std::filesystem::path& path) { return parse_catalog(path); },
        py::arg("path"));
  m.def("parse_dossier",
        [](const std::filesystem::path& path) { return parse_dossier(path); },
        py::arg("path"));
  m.def("parse_config", [](const std::filesystem::path& path) { return parse_config(path); },
        py::arg("path"));
  m.def("parse_mass", [](const std::filesystem::path& path) { return parse_mass(path); },
        py::arg("path"));
  m.def("build_report", &build_report, py::arg("dossier"), py::arg("catalog"),
        py::arg("config") = RunConfig{});
  m.def("render_ds",
        [](const MassFunction& mass, const std::string& format) {
          return render_ds(mass, format_arg(format));
        },
        py::arg("mass"), py::arg("format") = "text");
  m.def("render_mass",
        [](const MassFunction& mass, const std::string& format) {
          return render_mass(mass, format_arg(format));
        },
        py::arg("mass"), py::arg("format") = "json");
  m.def("render_opinion", &render_opinion, py::arg("opinion"));

#ifdef RELCALC_VERSION
  m.attr("__version__") = RELCALC_VERSION;
#else
  m.attr("__version__") = "dev";
#endif
}
