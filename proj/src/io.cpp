#include "relcalc/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "relcalc/error.hpp"

namespace relcalc {

namespace {

using ordered_json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Deterministic JSON output: fixed key order (callers build ordered_json) and
// reals rendered with kOutputPrecision decimal places.

std::string format_number(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*f", kOutputPrecision, value);
  std::string text(buffer);
  if (text == "-0.000000000") text.erase(0, 1);
  return text;
}

void dump_fixed(const ordered_json& j, std::string& out, int depth) {
  const std::string indent(2 * static_cast<std::size_t>(depth), ' ');
  const std::string inner(2 * static_cast<std::size_t>(depth + 1), ' ');
  switch (j.type()) {
    case ordered_json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ",\n";
        first = false;
        out += inner + ordered_json(key).dump() + ": ";
        dump_fixed(value, out, depth + 1);
      }
      out += "\n" + indent + "}";
      return;
    }
    case ordered_json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      bool first = true;
      for (const auto& value : j) {
        if (!first) out += ",\n";
        first = false;
        out += inner;
        dump_fixed(value, out, depth + 1);
      }
      out += "\n" + indent + "]";
      return;
    }
    case ordered_json::value_t::number_float:
      out += format_number(j.get<double>());
      return;
    default:
      out += j.dump();
      return;
  }
}

std::string dump_fixed(const ordered_json& j) {
  std::string out;
  dump_fixed(j, out, 0);
  out += "\n";
  return out;
}

// ---------------------------------------------------------------------------
// Strict JSON reading with field paths in every error.

using json = nlohmann::json;

std::string join_path(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

std::string element_path(const std::string& path, std::size_t index) {
  return path + "[" + std::to_string(index) + "]";
}

const json& require_object(const json& j, const std::string& path) {
  if (!j.is_object()) {
    fail(errc::schema_error, path + ": expected an object");
  }
  return j;
}

void check_fields(const json& obj, const std::string& path,
                  std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (const char* name : allowed) {
      if (key == name) {
        known = true;
        break;
      }
    }
    if (!known) {
      fail(errc::schema_error, join_path(path, key) + ": unknown field");
    }
  }
}

const json& require_field(const json& obj, const std::string& path, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    fail(errc::schema_error, join_path(path, key) + ": missing required field");
  }
  return *it;
}

double as_number(const json& j, const std::string& path) {
  if (!j.is_number()) {
    fail(errc::schema_error, path + ": expected a number");
  }
  return j.get<double>();
}

int as_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) {
    fail(errc::schema_error, path + ": expected an integer");
  }
  return j.get<int>();
}

std::string as_string(const json& j, const std::string& path) {
  if (!j.is_string()) {
    fail(errc::schema_error, path + ": expected a string");
  }
  return j.get<std::string>();
}

const json& as_array(const json& j, const std::string& path) {
  if (!j.is_array()) {
    fail(errc::schema_error, path + ": expected an array");
  }
  return j;
}

void check_version(const json& obj, const std::string& path) {
  const int version = as_int(require_field(obj, path, "version"), join_path(path, "version"));
  if (version != kSchemaVersion) {
    fail(errc::schema_error,
         join_path(path, "version") + ": unsupported version " + std::to_string(version));
  }
}

Stance parse_stance(const json& j, const std::string& path) {
  const std::string name = as_string(j, path);
  const auto stance = stance_from_name(name);
  if (!stance) {
    fail(errc::schema_error, path + ": unknown stance '" + name + "'");
  }
  return *stance;
}

json parse_document(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(errc::schema_error, origin + ": " + e.what());
  }
}

// Parsed documents feed the validating domain constructors; their errors are
// re-raised as ValidationError with the document origin attached.
template <typename Fn>
auto with_validation_context(const std::string& origin, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    if (e.code() == errc::schema_error || e.code() == errc::io_error ||
        e.code() == errc::validation_error) {
      throw;
    }
    fail(errc::validation_error, origin + ": " + e.what());
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    fail(errc::io_error, "cannot open " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    fail(errc::io_error, "cannot read " + path.string());
  }
  return buffer.str();
}

// ---------------------------------------------------------------------------
// Schema-specific parsing.

SeptupleConfig parse_septuple_object(const json& j, const std::string& path) {
  require_object(j, path);
  check_fields(j, path, {"intervals"});
  const json& intervals = as_array(require_field(j, path, "intervals"),
                                   join_path(path, "intervals"));
  SeptupleConfig cfg;
  for (std::size_t i = 0; i < intervals.size(); ++i) {
    const std::string item_path = element_path(join_path(path, "intervals"), i);
    const json& item = require_object(intervals[i], item_path);
    check_fields(item, item_path, {"upper", "label"});
    SeptupleInterval interval;
    interval.upper = as_number(require_field(item, item_path, "upper"),
                               join_path(item_path, "upper"));
    interval.label = as_string(require_field(item, item_path, "label"),
                               join_path(item_path, "label"));
    if (interval.label.empty()) {
      fail(errc::validation_error, join_path(item_path, "label") + ": label must be non-empty");
    }
    cfg.intervals.push_back(std::move(interval));
  }
  if (cfg.intervals.empty()) {
    fail(errc::validation_error, join_path(path, "intervals") + ": must be non-empty");
  }
  return cfg;
}

}  // namespace

std::string_view output_format_name(OutputFormat format) {
  switch (format) {
    case OutputFormat::text: return "text";
    case OutputFormat::json: return "json";
    case OutputFormat::csv: return "csv";
  }
  return "?";
}

std::optional<OutputFormat> output_format_from_name(std::string_view name) {
  for (OutputFormat f : {OutputFormat::text, OutputFormat::json, OutputFormat::csv}) {
    if (output_format_name(f) == name) return f;
  }
  return std::nullopt;
}

PropertyCatalog parse_catalog_text(const std::string& text, const std::string& origin) {
  const json doc = parse_document(text, origin);
  require_object(doc, origin);
  check_fields(doc, origin, {"version", "stances"});
  check_version(doc, origin);
  const json& stances = require_object(require_field(doc, origin, "stances"),
                                       join_path(origin, "stances"));
  check_fields(stances, join_path(origin, "stances"), {"hostile", "neutral", "friendly"});
  std::vector<PropertyDef> properties;
  for (Stance s : kStances) {
    const std::string stance_key(stance_name(s));
    const std::string stance_path = join_path(join_path(origin, "stances"), stance_key);
    const json& list = as_array(require_field(stances, join_path(origin, "stances"),
                                              stance_key.c_str()),
                                stance_path);
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string item_path = element_path(stance_path, i);
      const json& item = require_object(list[i], item_path);
      check_fields(item, item_path, {"id", "value", "description"});
      PropertyDef p;
      p.stance = s;
      p.id = as_string(require_field(item, item_path, "id"), join_path(item_path, "id"));
      p.value = as_number(require_field(item, item_path, "value"),
                          join_path(item_path, "value"));
      if (item.contains("description")) {
        p.description = as_string(item["description"], join_path(item_path, "description"));
      }
      properties.push_back(std::move(p));
    }
  }
  return with_validation_context(origin,
                                 [&] { return PropertyCatalog::make(std::move(properties)); });
}

Dossier parse_dossier_text(const std::string& text, const std::string& origin) {
  const json doc = parse_document(text, origin);
  require_object(doc, origin);
  check_fields(doc, origin,
               {"version", "observer", "subject", "object", "period", "assessments",
                "evidence_notes"});
  check_version(doc, origin);
  const std::string observer =
      as_string(require_field(doc, origin, "observer"), join_path(origin, "observer"));
  const std::string subject =
      as_string(require_field(doc, origin, "subject"), join_path(origin, "subject"));
  const std::string object =
      as_string(require_field(doc, origin, "object"), join_path(origin, "object"));

  const std::string period_path = join_path(origin, "period");
  const json& period_obj = require_object(require_field(doc, origin, "period"), period_path);
  check_fields(period_obj, period_path, {"from", "to"});
  Period period;
  period.from_year =
      as_int(require_field(period_obj, period_path, "from"), join_path(period_path, "from"));
  period.to_year =
      as_int(require_field(period_obj, period_path, "to"), join_path(period_path, "to"));

  const std::string assessments_path = join_path(origin, "assessments");
  const json& assessments_list =
      as_array(require_field(doc, origin, "assessments"), assessments_path);
  std::vector<Assessment> assessments;
  for (std::size_t i = 0; i < assessments_list.size(); ++i) {
    const std::string item_path = element_path(assessments_path, i);
    const json& item = require_object(assessments_list[i], item_path);
    check_fields(item, item_path, {"stance", "property", "status", "override_value"});
    Assessment a;
    a.stance = parse_stance(require_field(item, item_path, "stance"),
                            join_path(item_path, "stance"));
    a.property_id = as_string(require_field(item, item_path, "property"),
                              join_path(item_path, "property"));
    const std::string status_name = as_string(require_field(item, item_path, "status"),
                                              join_path(item_path, "status"));
    const auto status = assessment_status_from_name(status_name);
    if (!status) {
      fail(errc::schema_error,
           join_path(item_path, "status") + ": unknown status '" + status_name + "'");
    }
    a.status = *status;
    if (item.contains("override_value")) {
      a.override_value =
          as_number(item["override_value"], join_path(item_path, "override_value"));
    }
    assessments.push_back(std::move(a));
  }

  std::vector<std::string> evidence_notes;
  if (doc.contains("evidence_notes")) {
    const std::string notes_path = join_path(origin, "evidence_notes");
    const json& notes = as_array(doc["evidence_notes"], notes_path);
    for (std::size_t i = 0; i < notes.size(); ++i) {
      evidence_notes.push_back(as_string(notes[i], element_path(notes_path, i)));
    }
  }

  return with_validation_context(origin, [&] {
    return Dossier::make(observer, NationId::make(subject), NationId::make(object), period,
                         std::move(assessments), std::move(evidence_notes));
  });
}

RunConfig parse_config_text(const std::string& text, const std::string& origin) {
  const json doc = parse_document(text, origin);
  require_object(doc, origin);
  check_fields(doc, origin, {"version", "weights", "signs", "epsilon", "septuple"});
  check_version(doc, origin);

  RunConfig cfg;
  const std::string weights_path = join_path(origin, "weights");
  const json& weights = as_array(require_field(doc, origin, "weights"), weights_path);
  if (weights.size() != 3) {
    fail(errc::schema_error, weights_path + ": expected exactly 3 weights");
  }
  std::array<double, 3> raw_weights{};
  for (std::size_t i = 0; i < 3; ++i) {
    raw_weights[i] = as_number(weights[i], element_path(weights_path, i));
  }
  cfg.weights = with_validation_context(origin, [&] { return validate_weights(raw_weights); });

  if (doc.contains("signs")) {
    const std::string signs_path = join_path(origin, "signs");
    const json& signs = as_array(doc["signs"], signs_path);
    if (signs.size() != 3) {
      fail(errc::schema_error, signs_path + ": expected exactly 3 signs");
    }
    std::array<int, 3> raw_signs{};
    for (std::size_t i = 0; i < 3; ++i) {
      raw_signs[i] = as_int(signs[i], element_path(signs_path, i));
    }
    cfg.signs = with_validation_context(origin, [&] { return validate_signs(raw_signs); });
  }

  if (doc.contains("epsilon")) {
    cfg.epsilon = as_number(doc["epsilon"], join_path(origin, "epsilon"));
    if (!(cfg.epsilon > 0.0) || !(cfg.epsilon < 0.5)) {
      fail(errc::validation_error,
           join_path(origin, "epsilon") + ": must lie in (0, 0.5)");
    }
  }

  if (doc.contains("septuple")) {
    cfg.septuple = parse_septuple_object(doc["septuple"], join_path(origin, "septuple"));
  }
  return cfg;
}

MassFunction parse_mass_text(const std::string& text, const std::string& origin) {
  const json doc = parse_document(text, origin);
  require_object(doc, origin);
  check_fields(doc, origin, {"frame", "masses"});

  const std::string frame_path = join_path(origin, "frame");
  const json& frame_list = as_array(require_field(doc, origin, "frame"), frame_path);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < frame_list.size(); ++i) {
    labels.push_back(as_string(frame_list[i], element_path(frame_path, i)));
  }
  const Frame frame =
      with_validation_context(origin, [&] { return Frame::make(std::move(labels)); });

  const std::string masses_path = join_path(origin, "masses");
  const json& masses_list = as_array(require_field(doc, origin, "masses"), masses_path);
  std::vector<std::pair<SubsetMask, double>> entries;
  for (std::size_t i = 0; i < masses_list.size(); ++i) {
    const std::string item_path = element_path(masses_path, i);
    const json& item = require_object(masses_list[i], item_path);
    check_fields(item, item_path, {"subset", "value"});
    const std::string subset_path = join_path(item_path, "subset");
    const json& subset_list = as_array(require_field(item, item_path, "subset"), subset_path);
    std::vector<std::string> subset_labels;
    for (std::size_t k = 0; k < subset_list.size(); ++k) {
      subset_labels.push_back(as_string(subset_list[k], element_path(subset_path, k)));
    }
    const SubsetMask mask = with_validation_context(
        subset_path, [&] { return frame.subset(subset_labels); });
    const double value =
        as_number(require_field(item, item_path, "value"), join_path(item_path, "value"));
    entries.emplace_back(mask, value);
  }
  return with_validation_context(origin, [&] { return MassFunction::make(frame, entries); });
}

SeptupleConfig parse_septuple_text(const std::string& text, const std::string& origin) {
  return parse_septuple_object(parse_document(text, origin), origin);
}

Opinion parse_opinion_text(const std::string& text, const std::string& origin) {
  const json doc = parse_document(text, origin);
  require_object(doc, origin);
  check_fields(doc, origin, {"b", "d", "u", "a"});
  const double b = as_number(require_field(doc, origin, "b"), join_path(origin, "b"));
  const double d = as_number(require_field(doc, origin, "d"), join_path(origin, "d"));
  const double u = as_number(require_field(doc, origin, "u"), join_path(origin, "u"));
  const double a = as_number(require_field(doc, origin, "a"), join_path(origin, "a"));
  return with_validation_context(origin, [&] { return make_opinion(b, d, u, a); });
}

BayesPartition parse_partition_text(const std::string& text, const std::string& origin) {
  const json doc = parse_document(text, origin);
  require_object(doc, origin);
  check_fields(doc, origin, {"version", "priors", "evidence"});
  check_version(doc, origin);

  BayesPartition partition;
  const std::string priors_path = join_path(origin, "priors");
  const json& priors = as_array(require_field(doc, origin, "priors"), priors_path);
  for (std::size_t i = 0; i < priors.size(); ++i) {
    partition.priors.push_back(as_number(priors[i], element_path(priors_path, i)));
  }
  if (doc.contains("evidence")) {
    const std::string evidence_path = join_path(origin, "evidence");
    const json& evidence = as_array(doc["evidence"], evidence_path);
    for (std::size_t i = 0; i < evidence.size(); ++i) {
      const std::string item_path = element_path(evidence_path, i);
      const json& item = as_array(evidence[i], item_path);
      std::vector<double> likelihoods;
      for (std::size_t k = 0; k < item.size(); ++k) {
        likelihoods.push_back(as_number(item[k], element_path(item_path, k)));
      }
      partition.evidence.push_back(std::move(likelihoods));
    }
  }
  return partition;
}

PropertyCatalog parse_catalog(const std::filesystem::path& path) {
  return parse_catalog_text(read_file(path), path.filename().string());
}

Dossier parse_dossier(const std::filesystem::path& path) {
  return parse_dossier_text(read_file(path), path.filename().string());
}

RunConfig parse_config(const std::filesystem::path& path) {
  return parse_config_text(read_file(path), path.filename().string());
}

MassFunction parse_mass(const std::filesystem::path& path) {
  return parse_mass_text(read_file(path), path.filename().string());
}

SeptupleConfig parse_septuple(const std::filesystem::path& path) {
  return parse_septuple_text(read_file(path), path.filename().string());
}

Opinion parse_opinion(const std::filesystem::path& path) {
  return parse_opinion_text(read_file(path), path.filename().string());
}

BayesPartition parse_partition(const std::filesystem::path& path) {
  return parse_partition_text(read_file(path), path.filename().string());
}

// ---------------------------------------------------------------------------
// Reports.

Report build_report(const Dossier& d, const PropertyCatalog& c, const RunConfig& cfg) {
  Report report;
  report.observer = d.observer();
  report.subject = d.subject();
  report.object = d.object();
  report.period = d.period();
  report.weights = cfg.weights;
  report.signs = cfg.signs;
  report.epsilon = cfg.epsilon;
  report.bounds = scale_bounds(cfg.weights, cfg.signs);
  report.perception =
      evaluate_dossier(d, c, cfg.weights, cfg.signs, cfg.septuple, cfg.epsilon);

  if (d.subject() == d.object()) {
    // Reflexive convention: full neutral and friendly stance mass, no
    // per-property evidence. Stance-level rows keep the contribution sum
    // equal to the headline perception.
    report.masses = MassVector{0.0, 1.0, 1.0};
    for (Stance s : kStances) {
      ContributionRow row;
      row.stance = s;
      row.property_id = "*";
      row.status =
          s == Stance::hostile ? AssessmentStatus::disabled : AssessmentStatus::enabled;
      row.effective_value = report.masses.at(s);
      row.contribution = cfg.signs.at(s) * cfg.weights.at(s) * row.effective_value;
      report.contributions.push_back(std::move(row));
    }
    return report;
  }

  report.masses = assemble_masses(d, c);
  for (Stance s : kStances) {
    for (const PropertyDef& p : c.stance_properties(s)) {
      const Assessment* a = d.find_assessment(s, p.id);
      ContributionRow row;
      row.stance = s;
      row.property_id = p.id;
      row.status = a ? a->status : AssessmentStatus::disabled;
      row.effective_value = a ? effective_value(p, *a) : 0.0;
      row.contribution = cfg.signs.at(s) * cfg.weights.at(s) * row.effective_value;
      report.contributions.push_back(std::move(row));
    }
  }
  return report;
}

namespace {

std::string stance_or_undefined(const std::optional<Stance>& stance) {
  return stance ? std::string(stance_name(*stance)) : "undefined";
}

ordered_json notes_to_json(const std::vector<Note>& notes) {
  ordered_json list = ordered_json::array();
  for (Note n : notes) list.push_back(std::string(note_name(n)));
  return list;
}

ordered_json report_to_json(const Report& r) {
  ordered_json j;
  j["version"] = kSchemaVersion;
  j["observer"] = r.observer;
  j["subject"] = r.subject.code;
  j["object"] = r.object.code;
  j["period"] = ordered_json{{"from", r.period.from_year}, {"to", r.period.to_year}};
  j["weights"] = ordered_json{{"hostile", r.weights.hostile},
                              {"neutral", r.weights.neutral},
                              {"friendly", r.weights.friendly}};
  j["signs"] = ordered_json{{"hostile", r.signs.hostile},
                            {"neutral", r.signs.neutral},
                            {"friendly", r.signs.friendly}};
  j["epsilon"] = r.epsilon;
  j["masses"] = ordered_json{{"hostile", r.masses.hostile},
                             {"neutral", r.masses.neutral},
                             {"friendly", r.masses.friendly}};
  j["bounds"] = ordered_json{{"lower", r.bounds.lower},
                             {"middle_lo", r.bounds.middle_lo},
                             {"middle_hi", r.bounds.middle_hi},
                             {"upper", r.bounds.upper}};
  j["t_mass"] = r.perception.t_mass;
  j["strength"] = r.perception.strength;
  j["stance"] = stance_or_undefined(r.perception.stance);
  j["septuple_label"] = r.perception.septuple_label;
  j["fragile"] = r.perception.fragile;
  j["notes"] = notes_to_json(r.perception.notes);
  ordered_json rows = ordered_json::array();
  for (const auto& row : r.contributions) {
    rows.push_back(ordered_json{{"stance", std::string(stance_name(row.stance))},
                                {"property", row.property_id},
                                {"status", std::string(assessment_status_name(row.status))},
                                {"effective_value", row.effective_value},
                                {"contribution", row.contribution}});
  }
  j["contributions"] = rows;
  return j;
}

std::string pad(std::string text, std::size_t width) {
  if (text.size() < width) text.append(width - text.size(), ' ');
  return text;
}

std::string notes_line(const std::vector<Note>& notes) {
  if (notes.empty()) return "(none)";
  std::string out;
  for (std::size_t i = 0; i < notes.size(); ++i) {
    if (i) out += " ";
    out += note_name(notes[i]);
  }
  return out;
}

std::string report_to_text(const Report& r) {
  std::ostringstream out;
  out << "relation report\n";
  out << "  observer:  " << r.observer << "\n";
  out << "  subject:   " << r.subject.code << "\n";
  out << "  object:    " << r.object.code << "\n";
  out << "  period:    " << r.period.from_year << "-" << r.period.to_year << "\n";
  out << "  weights:   hostile " << format_number(r.weights.hostile) << "  neutral "
      << format_number(r.weights.neutral) << "  friendly " << format_number(r.weights.friendly)
      << "\n";
  out << "  signs:     hostile " << (r.signs.hostile > 0 ? "+1" : "-1") << "  neutral "
      << (r.signs.neutral > 0 ? "+1" : "-1") << "  friendly "
      << (r.signs.friendly > 0 ? "+1" : "-1") << "\n";
  out << "  scale:     [" << format_number(r.bounds.lower) << ", "
      << format_number(r.bounds.upper) << "], neutral band ["
      << format_number(r.bounds.middle_lo) << ", " << format_number(r.bounds.middle_hi)
      << "]\n";
  out << "\n";
  out << "  " << pad("stance", 10) << pad("property", 10) << pad("status", 10)
      << pad("effective", 14) << "contribution\n";
  for (const auto& row : r.contributions) {
    out << "  " << pad(std::string(stance_name(row.stance)), 10) << pad(row.property_id, 10)
        << pad(std::string(assessment_status_name(row.status)), 10)
        << pad(format_number(row.effective_value), 14) << format_number(row.contribution)
        << "\n";
  }
  out << "\n";
  out << "  masses:    hostile " << format_number(r.masses.hostile) << "  neutral "
      << format_number(r.masses.neutral) << "  friendly " << format_number(r.masses.friendly)
      << "\n";
  out << "  t_mass:    " << format_number(r.perception.t_mass) << "\n";
  out << "  strength:  " << format_number(r.perception.strength) << "\n";
  out << "  stance:    " << stance_or_undefined(r.perception.stance) << "\n";
  out << "  septuple:  " << r.perception.septuple_label << "\n";
  out << "  fragile:   " << (r.perception.fragile ? "yes" : "no") << "\n";
  out << "  notes:     " << notes_line(r.perception.notes) << "\n";
  return out.str();
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string report_to_csv(const Report& r) {
  std::ostringstream out;
  out << "subject,object,observer,from,to,t_mass,strength,stance,septuple_label,fragile,"
         "notes\n";
  std::string notes;
  for (std::size_t i = 0; i < r.perception.notes.size(); ++i) {
    if (i) notes += ";";
    notes += note_name(r.perception.notes[i]);
  }
  out << csv_escape(r.subject.code) << "," << csv_escape(r.object.code) << ","
      << csv_escape(r.observer) << "," << r.period.from_year << "," << r.period.to_year << ","
      << format_number(r.perception.t_mass) << "," << format_number(r.perception.strength)
      << "," << stance_or_undefined(r.perception.stance) << ","
      << csv_escape(r.perception.septuple_label) << ","
      << (r.perception.fragile ? "true" : "false") << "," << csv_escape(notes) << "\n";
  return out.str();
}

std::string subset_display(const Frame& frame, SubsetMask subset) {
  const auto members = frame.members(subset);
  std::string out;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) out += "|";
    out += members[i];
  }
  return out;
}

ordered_json subset_to_json(const Frame& frame, SubsetMask subset) {
  ordered_json list = ordered_json::array();
  for (const auto& label : frame.members(subset)) list.push_back(label);
  return list;
}

}  // namespace

std::string render_report(const Report& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::json: return dump_fixed(report_to_json(report));
    case OutputFormat::csv: return report_to_csv(report);
    case OutputFormat::text: return report_to_text(report);
  }
  return {};
}

std::string render_catalog(const PropertyCatalog& c, OutputFormat format) {
  if (format == OutputFormat::json) {
    ordered_json j;
    j["version"] = kSchemaVersion;
    ordered_json stances;
    for (Stance s : kStances) {
      ordered_json list = ordered_json::array();
      for (const auto& p : c.stance_properties(s)) {
        list.push_back(ordered_json{
            {"id", p.id}, {"value", p.value}, {"description", p.description}});
      }
      stances[std::string(stance_name(s))] = list;
    }
    j["stances"] = stances;
    return dump_fixed(j);
  }
  if (format == OutputFormat::csv) {
    std::ostringstream out;
    out << "stance,id,value,description\n";
    for (Stance s : kStances) {
      for (const auto& p : c.stance_properties(s)) {
        out << stance_name(s) << "," << csv_escape(p.id) << "," << format_number(p.value)
            << "," << csv_escape(p.description) << "\n";
      }
    }
    return out.str();
  }
  std::ostringstream out;
  for (Stance s : kStances) {
    out << stance_name(s) << " (total " << format_number(c.stance_total(s)) << ")\n";
    for (const auto& p : c.stance_properties(s)) {
      out << "  " << pad(p.id, 6) << pad(format_number(p.value), 14) << p.description << "\n";
    }
  }
  return out.str();
}

std::string render_ds(const MassFunction& m, OutputFormat format) {
  const BeliefSummary summary = ds_table(m);
  if (format == OutputFormat::json) {
    ordered_json j;
    j["version"] = kSchemaVersion;
    ordered_json frame = ordered_json::array();
    for (const auto& label : m.frame().labels()) frame.push_back(label);
    j["frame"] = frame;
    ordered_json rows = ordered_json::array();
    for (const auto& row : summary.rows) {
      rows.push_back(ordered_json{{"subset", subset_to_json(m.frame(), row.subset)},
                                  {"mass", row.mass},
                                  {"belief", row.belief},
                                  {"plausibility", row.plausibility},
                                  {"uncertainty", row.uncertainty}});
    }
    j["rows"] = rows;
    j["uncertainty_gap"] = summary.uncertainty_gap;
    return dump_fixed(j);
  }
  if (format == OutputFormat::csv) {
    std::ostringstream out;
    out << "hypothesis,mass,belief,plausibility,uncertainty\n";
    for (const auto& row : summary.rows) {
      out << csv_escape(subset_display(m.frame(), row.subset)) << ","
          << format_number(row.mass) << "," << format_number(row.belief) << ","
          << format_number(row.plausibility) << "," << format_number(row.uncertainty) << "\n";
    }
    return out.str();
  }
  std::ostringstream out;
  std::size_t width = 12;
  for (const auto& row : summary.rows) {
    width = std::max(width, subset_display(m.frame(), row.subset).size() + 2);
  }
  out << pad("hypothesis", width) << pad("mass", 14) << pad("belief", 14)
      << pad("plausibility", 14) << "uncertainty\n";
  for (const auto& row : summary.rows) {
    out << pad(subset_display(m.frame(), row.subset), width) << pad(format_number(row.mass), 14)
        << pad(format_number(row.belief), 14) << pad(format_number(row.plausibility), 14)
        << format_number(row.uncertainty) << "\n";
  }
  out << "uncertainty gap: " << format_number(summary.uncertainty_gap) << "\n";
  return out.str();
}

std::string render_mass(const MassFunction& m, OutputFormat format) {
  if (format == OutputFormat::json) {
    ordered_json j;
    ordered_json frame = ordered_json::array();
    for (const auto& label : m.frame().labels()) frame.push_back(label);
    j["frame"] = frame;
    ordered_json masses = ordered_json::array();
    for (const auto& [subset, value] : m.masses()) {
      masses.push_back(
          ordered_json{{"subset", subset_to_json(m.frame(), subset)}, {"value", value}});
    }
    j["masses"] = masses;
    return dump_fixed(j);
  }
  if (format == OutputFormat::csv) {
    std::ostringstream out;
    out << "subset,value\n";
    for (const auto& [subset, value] : m.masses()) {
      out << csv_escape(subset_display(m.frame(), subset)) << "," << format_number(value)
          << "\n";
    }
    return out.str();
  }
  std::ostringstream out;
  for (const auto& [subset, value] : m.masses()) {
    out << pad(subset_display(m.frame(), subset), 24) << format_number(value) << "\n";
  }
  return out.str();
}

std::string render_posteriors(std::span<const double> posteriors, OutputFormat format) {
  if (format == OutputFormat::json) {
    ordered_json j;
    j["version"] = kSchemaVersion;
    if (posteriors.size() == 1) {
      j["posterior"] = posteriors[0];
    } else {
      ordered_json list = ordered_json::array();
      for (double p : posteriors) list.push_back(p);
      j["posteriors"] = list;
    }
    return dump_fixed(j);
  }
  if (format == OutputFormat::csv) {
    std::ostringstream out;
    out << "index,posterior\n";
    for (std::size_t i = 0; i < posteriors.size(); ++i) {
      out << i << "," << format_number(posteriors[i]) << "\n";
    }
    return out.str();
  }
  std::ostringstream out;
  if (posteriors.size() == 1) {
    out << "posterior: " << format_number(posteriors[0]) << "\n";
  } else {
    for (std::size_t i = 0; i < posteriors.size(); ++i) {
      out << "posterior[" << i << "]: " << format_number(posteriors[i]) << "\n";
    }
  }
  return out.str();
}

std::string render_opinion(const Opinion& o) {
  ordered_json j;
  j["b"] = o.belief;
  j["d"] = o.disbelief;
  j["u"] = o.uncertainty;
  j["a"] = o.base_rate;
  return dump_fixed(j);
}

}  // namespace relcalc
