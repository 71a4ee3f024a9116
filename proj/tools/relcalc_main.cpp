#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "relcalc/error.hpp"
#include "relcalc/io.hpp"

namespace {

using namespace relcalc;

// 0 = success, 1 = computation failure, 2 = parse/validation failure.
int exit_code_for(errc code) {
  switch (code) {
    case errc::mass_overflow:
    case errc::out_of_scale:
    case errc::total_conflict:
    case errc::zero_marginal:
    case errc::impossible_posterior:
      return 1;
    default:
      return 2;
  }
}

OutputFormat parse_format_flag(const std::string& name) {
  const auto format = output_format_from_name(name);
  if (!format) {
    fail(errc::schema_error, "unknown output format '" + name + "'");
  }
  return *format;
}

struct ComputeArgs {
  std::string catalog_path;
  std::string dossier_path;
  std::string config_path;
  std::string septuple_path;
  std::string format = "text";
  double epsilon = 0.0;
  bool epsilon_set = false;
};

int run_compute(const ComputeArgs& args) {
  RunConfig cfg;
  if (!args.config_path.empty()) {
    cfg = parse_config(args.config_path);
  }
  if (!args.septuple_path.empty()) {
    cfg.septuple = parse_septuple(args.septuple_path);
  }
  if (args.epsilon_set) {
    if (!(args.epsilon > 0.0) || !(args.epsilon < 0.5)) {
      fail(errc::validation_error, "--epsilon must lie in (0, 0.5)");
    }
    cfg.epsilon = args.epsilon;
  }
  cfg.format = parse_format_flag(args.format);

  const PropertyCatalog catalog = parse_catalog(args.catalog_path);
  const Dossier dossier = parse_dossier(args.dossier_path);
  const Report report = build_report(dossier, catalog, cfg);
  std::cout << render_report(report, cfg.format);
  return 0;
}

int run_validate(const std::string& catalog_path, const std::string& dossier_path,
                 const std::string& config_path) {
  if (catalog_path.empty() && dossier_path.empty() && config_path.empty()) {
    fail(errc::schema_error, "validate needs at least one of --catalog/--dossier/--config");
  }
  std::optional<PropertyCatalog> catalog;
  if (!catalog_path.empty()) {
    catalog = parse_catalog(catalog_path);
    std::cout << "OK " << catalog_path << "\n";
  }
  if (!dossier_path.empty()) {
    const Dossier dossier = parse_dossier(dossier_path);
    if (catalog) {
      // Cross-check: every assessment must name a catalog property.
      assemble_masses(dossier, *catalog);
    }
    std::cout << "OK " << dossier_path << "\n";
  }
  if (!config_path.empty()) {
    parse_config(config_path);
    std::cout << "OK " << config_path << "\n";
  }
  return 0;
}

int run_ds(const std::vector<std::string>& mass_paths, const std::string& format_name) {
  const OutputFormat format = parse_format_flag(format_name);
  for (const auto& path : mass_paths) {
    std::cout << render_ds(parse_mass(path), format);
  }
  return 0;
}

int run_fuse(const std::vector<std::string>& mass_paths, const std::string& format_name) {
  const OutputFormat format = parse_format_flag(format_name);
  MassFunction combined = parse_mass(mass_paths[0]);
  for (std::size_t i = 1; i < mass_paths.size(); ++i) {
    combined = combine_dempster(combined, parse_mass(mass_paths[i]));
  }
  std::cout << render_mass(combined, format);
  return 0;
}

struct BayesArgs {
  double prior = 0.0;
  double likelihood = 0.0;
  double marginal = 0.0;
  bool scalar_set = false;
  std::string partition_path;
  std::string format = "text";
};

int run_bayes(const BayesArgs& args) {
  const OutputFormat format = parse_format_flag(args.format);
  if (!args.partition_path.empty()) {
    const BayesPartition partition = parse_partition(args.partition_path);
    const std::vector<double> result = sequential_update(partition.priors, partition.evidence);
    std::cout << render_posteriors(result, format);
    return 0;
  }
  if (!args.scalar_set) {
    fail(errc::schema_error, "bayes needs either --partition or --prior/--likelihood/--marginal");
  }
  const double p = posterior(BayesUpdate{args.prior, args.likelihood, args.marginal});
  std::cout << render_posteriors(std::vector<double>{p}, format);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Trust-relation calculus: relation scoring, evidence fusion and belief updates"};
  app.require_subcommand(1);

  ComputeArgs compute_args;
  auto* compute = app.add_subcommand("compute", "Evaluate a dossier against a catalog");
  compute->add_option("--catalog", compute_args.catalog_path, "Property catalog JSON")
      ->required();
  compute->add_option("--dossier", compute_args.dossier_path, "Dossier JSON")->required();
  compute->add_option("--config", compute_args.config_path, "Run config JSON");
  compute->add_option("--septuple", compute_args.septuple_path,
                      "Septuple scale JSON (overrides the config)");
  compute->add_option("--format", compute_args.format, "Output format: text, json or csv");
  compute->add_option("--epsilon", compute_args.epsilon, "Interpretation tolerance in (0, 0.5)")
      ->each([&compute_args](const std::string&) { compute_args.epsilon_set = true; });

  std::string validate_catalog, validate_dossier, validate_config;
  auto* validate = app.add_subcommand("validate", "Validate input files without computing");
  validate->add_option("--catalog", validate_catalog, "Property catalog JSON");
  validate->add_option("--dossier", validate_dossier, "Dossier JSON");
  validate->add_option("--config", validate_config, "Run config JSON");

  std::vector<std::string> ds_paths;
  std::string ds_format = "text";
  auto* ds = app.add_subcommand("ds", "Belief/plausibility table of a mass function");
  ds->add_option("mass", ds_paths, "Mass-function JSON file(s)")->required()->expected(-1);
  ds->add_option("--format", ds_format, "Output format: text, json or csv");

  std::vector<std::string> fuse_paths;
  std::string fuse_format = "text";
  auto* fuse = app.add_subcommand("fuse", "Combine observer mass functions (Dempster's rule)");
  fuse->add_option("mass", fuse_paths, "Mass-function JSON files (at least two)")
      ->required()
      ->expected(-2);
  fuse->add_option("--format", fuse_format, "Output format: text, json or csv");

  BayesArgs bayes_args;
  auto* bayes = app.add_subcommand("bayes", "Posterior probability updates");
  auto* prior_opt = bayes->add_option("--prior", bayes_args.prior, "Prior probability");
  bayes->add_option("--likelihood", bayes_args.likelihood, "Likelihood P(D|H)")
      ->needs(prior_opt);
  bayes->add_option("--marginal", bayes_args.marginal, "Marginal probability P(D)")
      ->needs(prior_opt);
  bayes->add_option("--partition", bayes_args.partition_path,
                    "Partition JSON with priors and likelihood stream");
  bayes->add_option("--format", bayes_args.format, "Output format: text, json or csv");

  std::string catalog_format = "text";
  auto* catalog = app.add_subcommand("catalog", "Print the built-in property catalog");
  catalog->add_option("--format", catalog_format, "Output format: text, json or csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (compute->parsed()) return run_compute(compute_args);
    if (validate->parsed()) {
      return run_validate(validate_catalog, validate_dossier, validate_config);
    }
    if (ds->parsed()) return run_ds(ds_paths, ds_format);
    if (fuse->parsed()) return run_fuse(fuse_paths, fuse_format);
    if (bayes->parsed()) {
      bayes_args.scalar_set = prior_opt->count() > 0;
      return run_bayes(bayes_args);
    }
    if (catalog->parsed()) {
      std::cout << render_catalog(default_catalog(), parse_format_flag(catalog_format));
      return 0;
    }
  } catch (const relcalc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
