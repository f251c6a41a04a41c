// Command-line front end: surfaces, the exponential example, verification suites.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "shockcop/shockcop.hpp"

using namespace shockcop;

namespace {

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

void emit(const std::string& out, const std::string& text) {
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    write_file(out, text);
  }
}

int cmd_surface(const std::string& config_path, const std::string& family, const std::string& bound, int grid,
                const std::string& out) {
  const json config = read_json_file(config_path);
  std::optional<Family> fam;
  if (!family.empty()) fam = parse_family(family);
  const auto surface = compute_surface(config, fam, parse_bound_level(bound), grid);
  surface.validate();
  if (ends_with(out, ".json")) {
    emit(out, surface_to_json(surface).dump(2) + "\n");
  } else {
    std::ostringstream os;
    write_csv(os, surface);
    emit(out, os.str());
  }
  return 0;
}

int cmd_example(const std::string& config_path, example::Params params, const std::string& out_dir) {
  if (!config_path.empty()) params = example::parse_params(read_json_file(config_path));
  try {
    example::imprecise_model(params);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("example parameters: ") + e.what());
  }
  const auto rep = example::run(params, out_dir);
  std::cout << rep.to_json().dump(2) << "\n";
  return rep.pass() ? 0 : 1;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, const std::string& config_path, const std::string& out) {
  suites::SuiteOptions opt;
  opt.seed = seed;
  if (!config_path.empty()) opt.config = read_json_file(config_path);
  const auto rep = suites::run_suite(suite, opt);
  emit(out, rep.to_json().dump(2) + "\n");
  for (const auto& c : rep.checks) {
    std::cerr << (c.pass() ? "PASS " : c.informational ? "INFO " : "FAIL ") << c.check << " (" << c.instances
              << " instances, " << c.failure_count << " failures, " << c.seconds << " s)\n";
  }
  return rep.pass() ? 0 : 1;
}

int cmd_validate(const std::string& config_path, int samples) {
  const json config = read_json_file(config_path);
  std::vector<Generator> gens;
  if (config.contains("generators")) {
    for (const auto& g : config.at("generators")) gens.push_back(parse_generator(g));
  } else {
    gens.push_back(parse_generator(config));
  }
  json out = json::array();
  bool ok = true;
  for (const auto& g : gens) {
    const auto rep = validate(g, samples);
    ok = ok && rep.ok();
    json j{{"generator", g.describe()},
           {"kind", to_string(rep.kind)},
           {"points_checked", rep.points_checked},
           {"ok", rep.ok()},
           {"continuity_gap", rep.continuity_gap},
           {"continuity_location", rep.continuity_location},
           {"x0_discrepancy", rep.x0_discrepancy},
           {"x0_location", rep.x0_location}};
    j["violations"] = json::array();
    for (const auto& v : rep.violations) {
      j["violations"].push_back(
          {{"condition", v.condition}, {"description", v.description}, {"witnesses", v.witnesses}, {"count", v.count}});
    }
    out.push_back(j);
  }
  std::cout << out.dump(2) << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shock-model copulas: precise and imprecise Marshall, maxmin and reflected maxmin families"};
  app.require_subcommand(1);

  std::string config, family, bound = "precise", out;
  int grid = 101;
  auto* surface = app.add_subcommand("surface", "Evaluate a copula or bound surface on a uniform grid");
  surface->add_option("--config", config, "Model, generator or example config (JSON)")->required()->check(CLI::ExistingFile);
  surface->add_option("--family", family, "marshall, maxmin or rmm; must match the config when both are given")
      ->check(CLI::IsMember({"marshall", "maxmin", "rmm"}));
  surface->add_option("--bound", bound, "lower, upper, precise, envelope_inf or envelope_sup")
      ->check(CLI::IsMember({"lower", "upper", "precise", "envelope_inf", "envelope_sup"}));
  surface->add_option("--grid", grid, "Points per axis")->check(CLI::Range(2, 100000));
  surface->add_option("--out", out, "Output path (.csv or .json); stdout when omitted");

  example::Params params;
  std::string example_config, example_out;
  auto* ex = app.add_subcommand("example", "Rebuild the exponential/Dirac example, check it and write fixtures");
  ex->add_option("--config", example_config, "JSON with lambda1, lambda2, mu1, mu2")->check(CLI::ExistingFile);
  ex->add_option("--lambda1", params.lambda1, "Lower rate of X");
  ex->add_option("--lambda2", params.lambda2, "Upper rate of X");
  ex->add_option("--mu1", params.mu1, "Lower rate of Y");
  ex->add_option("--mu2", params.mu2, "Upper rate of Y");
  ex->add_option("--out", example_out, "Directory for the six fixture CSV files");

  std::string suite = "all", verify_config, verify_out;
  std::uint64_t seed = 1;
  auto* verify = app.add_subcommand("verify", "Run verification suites; exit 1 on any failing check");
  verify->add_option("--suite", suite, "axioms, oracles, theorems, montecarlo or all")
      ->check(CLI::IsMember(suites::suite_names()));
  verify->add_option("--seed", seed, "Master seed");
  verify->add_option("--config", verify_config, "Extra generators or model to check in the axioms suite")
      ->check(CLI::ExistingFile);
  verify->add_option("--out", verify_out, "Write the JSON report here instead of stdout");

  std::string validate_config;
  int samples = 1025;
  auto* val = app.add_subcommand("validate", "Check generator conditions and print a JSON report");
  val->add_option("--config", validate_config, "Generator or generator-vector config")
      ->required()
      ->check(CLI::ExistingFile);
  val->add_option("--samples", samples, "Uniform grid size")->check(CLI::Range(2, 10000000));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*surface) return cmd_surface(config, family, bound, grid, out);
    if (*ex) return cmd_example(example_config, params, example_out);
    if (*verify) return cmd_verify(suite, seed, verify_config, verify_out);
    if (*val) return cmd_validate(validate_config, samples);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
