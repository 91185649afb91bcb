#include "discrim/cli.hpp"

#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "CLI11.hpp"
#include "discrim/blackwell.hpp"
#include "discrim/core.hpp"
#include "discrim/exante.hpp"
#include "discrim/oracle.hpp"
#include "discrim/report.hpp"
#include "discrim/scenario.hpp"

namespace discrim::cli {

namespace {

/// Filesystem failures; everything else that is wrong with the input is an
/// std::invalid_argument.
class IoFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw IoFailure("cannot read " + path);
  std::ostringstream buffer;
  buffer << file.rdbuf();
  if (file.bad()) throw IoFailure("failed while reading " + path);
  return buffer.str();
}

void write_output(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty()) {
    out << content;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoFailure("cannot open " + path + " for writing");
  file << content;
  file.flush();
  if (!file.good()) throw IoFailure("failed while writing " + path);
}

struct Options {
  std::string scenario_path;
  std::string first;
  std::string second;
  std::string out_path;
  std::string format = "text";
  std::string cost_text;
  std::uint64_t seed = 0;
  std::size_t skill_count = 2;
  std::size_t support_bound = 4;
  std::uint64_t denominator_bound = 16;
};

void emit(const Report& report, const Options& options, std::ostream& out) {
  write_output(options.out_path,
               options.format == "machine-readable" ? emit_report(report)
                                                    : render_text(report),
               out);
}

int run_classify(const Options& options, std::ostream& out) {
  const Scenario scenario = parse_scenario(read_file(options.scenario_path));
  const Population& first = find_population(scenario, options.first);
  const Population& second = find_population(scenario, options.second);
  const Classification result = classify(first, second);
  emit(make_classify_report(scenario.skills, options.first, first, options.second, second,
                            result),
       options, out);
  return kExitOk;
}

int run_dominates(const Options& options, std::ostream& out) {
  const Scenario scenario = parse_scenario(read_file(options.scenario_path));
  const Population& spread = find_population(scenario, options.first);
  const Population& base = find_population(scenario, options.second);
  const DominanceResult result = mps_dominates(spread, base);
  emit(make_dominates_report(scenario.skills, options.first, spread, options.second, base,
                             result),
       options, out);
  return kExitOk;
}

int run_exante(const Options& options, bool cost_flag_given, std::ostream& out) {
  const Scenario scenario = parse_scenario(read_file(options.scenario_path));
  const Population& first = find_population(scenario, options.first);
  const Population& second = find_population(scenario, options.second);
  Rational cost;
  if (cost_flag_given) {
    try {
      cost = parse_rational(options.cost_text);
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(std::string("--cost: ") + e.what());
    }
  } else if (scenario.cost) {
    cost = *scenario.cost;
  } else {
    throw std::invalid_argument(
        "no interview cost: pass --cost or set \"cost\" in the scenario");
  }
  if (cost < 0) {
    throw std::invalid_argument("interview cost is negative: " + to_string(cost));
  }
  const ExAnteClassification result =
      cost == 0 ? classify_ex_ante_zero_cost(first, second)
                : classify_ex_ante(ExAnteScenario(first, second, cost));
  emit(make_exante_report(scenario.skills, options.first, first, options.second, second,
                          cost, result),
       options, out);
  return kExitOk;
}

int run_gen(const Options& options, std::ostream& out) {
  const oracle::InstanceSeed seed{options.seed, options.skill_count, options.support_bound,
                                  options.denominator_bound};
  const Population base = oracle::random_population(seed);
  oracle::SplitResult split = oracle::random_mps_split(base, seed);
  Population independent =
      oracle::random_population_with_mean(skill_distribution(base), seed);

  std::vector<std::string> labels;
  labels.reserve(options.skill_count);
  for (std::size_t i = 1; i <= options.skill_count; ++i) {
    labels.push_back("s" + std::to_string(i));
  }
  Scenario scenario{SkillSet(std::move(labels)), {}, {}, std::nullopt, std::nullopt};
  scenario.populations.emplace("base", base);
  scenario.populations.emplace("spread", std::move(split.population));
  scenario.populations.emplace("independent", std::move(independent));
  scenario.ground_truth = GroundTruth{"base", "spread", split.degenerate, "independent"};
  write_output(options.out_path, emit_scenario(scenario), out);
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options options;
  CLI::App app{"Exact classification of statistical discrimination between "
               "finite-support belief populations"};
  app.require_subcommand(1);

  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--scenario", options.scenario_path, "Scenario JSON file")->required();
    cmd->add_option("--first", options.first, "Name of the first population")->required();
    cmd->add_option("--second", options.second, "Name of the second population")->required();
    cmd->add_option("--out", options.out_path, "Write the report to this file");
    cmd->add_option("--format", options.format, "Report format")
        ->check(CLI::IsMember({"text", "machine-readable"}));
  };

  CLI::App* classify_cmd =
      app.add_subcommand("classify", "Three-way discrimination classification");
  add_common(classify_cmd);

  CLI::App* dominates_cmd = app.add_subcommand(
      "dominates", "Is --first a mean-preserving spread of --second?");
  add_common(dominates_cmd);

  CLI::App* exante_cmd =
      app.add_subcommand("exante", "Costly-interview (ex-ante) classification");
  add_common(exante_cmd);
  CLI::Option* cost_option = exante_cmd->add_option(
      "--cost", options.cost_text,
      "Interview cost as an exact rational; defaults to the scenario's cost field");

  CLI::App* gen_cmd = app.add_subcommand(
      "gen", "Generate a deterministic random scenario with ground-truth annotations");
  gen_cmd->add_option("--seed", options.seed, "Generator seed");
  gen_cmd->add_option("--skills", options.skill_count, "Number of skill types")
      ->check(CLI::PositiveNumber);
  gen_cmd->add_option("--support", options.support_bound, "Cap on population support sizes")
      ->check(CLI::PositiveNumber);
  gen_cmd
      ->add_option("--denominator", options.denominator_bound,
                   "Cap on generated denominators")
      ->check(CLI::PositiveNumber);
  gen_cmd->add_option("--out", options.out_path, "Write the scenario to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    if (classify_cmd->parsed()) return run_classify(options, out);
    if (dominates_cmd->parsed()) return run_dominates(options, out);
    if (exante_cmd->parsed()) return run_exante(options, cost_option->count() > 0, out);
    return run_gen(options, out);
  } catch (const UnequalMeansError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomainError;
  } catch (const ZeroCostError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomainError;
  } catch (const IoFailure& e) {
    err << "error: " << e.what() << "\n";
    return kExitIoError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace discrim::cli
