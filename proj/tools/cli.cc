// Copyright 2026 The propaudit Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <memory>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "propaudit/approval.h"
#include "propaudit/baselines.h"
#include "propaudit/embedding.h"
#include "propaudit/errors.h"
#include "propaudit/experiment.h"
#include "propaudit/generators.h"
#include "propaudit/json_io.h"
#include "propaudit/oracle.h"
#include "propaudit/sear.h"
#include "propaudit/verify.h"

namespace propaudit::cli {
namespace {

using nlohmann::json;

// Writes text to --out if given, otherwise to the report stream.
void Emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw InputError("cannot write " + path);
  file << text;
}

std::string Dump(const json& value) { return value.dump(2) + "\n"; }

bool ParseIndex(const std::string& token, std::size_t* value) {
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, *value);
  return ec == std::errc() && ptr == end;
}

// Comma-separated candidate names or indices. A token that equals a
// candidate name resolves to that name.
std::vector<std::size_t> ParseSelectionList(const std::string& text,
                                            const Instance& instance) {
  std::vector<std::size_t> out;
  std::stringstream stream(text);
  std::string token;
  const auto& names = instance.candidate_names();
  while (std::getline(stream, token, ',')) {
    token.erase(0, token.find_first_not_of(" \t"));
    token.erase(token.find_last_not_of(" \t") + 1);
    if (token.empty()) continue;
    auto it = std::find(names.begin(), names.end(), token);
    std::size_t index = 0;
    if (it != names.end()) {
      out.push_back(static_cast<std::size_t>(it - names.begin()));
    } else if (ParseIndex(token, &index)) {
      out.push_back(index);
    } else {
      throw InputError("unknown candidate \"" + token + "\"");
    }
  }
  return out;
}

std::string CandidateLabel(const Instance& instance, std::size_t c) {
  if (c < instance.candidate_names().size()) {
    return instance.candidate_names()[c];
  }
  return std::to_string(c);
}

std::string AgentLabel(const Instance& instance, std::size_t i) {
  if (i < instance.agent_names().size()) return instance.agent_names()[i];
  return std::to_string(i);
}

template <typename Label>
std::string JoinLabels(const std::vector<std::size_t>& ids, Label label) {
  std::string out = "{";
  for (std::size_t j = 0; j < ids.size(); ++j) {
    if (j > 0) out += ", ";
    out += label(ids[j]);
  }
  return out + "}";
}

std::string WitnessText(const Instance& instance, const Witness& w) {
  std::ostringstream text;
  text << "  center: "
       << (w.center ? CandidateLabel(instance, *w.center) : std::string("-"))
       << "\n  level: " << w.level << "\n  radius: " << w.radius
       << "\n  coalition: "
       << JoinLabels(w.coalition,
                     [&](std::size_t i) { return AgentLabel(instance, i); })
       << "\n  covered: "
       << JoinLabels(w.covered,
                     [&](std::size_t c) { return CandidateLabel(instance, c); })
       << "\n";
  return text.str();
}

json VerdictReport(const Instance& instance, const Verdict& verdict) {
  json report = VerdictToJson(verdict);
  if (verdict.witness && verdict.witness->center) {
    report["witness"]["center_name"] =
        CandidateLabel(instance, *verdict.witness->center);
  }
  return report;
}

std::string VerdictText(const Instance& instance, const Verdict& verdict) {
  std::ostringstream text;
  text << (verdict.satisfied ? "SATISFIED" : "VIOLATED") << " "
       << verdict.axiom << " gamma=" << verdict.gamma << " ("
       << verdict.elapsed_ms << " ms)\n";
  if (verdict.witness) text << WitnessText(instance, *verdict.witness);
  for (std::size_t j = 0; j < verdict.all_witnesses.size(); ++j) {
    text << "witness " << j << ":\n"
         << WitnessText(instance, verdict.all_witnesses[j]);
  }
  return text.str();
}

struct AuditArgs {
  std::string instance;
  std::string selection;
  std::string selection_file;
  std::string axiom = "dc-mpjr+";
  double gamma = 1.0;
  int ell = 0;
  double tie_epsilon = 0.0;
  bool all_witnesses = false;
  std::string format = "json";
  std::string out;
  std::uint64_t seed = 0;
};

int Audit(const AuditArgs& args, std::ostream& out) {
  const Instance instance = InstanceFromJson(ReadJsonFile(args.instance));
  std::vector<std::size_t> centers;
  if (!args.selection_file.empty()) {
    if (!args.selection.empty()) {
      throw InputError("give either --selection or --selection-file");
    }
    centers = SelectionIndicesFromJson(ReadJsonFile(args.selection_file));
  } else if (!args.selection.empty()) {
    centers = ParseSelectionList(args.selection, instance);
  } else {
    throw InputError("a selection is required");
  }
  const Selection selection = Selection::For(instance, std::move(centers));

  VerifyOptions options;
  options.gamma = args.gamma;
  options.tie_epsilon = args.tie_epsilon;
  options.all_witnesses = args.all_witnesses;
  const bool needs_ell =
      args.axiom == "fixed-ell-dc" || args.axiom == "fixed-ell-mpjr+-oracle";
  if (needs_ell && args.ell == 0) throw InputError(args.axiom + " needs --ell");

  Verdict verdict;
  if (args.axiom == "dc-mpjr+") {
    verdict = VerifyDcMpjrPlus(instance, selection, options);
  } else if (args.axiom == "mpjr+") {
    verdict = VerifyMpjrPlusSmallK(instance, selection, options);
  } else if (args.axiom == "fixed-ell-dc") {
    verdict = VerifyFixedEllDc(instance, selection, args.ell, options);
  } else if (args.axiom == "mpjr-oracle") {
    verdict = OracleMpjr(instance, selection);
  } else if (args.axiom == "mpjr+-oracle") {
    verdict = OracleMpjrPlus(instance, selection, args.gamma);
  } else if (args.axiom == "dc-oracle") {
    verdict = OracleDc(instance, selection, args.gamma);
  } else if (args.axiom == "fixed-ell-mpjr+-oracle") {
    verdict = OracleFixedEllMpjrPlus(instance, selection, args.ell);
  } else {
    throw InputError("unknown axiom \"" + args.axiom + "\"");
  }
  Emit(args.out,
       args.format == "text" ? VerdictText(instance, verdict)
                             : Dump(VerdictReport(instance, verdict)),
       out);
  return verdict.satisfied ? kExitSatisfied : kExitViolated;
}

struct GenerateArgs {
  std::string kind = "gaussian";
  GaussianConfig gaussian;
  std::string out;
};

int Generate(const GenerateArgs& args, std::ostream& out) {
  json result;
  if (args.kind == "gaussian") {
    const GaussianSample sample = GenerateGaussianInstance(args.gaussian);
    result = InstanceToJson(sample.instance);
    result["cluster_of"] = sample.cluster_of;
  } else if (args.kind == "prop3-1" || args.kind == "prop3-2") {
    const Fixture fixture = IncomparabilityFixture(args.kind == "prop3-1" ? 1 : 2);
    result = InstanceToJson(fixture.instance);
    result["selection"] = fixture.selection.centers();
  } else if (args.kind == "fig2") {
    result = InstanceToJson(ObjectiveFailureFixture());
  } else {
    throw InputError("unknown kind \"" + args.kind + "\"");
  }
  Emit(args.out, Dump(result), out);
  return kExitSatisfied;
}

struct SearArgs {
  std::string instance;
  std::string format = "json";
  std::string out;
  std::uint64_t seed = 0;
};

int Sear(const SearArgs& args, std::ostream& out) {
  const Instance instance = InstanceFromJson(ReadJsonFile(args.instance));
  const SearResult result = RunSear(instance);
  if (args.format == "text") {
    std::ostringstream text;
    text << "selection: "
         << JoinLabels(result.selection.centers(),
                       [&](std::size_t c) {
                         return CandidateLabel(instance, c);
                       })
         << "\n";
    for (const SearStep& step : result.trace) {
      text << "  pick " << CandidateLabel(instance, step.candidate)
           << " at radius " << step.radius << " (ball weight "
           << static_cast<double>(step.ball_weight) /
                  static_cast<double>(instance.k())
           << ")\n";
    }
    Emit(args.out, text.str(), out);
  } else {
    Emit(args.out, Dump(SearToJson(result)), out);
  }
  return kExitSatisfied;
}

struct ExperimentArgs {
  ExperimentConfig config;
  std::vector<std::string> axioms;
  bool plot_data = false;
  bool no_timing = false;
  std::string out;
};

int Experiment(ExperimentArgs args, std::ostream& out, std::ostream& err) {
  if (!args.axioms.empty()) {
    args.config.axioms.clear();
    for (const std::string& name : args.axioms) {
      if (name == "mpjr+") {
        args.config.axioms.push_back(Axiom::kMpjrPlus);
      } else if (name == "dc-mpjr+") {
        args.config.axioms.push_back(Axiom::kDcMpjrPlus);
      } else {
        throw ConfigError("unknown axiom \"" + name + "\"");
      }
    }
  }
  const ExperimentReport report = RunExperiment(args.config);
  std::ostringstream text;
  if (args.plot_data) {
    WritePlotData(report, text);
  } else {
    WriteExperimentCsv(report, text, !args.no_timing);
  }
  Emit(args.out, text.str(), out);
  err << "experiment: " << report.rows.size() << " rows in "
      << report.wall_seconds << " s on " << report.threads_used
      << " thread(s)\n";
  return kExitSatisfied;
}

struct BaselineArgs {
  std::string instance;
  std::string objective = "kmedian";
  BaselineOptions options;
  std::string format = "json";
  std::string out;
};

int Baseline(const BaselineArgs& args, std::ostream& out) {
  const Instance instance = InstanceFromJson(ReadJsonFile(args.instance));
  Selection selection;
  double cost = 0.0;
  if (args.objective == "kmedian") {
    selection = args.options.exhaustive
                    ? KMedianExhaustive(instance,
                                        args.options.exhaustive_max_candidates)
                    : KMedianLocalSearch(instance, args.options);
    cost = KMedianCost(instance, selection);
  } else if (args.objective == "kmeans") {
    selection = KMeansLloydSnapped(instance, args.options);
    cost = KMeansCost(instance, selection);
  } else {
    throw InputError("unknown objective \"" + args.objective + "\"");
  }
  if (args.format == "text") {
    std::ostringstream text;
    text << args.objective << " selection: "
         << JoinLabels(selection.centers(),
                       [&](std::size_t c) {
                         return CandidateLabel(instance, c);
                       })
         << " cost " << cost << "\n";
    Emit(args.out, text.str(), out);
  } else {
    Emit(args.out,
         Dump({{"objective", args.objective},
               {"selection", selection.centers()},
               {"cost", cost}}),
         out);
  }
  return kExitSatisfied;
}

struct EmbedArgs {
  std::string approval;
  std::string out;
  std::uint64_t seed = 0;
};

int Embed(const EmbedArgs& args, std::ostream& out) {
  const ApprovalInstance approval = ApprovalFromJson(ReadJsonFile(args.approval));
  Emit(args.out, Dump(InstanceToJson(EmbedApproval(approval))), out);
  return kExitSatisfied;
}

struct ValidateArgs {
  std::string instance;
  bool triangle = true;
  std::string out;
  std::uint64_t seed = 0;
};

int Validate(const ValidateArgs& args, std::ostream& out) {
  const Instance instance =
      InstanceFromJson(ReadJsonFile(args.instance), /*validate=*/false);
  MetricCheckOptions options;
  options.check_triangle = args.triangle;
  const MetricReport report = ValidateMetric(instance, options);
  Emit(args.out,
       report.ok() ? std::string("OK\n")
                   : std::string(MetricIssueName(report.issue)) + ": " +
                         report.message + "\n",
       out);
  return report.ok() ? kExitSatisfied : kExitViolated;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Audit proportional representation of clustering centers",
               "propaudit"};
  app.require_subcommand(1);
  std::function<int()> action;

  AuditArgs audit;
  CLI::App* audit_cmd = app.add_subcommand("audit", "Verify a selection");
  audit_cmd->add_option("instance", audit.instance, "Instance JSON file")
      ->required();
  audit_cmd->add_option("--selection,-x", audit.selection,
                        "Comma-separated candidate names or indices");
  audit_cmd->add_option("--selection-file", audit.selection_file,
                        "JSON array, or object with a \"selection\" key");
  audit_cmd->add_option("--axiom", audit.axiom)
      ->check(CLI::IsMember({"dc-mpjr+", "mpjr+", "fixed-ell-dc",
                             "mpjr-oracle", "mpjr+-oracle", "dc-oracle",
                             "fixed-ell-mpjr+-oracle"}));
  audit_cmd->add_option("--gamma", audit.gamma);
  audit_cmd->add_option("--ell", audit.ell, "Level for the fixed-ell axioms");
  audit_cmd->add_option("--tie-epsilon", audit.tie_epsilon);
  audit_cmd->add_flag("--all-witnesses", audit.all_witnesses);
  audit_cmd->add_option("--format", audit.format)
      ->check(CLI::IsMember({"json", "text"}));
  audit_cmd->add_option("--out,-o", audit.out);
  audit_cmd->add_option("--seed", audit.seed, "Accepted for uniformity");
  audit_cmd->callback([&] { action = [&] { return Audit(audit, out); }; });

  SearArgs sear;
  CLI::App* sear_cmd =
      app.add_subcommand("sear", "Compute a proportional selection");
  sear_cmd->add_option("instance", sear.instance)->required();
  sear_cmd->add_option("--format", sear.format)
      ->check(CLI::IsMember({"json", "text"}));
  sear_cmd->add_option("--out,-o", sear.out);
  sear_cmd->add_option("--seed", sear.seed, "Accepted for uniformity");
  sear_cmd->callback([&] { action = [&] { return Sear(sear, out); }; });

  GenerateArgs generate;
  CLI::App* generate_cmd =
      app.add_subcommand("generate", "Write a synthetic or fixture instance");
  generate_cmd->add_option("--kind", generate.kind)
      ->check(CLI::IsMember({"gaussian", "prop3-1", "prop3-2", "fig2"}));
  generate_cmd->add_option("--n", generate.gaussian.n);
  generate_cmd->add_option("--g", generate.gaussian.g);
  generate_cmd->add_option("--sigma", generate.gaussian.sigma);
  generate_cmd->add_option("--seed", generate.gaussian.seed);
  generate_cmd->add_option("--k", generate.gaussian.k);
  generate_cmd->add_option("--out,-o", generate.out);
  generate_cmd->callback(
      [&] { action = [&] { return Generate(generate, out); }; });

  ExperimentArgs experiment;
  CLI::App* experiment_cmd = app.add_subcommand(
      "experiment", "Satisfaction rates of random selections (CSV)");
  experiment_cmd->add_option("--n", experiment.config.n_values)->delimiter(',');
  experiment_cmd->add_option("--g", experiment.config.g_values)->delimiter(',');
  experiment_cmd->add_option("--instances",
                             experiment.config.instances_per_cell);
  experiment_cmd->add_option("--selections",
                             experiment.config.selections_per_instance);
  experiment_cmd->add_option("--k", experiment.config.k);
  experiment_cmd->add_option("--sigma", experiment.config.sigma);
  experiment_cmd->add_option("--seed", experiment.config.master_seed);
  experiment_cmd->add_option("--gamma", experiment.config.gamma);
  experiment_cmd->add_option("--threads", experiment.config.threads,
                             "0: PROPAUDIT_THREADS or all cores");
  experiment_cmd->add_option("--axiom", experiment.axioms)->delimiter(',');
  experiment_cmd->add_flag("--plot-data", experiment.plot_data,
                           "Tab-separated per-cell rates");
  experiment_cmd->add_flag("--no-timing", experiment.no_timing,
                           "Leave mean_ms empty");
  experiment_cmd->add_option("--out,-o", experiment.out);
  experiment_cmd->callback(
      [&] { action = [&] { return Experiment(experiment, out, err); }; });

  BaselineArgs baseline;
  CLI::App* baseline_cmd =
      app.add_subcommand("baseline", "Classical clustering selection");
  baseline_cmd->add_option("instance", baseline.instance)->required();
  baseline_cmd->add_option("--objective", baseline.objective)
      ->check(CLI::IsMember({"kmedian", "kmeans"}));
  baseline_cmd->add_option("--restarts", baseline.options.restarts);
  baseline_cmd->add_option("--seed", baseline.options.seed);
  baseline_cmd->add_flag("--exhaustive", baseline.options.exhaustive);
  baseline_cmd->add_option("--format", baseline.format)
      ->check(CLI::IsMember({"json", "text"}));
  baseline_cmd->add_option("--out,-o", baseline.out);
  baseline_cmd->callback(
      [&] { action = [&] { return Baseline(baseline, out); }; });

  EmbedArgs embed;
  CLI::App* embed_cmd = app.add_subcommand(
      "embed", "Turn an approval profile into an explicit metric instance");
  embed_cmd->add_option("approval", embed.approval)->required();
  embed_cmd->add_option("--out,-o", embed.out);
  embed_cmd->add_option("--seed", embed.seed, "Accepted for uniformity");
  embed_cmd->callback([&] { action = [&] { return Embed(embed, out); }; });

  ValidateArgs validate;
  CLI::App* validate_cmd =
      app.add_subcommand("validate", "Check that an instance is a metric");
  validate_cmd->add_option("instance", validate.instance)->required();
  validate_cmd->add_flag("!--no-triangle", validate.triangle,
                         "Skip the cubic triangle scan");
  validate_cmd->add_option("--out,-o", validate.out);
  validate_cmd->add_option("--seed", validate.seed, "Accepted for uniformity");
  validate_cmd->callback(
      [&] { action = [&] { return Validate(validate, out); }; });

  // CLI11 consumes a reversed argument vector.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitSatisfied;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitSatisfied;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitError;
  }
  try {
    return action();
  } catch (const std::exception& e) {
    err << "propaudit: " << e.what() << "\n";
    return kExitError;
  }
}

}  // namespace propaudit::cli
