// Copyright 2026 The wbrl Authors.
//
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

#include "wbrl/cli.hpp"

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "wbrl/batch.hpp"
#include "wbrl/best_response.hpp"
#include "wbrl/change_stats.hpp"
#include "wbrl/distribution.hpp"
#include "wbrl/ground_cost.hpp"
#include "wbrl/info_costs.hpp"
#include "wbrl/metric_table.hpp"
#include "wbrl/panel.hpp"
#include "wbrl/pgg.hpp"
#include "wbrl/rng.hpp"
#include "wbrl/selfplay.hpp"
#include "wbrl/svg.hpp"
#include "wbrl/text.hpp"

namespace wbrl {
namespace {

namespace fs = std::filesystem;

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open " + path.string() + " for writing");
  }
  out << content;
  if (!out) {
    throw std::runtime_error("write to " + path.string() + " failed");
  }
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Validators that reuse the library parsers, so bad specs fail at
// option-parsing time (exit code 1) instead of during the run.
CLI::Validator spec_validator(const char* name, void (*probe)(const std::string&)) {
  return CLI::Validator(
      [probe](std::string& value) -> std::string {
        try {
          probe(value);
        } catch (const std::exception& err) {
          return std::string(err.what());
        }
        return {};
      },
      name);
}

void probe_cost(const std::string& value) { InfoCost::parse(value); }
void probe_prior(const std::string& value) { PriorSpec::parse(value); }
void probe_synth(const std::string& value) { SynthSpec::parse(value); }

// Shared ground-cost flags for subcommands that evaluate transport costs.
struct GroundCostFlags {
  std::string distance = "abs";
  int order = 1;
  double fixed_value = 1.0;
  int boundary = 0;
  double boundary_penalty = 1.0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--distance", distance,
                    "Ground distance on the action grid")
        ->check(CLI::IsMember({"abs", "fixed", "boundary"}))
        ->capture_default_str();
    cmd->add_option("--order", order, "Exponent applied to the ground distance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--fixed-value", fixed_value,
                    "Off-diagonal cost for the fixed distance")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    cmd->add_option("--boundary", boundary,
                    "Reference action for the boundary distance")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    cmd->add_option("--boundary-penalty", boundary_penalty,
                    "Scale for the boundary distance")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
  }

  GroundCostConfig to_config() const {
    GroundCostConfig config;
    config.distance = parse_ground_distance(distance);
    config.order = order;
    config.fixed_value = fixed_value;
    config.boundary = boundary;
    config.boundary_penalty = boundary_penalty;
    return config;
  }
};

// Shared game flags for the public-goods subcommands.
struct GameFlags {
  int endowment = 40;
  double multiplier = 1.6;
  int group_size = 4;
  int rounds = 20;
  int granularity = 1;

  void attach(CLI::App* cmd) {
    cmd->add_option("--endowment", endowment, "Tokens available per round")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--multiplier", multiplier, "Public account multiplier")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--group", group_size, "Players per group")
        ->check(CLI::Range(2, 1024))
        ->capture_default_str();
    cmd->add_option("--rounds", rounds, "Rounds per episode")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--granularity", granularity,
                    "Contribution step size in tokens")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  }

  PggConfig to_config() const {
    PggConfig config;
    config.endowment = endowment;
    config.multiplier = multiplier;
    config.group_size = group_size;
    config.rounds = rounds;
    config.granularity = granularity;
    config.validate();
    return config;
  }
};

struct MetricsArgs {
  std::string panel_path;
  std::string synth_spec;
  int subjects = 16;
  int rounds = 20;
  std::uint64_t seed = 1;
  int endowment = 40;
  int subject = -1;  // -1 means pooled
  double kl_star_epsilon = kDefaultKlStarEpsilon;
  GroundCostFlags ground;
  bool take_root = false;
  int optimal_index = 0;
  int threshold = 5;
  std::string out_dir;
  std::string format = "csv";
  bool svg = false;
};

struct SweepArgs {
  std::vector<double> lambdas;
  std::vector<std::uint64_t> seeds = {1};
  std::string cost = "wasserstein:abs:1";
  std::string prior = "uniform";
  std::string schedule = "previousPolicy";
  std::string exec = "parallel";
  GameFlags game;
  std::string out_dir;
};

struct BestResponseArgs {
  std::vector<double> utilities;
  std::string utilities_file;
  std::string prior = "uniform";
  std::string prior_file;
  std::vector<int> history;
  std::string cost = "wasserstein:abs:1";
  double lambda = 1.0;
  GroundCostFlags ground;
  double kl_star_epsilon = kDefaultKlStarEpsilon;
  std::string format = "json";
  std::string out_file;
};

struct SimulateArgs {
  GameFlags game;
  std::uint64_t seed = 1;
  int episodes = 1;
  std::string policy_spec;
  bool selfplay = false;
  std::string cost = "wasserstein:abs:1";
  std::string prior = "uniform";
  std::string schedule = "previousPolicy";
  double lambda = 1.0;
  GroundCostFlags ground;
  double kl_star_epsilon = kDefaultKlStarEpsilon;
  std::string observation = "individual";
  std::string out_dir;
};

struct SynthArgs {
  std::string generator;
  int subjects = 16;
  int rounds = 20;
  std::uint64_t seed = 1;
  int endowment = 40;
  std::string out_dir;
};

InfoCost build_cost(const std::string& spec, const GroundCostFlags& ground,
                    double kl_star_epsilon, int action_count) {
  InfoCost cost = InfoCost::parse(spec);
  if (cost.kind == InfoCostKind::kKlStar && spec.find(':') == std::string::npos) {
    cost.kl_star_epsilon = kl_star_epsilon;
  }
  if (cost.kind == InfoCostKind::kWasserstein) {
    // The spec string fixes distance and order when given; the flags fill in
    // the remaining knobs and provide defaults when the spec is bare.
    GroundCostConfig flags = ground.to_config();
    if (spec.find(':') == std::string::npos) {
      cost.ot.ground.distance = flags.distance;
      cost.ot.ground.order = flags.order;
    }
    cost.ot.ground.fixed_value = flags.fixed_value;
    cost.ot.ground.boundary = flags.boundary;
    cost.ot.ground.boundary_penalty = flags.boundary_penalty;
    if (cost.ot.ground.boundary >= action_count) {
      throw std::runtime_error("boundary action out of range");
    }
  }
  return cost;
}

nlohmann::ordered_json metric_value_json(double value) {
  if (std::isinf(value)) {
    return nlohmann::ordered_json("inf");
  }
  return nlohmann::ordered_json(value);
}

std::string metric_report_json(const MetricReport& report) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const MetricRow& row : report.rows) {
    nlohmann::ordered_json item;
    item["round"] = row.round;
    item["prior"] = row.prior;
    item["metric"] = row.metric;
    item["value"] = metric_value_json(row.value);
    rows.push_back(item);
  }
  return rows.dump(2) + "\n";
}

std::string metrics_grid_svg(const MetricReport& report) {
  const std::vector<std::string> priors = {"uniform", "previousPolicy",
                                           "optimalDirac"};
  const std::vector<std::string> metrics = {"entropy", "klstar", "wasserstein"};
  std::vector<SvgSeries> cells;
  for (const std::string& metric : metrics) {
    for (const std::string& prior : priors) {
      SvgSeries series;
      series.title = metric + " vs " + prior;
      for (const MetricRow& row : report.rows) {
        if (row.prior == prior && row.metric == metric) {
          series.xs.push_back(static_cast<double>(row.round));
          series.ys.push_back(row.value);
        }
      }
      cells.push_back(std::move(series));
    }
  }
  return svg_chart_grid("divergence from prior by round", cells, 3);
}

void run_metrics(const MetricsArgs& args) {
  ContributionPanel panel;
  bool synthetic = !args.synth_spec.empty();
  if (synthetic) {
    panel = synth_panel(SynthSpec::parse(args.synth_spec), args.subjects,
                        args.rounds, args.seed, args.endowment);
  } else {
    panel = load_panel(args.panel_path, args.endowment);
  }

  MetricTableOptions options;
  if (args.subject >= 0) {
    options.subject = args.subject;
  }
  options.kl_star_epsilon = args.kl_star_epsilon;
  options.ot.ground = args.ground.to_config();
  options.ot.take_root = args.take_root;
  options.optimal_index = args.optimal_index;
  if (options.optimal_index >= panel.action_space().size ||
      options.optimal_index < 0) {
    throw std::runtime_error("optimal action index out of range");
  }
  if (options.ot.ground.boundary >= panel.action_space().size) {
    throw std::runtime_error("boundary action out of range");
  }

  MetricReport report = metric_table(panel, options);
  ChangeStats stats = change_stats(panel, args.threshold);

  fs::create_directories(args.out_dir);
  fs::path out(args.out_dir);
  if (args.format == "json") {
    write_file(out / "metric_report.json", metric_report_json(report));
  } else {
    write_file(out / "metric_report.csv", report.to_csv());
  }
  write_file(out / "change_delta_hist.csv", stats.delta_histogram_csv());
  write_file(out / "change_abs_delta_hist.csv",
             stats.abs_delta_histogram_csv());
  write_file(out / "change_transitions.csv", stats.transitions_csv());
  write_file(out / "change_phase.csv", stats.phase_csv());
  write_file(out / "change_summary.csv", stats.summary_csv());
  if (synthetic) {
    write_file(out / "panel.csv", panel.to_csv());
  }
  if (args.svg) {
    write_file(out / "metric_report.svg", metrics_grid_svg(report));
    write_file(out / "change_abs_delta_hist.svg",
               svg_bar_chart("absolute contribution change per step", 0,
                             stats.abs_delta_histogram));
    write_file(out / "change_transitions.svg",
               svg_heatmap("contribution transitions", stats.size,
                           stats.transition_counts));
  }
}

void run_sweep(const SweepArgs& args) {
  if (args.lambdas.empty()) {
    throw std::runtime_error("at least one lambda is required");
  }
  PggConfig game = args.game.to_config();
  InfoCost cost;
  {
    GroundCostFlags defaults;
    cost = build_cost(args.cost, defaults, kDefaultKlStarEpsilon,
                      game.action_count());
  }
  PenaltyConfig penalty;
  penalty.cost = cost;
  penalty.prior = PriorSpec::parse(args.prior);
  penalty.schedule = args.schedule == "fixed" ? PriorSchedule::kFixed
                                              : PriorSchedule::kPreviousPolicy;
  if (penalty.prior.kind == PriorKind::kHistorical) {
    throw std::runtime_error("sweep priors must be uniform or dirac");
  }
  ExecMode mode = parse_exec_mode(args.exec);

  const std::size_t cells = args.lambdas.size() * args.seeds.size();
  std::vector<SelfplayResult> results(cells);
  std::vector<std::string> errors(cells);

  auto run_cell = [&](std::size_t index) {
    const std::size_t li = index / args.seeds.size();
    const std::size_t si = index % args.seeds.size();
    SelfplayConfig config;
    config.game = game;
    config.penalty = penalty;
    config.penalty.lambda = args.lambdas[li];
    config.seed = args.seeds[si];
    try {
      results[index] = pgg_selfplay(config);
    } catch (const std::exception& err) {
      errors[index] = err.what();
    }
  };

  if (mode == ExecMode::kParallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long long index = 0; index < static_cast<long long>(cells); ++index) {
      run_cell(static_cast<std::size_t>(index));
    }
  } else {
    for (std::size_t index = 0; index < cells; ++index) {
      run_cell(index);
    }
  }
  for (const std::string& err : errors) {
    if (!err.empty()) {
      throw std::runtime_error(err);
    }
  }

  std::string text = "lambda,seed,costKind,prior,round,meanContribution,"
                     "infoCost,penalizedObjective\n";
  for (std::size_t li = 0; li < args.lambdas.size(); ++li) {
    for (std::size_t si = 0; si < args.seeds.size(); ++si) {
      const SelfplayResult& result = results[li * args.seeds.size() + si];
      for (const SelfplayRound& round : result.rounds) {
        text += format_double(args.lambdas[li]);
        text += ',';
        text += std::to_string(args.seeds[si]);
        text += ',';
        text += cost.str();
        text += ',';
        text += penalty.prior.str();
        text += ',';
        text += std::to_string(round.round);
        text += ',';
        text += format_double(round.expected_contribution);
        text += ',';
        text += format_double(round.info_cost);
        text += ',';
        text += format_double(round.penalized_objective);
        text += '\n';
      }
    }
  }

  fs::create_directories(args.out_dir);
  write_file(fs::path(args.out_dir) / "sweep.csv", text);
}

std::vector<double> load_utilities(const std::string& path) {
  std::string text = read_file(path);
  std::vector<double> utilities;
  for (const std::string& line : split(text, '\n')) {
    for (const std::string& field : split(line, ',')) {
      std::string token = trim(field);
      if (!token.empty()) {
        utilities.push_back(parse_double(token));
      }
    }
  }
  if (utilities.empty()) {
    throw std::runtime_error("no utilities found in " + path);
  }
  return utilities;
}

void run_best_response(const BestResponseArgs& args) {
  std::vector<double> utilities = args.utilities;
  if (!args.utilities_file.empty()) {
    utilities = load_utilities(args.utilities_file);
  }
  const int size = static_cast<int>(utilities.size());
  if (size < 1) {
    throw std::runtime_error("at least one utility is required");
  }
  ActionSpace space(size);

  ActionDistribution prior = ActionDistribution::uniform(space);
  if (!args.prior_file.empty()) {
    prior = ActionDistribution::from_json(read_file(args.prior_file));
    if (prior.space().size != size) {
      throw std::runtime_error("prior size does not match utility count");
    }
  } else {
    PriorSpec spec = PriorSpec::parse(args.prior);
    prior = make_prior(spec, space, args.history);
  }

  InfoCost cost =
      build_cost(args.cost, args.ground, args.kl_star_epsilon, size);
  BestResponse response =
      regularized_best_response(utilities, prior, cost, args.lambda);

  std::string text;
  if (args.format == "csv") {
    text = "action,mass\n";
    for (int i = 0; i < size; ++i) {
      text += std::to_string(i);
      text += ',';
      text += format_double(response.policy.mass()[i]);
      text += '\n';
    }
  } else {
    nlohmann::ordered_json doc;
    doc["policy"] =
        nlohmann::ordered_json::parse(response.policy.to_json());
    doc["objective"] = response.objective;
    doc["infoCost"] = metric_value_json(response.info_cost);
    doc["optimumExcluded"] = response.optimum_excluded;
    text = doc.dump(2) + "\n";
  }

  if (args.out_file.empty()) {
    std::cout << text;
  } else {
    fs::path out(args.out_file);
    if (out.has_parent_path()) {
      fs::create_directories(out.parent_path());
    }
    write_file(out, text);
  }
}

std::string strip_csv_header(const std::string& text) {
  std::size_t eol = text.find('\n');
  return eol == std::string::npos ? std::string() : text.substr(eol + 1);
}

void run_simulate(const SimulateArgs& args) {
  PggConfig game = args.game.to_config();
  Rng base(args.seed);

  std::string episodes_csv;
  std::string rounds_csv;
  const bool selfplay = args.selfplay;
  if (selfplay) {
    rounds_csv =
        "episode,round,expectedContribution,infoCost,penalizedObjective,"
        "realizedMean\n";
  }

  for (int episode = 1; episode <= args.episodes; ++episode) {
    // Forked per episode so episode k is reproducible in isolation.
    std::uint64_t child = base.fork(static_cast<std::uint64_t>(episode)).next_u64();
    PggHistory history{game};
    if (selfplay) {
      SelfplayConfig config;
      config.game = game;
      config.penalty.lambda = args.lambda;
      config.penalty.cost = build_cost(args.cost, args.ground,
                                       args.kl_star_epsilon, game.action_count());
      config.penalty.prior = PriorSpec::parse(args.prior);
      config.penalty.schedule = args.schedule == "fixed"
                                    ? PriorSchedule::kFixed
                                    : PriorSchedule::kPreviousPolicy;
      config.observation = args.observation == "groupTotal"
                               ? ObservationMode::kGroupTotal
                               : ObservationMode::kIndividual;
      config.seed = child;
      SelfplayResult result = pgg_selfplay(config);
      history = result.history;
      history.episode = episode;
      for (const SelfplayRound& round : result.rounds) {
        rounds_csv += std::to_string(episode);
        rounds_csv += ',';
        rounds_csv += std::to_string(round.round);
        rounds_csv += ',';
        rounds_csv += format_double(round.expected_contribution);
        rounds_csv += ',';
        rounds_csv += format_double(round.info_cost);
        rounds_csv += ',';
        rounds_csv += format_double(round.penalized_objective);
        rounds_csv += ',';
        rounds_csv += format_double(round.realized_mean);
        rounds_csv += '\n';
      }
    } else {
      ActionDistribution policy =
          make_prior(PriorSpec::parse(args.policy_spec), game.action_space());
      std::vector<ActionDistribution> policies(game.group_size, policy);
      history = pgg_episode(policies, game, child, episode);
    }
    std::string csv = history.to_csv();
    episodes_csv += episode == 1 ? csv : strip_csv_header(csv);
  }

  fs::create_directories(args.out_dir);
  fs::path out(args.out_dir);
  write_file(out / "episodes.csv", episodes_csv);
  if (selfplay) {
    write_file(out / "selfplay_rounds.csv", rounds_csv);
  }
}

void run_synth(const SynthArgs& args) {
  ContributionPanel panel =
      synth_panel(SynthSpec::parse(args.generator), args.subjects, args.rounds,
                  args.seed, args.endowment);
  fs::create_directories(args.out_dir);
  write_file(fs::path(args.out_dir) / "panel.csv", panel.to_csv());
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"bounded-rational decision toolkit for repeated public-goods play"};
  app.require_subcommand(1);
  // Let app-level options (--config, --dump-config) appear after the
  // subcommand name as well.
  app.fallthrough();
  app.set_config("--config", "", "Read options from an INI/TOML file");
  std::string dump_config;
  app.add_option("--dump-config", dump_config,
                 "Write the effective configuration to this file and continue");

  MetricsArgs metrics;
  SweepArgs sweep;
  BestResponseArgs best;
  SimulateArgs simulate;
  SynthArgs synth;

  // metrics ----------------------------------------------------------------
  CLI::App* m = app.add_subcommand(
      "metrics", "Divergence-from-prior table and change statistics");
  {
    CLI::Option_group* source =
        m->add_option_group("source", "Exactly one data source");
    source->add_option("--panel", metrics.panel_path,
                       "Panel CSV with header subject,group,round,contribution");
    source->add_option("--synth", metrics.synth_spec,
                       "Synthetic generator spec")
        ->check(spec_validator("GENERATOR", probe_synth));
    source->require_option(1);
    m->add_option("--subjects", metrics.subjects,
                  "Synthetic subject count")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    m->add_option("--rounds", metrics.rounds, "Synthetic round count")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    m->add_option("--seed", metrics.seed, "Generator seed")
        ->capture_default_str();
    m->add_option("--endowment", metrics.endowment,
                  "Tokens per round; actions are 0..endowment")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    m->add_option("--subject", metrics.subject,
                  "Restrict to one subject id (default: pooled)")
        ->check(CLI::NonNegativeNumber);
    m->add_option("--klstar-eps", metrics.kl_star_epsilon,
                  "Support floor for the smoothed divergence")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    metrics.ground.attach(m);
    m->add_flag("--take-root", metrics.take_root,
                "Report transport cost to the power 1/order");
    m->add_option("--optimal-index", metrics.optimal_index,
                  "Action index for the point-mass prior")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    m->add_option("--threshold", metrics.threshold,
                  "Absolute change below which a step counts as sticky")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    m->add_option("--out", metrics.out_dir, "Output directory")->required();
    m->add_option("--format", metrics.format, "Report format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    m->add_flag("--svg", metrics.svg, "Also write SVG charts");
  }

  // sweep ------------------------------------------------------------------
  CLI::App* s = app.add_subcommand(
      "sweep", "Self-play trajectories over a lambda/seed grid");
  {
    s->add_option("--lambda", sweep.lambdas, "Penalty weights")
        ->required()
        ->delimiter(',')
        ->check(CLI::NonNegativeNumber);
    s->add_option("--seeds", sweep.seeds, "Episode seeds")
        ->delimiter(',')
        ->capture_default_str();
    s->add_option("--cost", sweep.cost, "Information cost spec")
        ->check(spec_validator("COST", probe_cost))
        ->capture_default_str();
    s->add_option("--prior", sweep.prior, "Round-1 prior spec")
        ->check(spec_validator("PRIOR", probe_prior))
        ->capture_default_str();
    s->add_option("--schedule", sweep.schedule, "Prior schedule across rounds")
        ->check(CLI::IsMember({"fixed", "previousPolicy"}))
        ->capture_default_str();
    s->add_option("--exec", sweep.exec, "Grid execution mode")
        ->check(CLI::IsMember({"serial", "parallel"}))
        ->capture_default_str();
    sweep.game.attach(s);
    s->add_option("--out", sweep.out_dir, "Output directory")->required();
  }

  // bestresponse -------------------------------------------------------------
  CLI::App* b = app.add_subcommand(
      "bestresponse", "Penalized best response for a single utility vector");
  {
    CLI::Option_group* source =
        b->add_option_group("utilities", "Exactly one utility source");
    source->add_option("--utilities", best.utilities,
                       "Utility per action, comma separated")
        ->delimiter(',');
    source->add_option("--utilities-file", best.utilities_file,
                       "File with one utility per line or comma separated");
    source->require_option(1);
    b->add_option("--prior", best.prior, "Prior spec")
        ->check(spec_validator("PRIOR", probe_prior))
        ->capture_default_str();
    b->add_option("--prior-file", best.prior_file,
                  "JSON distribution overriding --prior");
    b->add_option("--history", best.history,
                  "Observed actions for the historical prior")
        ->delimiter(',');
    b->add_option("--cost", best.cost, "Information cost spec")
        ->check(spec_validator("COST", probe_cost))
        ->capture_default_str();
    b->add_option("--lambda", best.lambda, "Penalty weight")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    best.ground.attach(b);
    b->add_option("--klstar-eps", best.kl_star_epsilon,
                  "Support floor for the smoothed divergence")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    b->add_option("--format", best.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    b->add_option("--out", best.out_file,
                  "Output file (default: standard output)");
  }

  // simulate -----------------------------------------------------------------
  CLI::App* sim = app.add_subcommand(
      "simulate", "Run public-goods episodes with fixed or self-play policies");
  {
    simulate.game.attach(sim);
    sim->add_option("--seed", simulate.seed, "Base seed, forked per episode")
        ->capture_default_str();
    sim->add_option("--episodes", simulate.episodes, "Episode count")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    CLI::Option_group* mode =
        sim->add_option_group("mode", "Exactly one of fixed policy or self-play");
    mode->add_option("--policy", simulate.policy_spec,
                     "Fixed policy spec for every seat")
        ->check(spec_validator("PRIOR", probe_prior));
    mode->add_flag("--selfplay", simulate.selfplay,
                   "Penalized best-response agents in every seat");
    mode->require_option(1);
    sim->add_option("--cost", simulate.cost, "Self-play information cost spec")
        ->check(spec_validator("COST", probe_cost))
        ->capture_default_str();
    sim->add_option("--prior", simulate.prior, "Self-play round-1 prior")
        ->check(spec_validator("PRIOR", probe_prior))
        ->capture_default_str();
    sim->add_option("--schedule", simulate.schedule,
                    "Self-play prior schedule")
        ->check(CLI::IsMember({"fixed", "previousPolicy"}))
        ->capture_default_str();
    sim->add_option("--lambda", simulate.lambda, "Self-play penalty weight")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    sim->add_option("--klstar-eps", simulate.kl_star_epsilon,
                    "Support floor for the smoothed divergence")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    simulate.ground.attach(sim);
    sim->add_option("--observation", simulate.observation,
                    "What each agent sees between rounds")
        ->check(CLI::IsMember({"individual", "groupTotal"}))
        ->capture_default_str();
    sim->add_option("--out", simulate.out_dir, "Output directory")->required();
  }

  // synth ----------------------------------------------------------------
  CLI::App* sy = app.add_subcommand(
      "synth", "Write a synthetic contribution panel");
  {
    sy->add_option("--generator", synth.generator, "Generator spec")
        ->required()
        ->check(spec_validator("GENERATOR", probe_synth));
    sy->add_option("--subjects", synth.subjects, "Subject count")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sy->add_option("--rounds", synth.rounds, "Round count")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sy->add_option("--seed", synth.seed, "Generator seed")
        ->capture_default_str();
    sy->add_option("--endowment", synth.endowment, "Tokens per round")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sy->add_option("--out", synth.out_dir, "Output directory")->required();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    int code = app.exit(err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (!dump_config.empty()) {
      fs::path path(dump_config);
      if (path.has_parent_path()) {
        fs::create_directories(path.parent_path());
      }
      write_file(path, app.config_to_str(false, false));
    }
    if (app.got_subcommand(m)) {
      run_metrics(metrics);
    } else if (app.got_subcommand(s)) {
      run_sweep(sweep);
    } else if (app.got_subcommand(b)) {
      run_best_response(best);
    } else if (app.got_subcommand(sim)) {
      run_simulate(simulate);
    } else if (app.got_subcommand(sy)) {
      run_synth(synth);
    }
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace wbrl
