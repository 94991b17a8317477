#include "sigsel/cli.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <memory>
#include <optional>
#include <ostream>

#include "sigsel/discovery.hpp"
#include "sigsel/error.hpp"
#include "sigsel/io/json_io.hpp"
#include "sigsel/io/report_csv.hpp"
#include "sigsel/json_config.hpp"
#include "sigsel/ranking.hpp"
#include "sigsel/signature.hpp"
#include "sigsel/sim/experiment.hpp"
#include "sigsel/sim/scenario.hpp"
#include "sigsel/sim/workload.hpp"
#include "sigsel/trial.hpp"

namespace sigsel::cli {

namespace fs = std::filesystem;
using io::json;

namespace {

// Failure in loading or checking a command's own configuration; always exit 1.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr const char* kObservationSchema = R"(
Observation file: {"schema": 1, "user_id": "u1", "window": [start, end],
                   "observed": {"<attr>": [one value per day in window]}}
  (a file may also hold a JSON array of such objects)
Signature file:   {"schema": 1, "provider_id": "...", "period": T,
                   "attributes": {"<attr>": [T values]}, "coverage": [T counts],
                   "flags": {"flat_attributes": [...]}})";

constexpr const char* kPlanSchema = R"(
Workload CSV: header "t,demand", one row per timestamp with consecutive t,
              "#" comments, "# capacity: <value>" sets the capacity.
Plan file:    {"schema": 1, "scheme": "FG|RG|MG|EQ", "trial_length": k, "vm_count": v,
               "entries": [{"vm": 0, "slot": 1, "demand": d, "source_timestamp": t,
                            "level": "LOW|MEDIUM|HIGH"}]})";

constexpr const char* kDiscoverSchema = R"(
Experience file: {"schema": 1, "provider_id": "...", "trial_start": s,
                  "observed": [{"<attr>": [k values]} one object per trial VM]}
Prediction file: {"schema": 1, "provider_id": "...", "method": "SPD|LPD", "start_index": 1,
                  "predicted": {"<attr>": [values]}, "matched_entry": [entry index per timestamp]})";

constexpr const char* kRankSchema = R"(
Request file: {"schema": 1, "workload": {"capacity": c, "start_index": 1, "demands": [...]},
               "required_qos": {"<attr>": [one value per timestamp]}}
Ranking file: {"schema": 1, "method": "SPD|LPD", "scores": {"<provider>": score},
               "order": [best first], "flags": {"<provider>": [constant attributes]}})";

constexpr const char* kExperimentSchema = R"(
Config file: {"schema": 1,
  "experiment": {"horizon_days": 360, "provider_count": 7, "trial_length_days": 30,
                 "trial_start_day": 151, "schemes": ["FG","RG","MG","EQ"],
                 "confidence_threshold": 0.7, "seed": 1, "eq_vm_count": 3,
                 "signature_window_days": 30, "signature_users_per_window": 3,
                 "signature_reference_level": "MEDIUM", "ranking_scheme": "FG",
                 "level_thresholds": {"low_upper": 0.333, "medium_upper": 0.667},
                 "adjust_confidence_for_levels": true, "wrap_signature": false,
                 "time_unit": "day", "threads": 0},
  "scenario": {"private_count": 5, "public_count": 2, "private_noise": 0.01,
               "public_noise": 0.05, "private_annual_amplitude": 0.2,
               "public_annual_amplitude": 0.3, "weekly_amplitude": 0.1,
               "attributes": ["cpu_throughput", "net_throughput"]},
  "workload": {"kind": "zipf", "distinct": 200, "exponent": 1.1, "capacity": 100}
           or {"kind": "csv", "path": "trace.csv", "capacity": 100,
               "samples_per_step": 96, "expand": true},
  "profiles": ["p1.json", ...],   (optional; replaces synthetic providers)
  "request": "request.json"}      (optional; replaces the synthetic request)
All sections are optional; relative paths resolve against the config file.
Outputs in --out-dir: report.json, rankings.csv, nrmse.csv.)";

std::ofstream open_output(const fs::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::Io, "cannot write '" + path.string() + "'");
  return out;
}

std::vector<TrialObservation> load_observations(const std::vector<std::string>& files) {
  std::vector<TrialObservation> out;
  for (const auto& file : files) {
    const json j = io::read_json_file(file);
    if (j.is_array()) {
      for (const auto& item : j) out.push_back(io::observation_from_json(item));
    } else {
      out.push_back(io::observation_from_json(j));
    }
  }
  return out;
}

// --- signature ---------------------------------------------------------------

struct SignatureArgs {
  std::vector<std::string> observations;
  std::size_t period = 0;
  std::string provider_id = "provider";
  std::string out;
};

void add_signature(CLI::App& app, SignatureArgs& a, std::function<void()>& action) {
  auto* sub = app.add_subcommand("signature", "Build a provider signature from past trial observations");
  sub->add_option("--observations", a.observations, "Observation JSON files")->required()->check(CLI::ExistingFile);
  sub->add_option("--period", a.period, "Reference period length T")->required()->check(CLI::PositiveNumber);
  sub->add_option("--provider-id", a.provider_id, "Provider id stored in the signature")->capture_default_str();
  sub->add_option("--out", a.out, "Signature JSON output path")->required();
  sub->footer(kObservationSchema);
  sub->callback([&] {
    action = [&] {
      const auto observations = load_observations(a.observations);
      const IaaSSignature sig = generate_signature(a.provider_id, observations, a.period);
      io::write_json_file(a.out, io::to_json(sig));
    };
  });
}

// --- plan ---------------------------------------------------------------------

struct WorkloadArgs {
  std::string path;
  std::optional<double> capacity;
  std::size_t samples_per_step = 1;
  std::optional<std::size_t> expand;
  double low_threshold = LevelThresholds{}.low_upper;
  double medium_threshold = LevelThresholds{}.medium_upper;

  WorkloadSeries load() const {
    sim::WorkloadCsvOptions options;
    options.capacity = capacity;
    options.samples_per_step = samples_per_step;
    options.expand_to = expand;
    return sim::ingest_workload_csv(path, options);
  }
  LevelThresholds thresholds() const { return {low_threshold, medium_threshold}; }
};

void add_workload_flags(CLI::App* sub, WorkloadArgs& w) {
  sub->add_option("--workload", w.path, "Workload CSV")->required()->check(CLI::ExistingFile);
  sub->add_option("--capacity", w.capacity, "Capacity override (else '# capacity:' comment)")
      ->check(CLI::PositiveNumber);
  sub->add_option("--samples-per-step", w.samples_per_step, "CSV rows averaged into one timestamp")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  sub->add_option("--expand", w.expand, "Cyclically tile the trace to this many timestamps")
      ->check(CLI::PositiveNumber);
  sub->add_option("--low-threshold", w.low_threshold, "Capacity fraction where MEDIUM starts")
      ->capture_default_str();
  sub->add_option("--medium-threshold", w.medium_threshold, "Capacity fraction where HIGH starts")
      ->capture_default_str();
}

struct PlanArgs {
  WorkloadArgs workload;
  std::string scheme;
  std::size_t trial_days = 0;
  std::size_t vms = 3;
  std::string out;
};

void add_plan(CLI::App& app, PlanArgs& a, std::function<void()>& action) {
  auto* sub = app.add_subcommand("plan", "Select trial workloads from a long-term workload");
  add_workload_flags(sub, a.workload);
  sub->add_option("--scheme", a.scheme, "Significance criterion")
      ->required()
      ->check(CLI::IsMember({"FG", "RG", "MG", "EQ"}));
  sub->add_option("--trial-days", a.trial_days, "Trial length k")->required()->check(CLI::PositiveNumber);
  sub->add_option("--vms", a.vms, "Trial VMs (EQ only)")->capture_default_str()->check(CLI::PositiveNumber);
  sub->add_option("--out", a.out, "Plan JSON output path")->required();
  sub->footer(kPlanSchema);
  sub->callback([&] {
    action = [&] {
      const WorkloadSeries workload = a.workload.load();
      const Scheme scheme = *parse_scheme(a.scheme);
      const TrialPlan plan =
          scheme == Scheme::EQ
              ? select_trial_workloads_eq(workload, a.trial_days, a.vms, a.workload.thresholds())
              : select_trial_workloads(workload, a.trial_days, scheme, a.workload.thresholds());
      io::write_json_file(a.out, io::to_json(plan));
    };
  });
}

// --- discover -----------------------------------------------------------------

struct DiscoverArgs {
  WorkloadArgs workload;
  std::string plan, experience, signature, method, out;
  bool wrap_signature = false;
};

void add_discover(CLI::App& app, DiscoverArgs& a, std::function<void()>& action) {
  auto* sub = app.add_subcommand("discover", "Predict long-term QoS from a trial experience");
  add_workload_flags(sub, a.workload);
  sub->add_option("--plan", a.plan, "Trial plan JSON")->required()->check(CLI::ExistingFile);
  sub->add_option("--experience", a.experience, "Trial experience JSON")->required()->check(CLI::ExistingFile);
  sub->add_option("--signature", a.signature, "Provider signature JSON (needed for spd)")->check(CLI::ExistingFile);
  sub->add_option("--method", a.method, "Discovery method")
      ->required()
      ->check(CLI::IsMember({"spd", "lpd", "SPD", "LPD"}));
  sub->add_flag("--wrap-signature", a.wrap_signature, "Wrap horizons longer than the signature period");
  sub->add_option("--out", a.out, "Prediction JSON output path")->required();
  sub->footer(kDiscoverSchema);
  sub->callback([&] {
    const DiscoveryMethod method = *parse_discovery_method(a.method);
    if (method == DiscoveryMethod::SPD && a.signature.empty()) {
      throw CLI::RequiredError("--signature (required with --method spd)");
    }
    action = [&, method] {
      const WorkloadSeries workload = a.workload.load();
      const TrialPlan plan = io::plan_from_json(io::read_json_file(a.plan));
      const TrialExperience exp = io::experience_from_json(io::read_json_file(a.experience), plan);
      PerformancePrediction prediction;
      if (method == DiscoveryMethod::SPD) {
        const IaaSSignature sig = io::signature_from_json(io::read_json_file(a.signature));
        prediction = spd_discover(workload, exp, sig, SpdOptions{a.wrap_signature});
      } else {
        prediction = lpd_discover(workload, exp);
      }
      io::write_json_file(a.out, io::to_json(prediction));
    };
  });
}

// --- rank ---------------------------------------------------------------------

struct RankArgs {
  std::string request;
  std::vector<std::string> predictions;
  std::string out;
  std::string table;
};

void add_rank(CLI::App& app, RankArgs& a, std::function<void()>& action) {
  auto* sub = app.add_subcommand("rank", "Rank providers by distance between requested and predicted QoS");
  sub->add_option("--request", a.request, "Consumer request JSON")->required()->check(CLI::ExistingFile);
  sub->add_option("--predictions", a.predictions, "Prediction JSON files, one per provider")
      ->required()
      ->check(CLI::ExistingFile);
  sub->add_option("--out", a.out, "Ranking JSON output path")->required();
  sub->add_option("--table", a.table, "Optional CSV table output path");
  sub->footer(kRankSchema);
  sub->callback([&] {
    action = [&] {
      const ConsumerRequest request = io::request_from_json(io::read_json_file(a.request));
      std::vector<PerformancePrediction> predictions;
      for (const auto& file : a.predictions) {
        predictions.push_back(io::prediction_from_json(io::read_json_file(file)));
      }
      const RankingReport report = rank_providers(request, predictions);
      io::write_json_file(a.out, io::to_json(report));
      if (!a.table.empty()) {
        auto table = open_output(a.table);
        io::write_ranking_csv(table, report);
      }
    };
  });
}

// --- experiment ---------------------------------------------------------------

struct ExperimentArgs {
  std::string config;
  std::string out_dir;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> threads;
};

struct ExperimentSetup {
  sim::ExperimentConfig config;
  ConsumerRequest request;
  std::vector<sim::ProviderProfile> profiles;
};

sim::ScenarioSpec scenario_from_json(const json& j, const sim::ExperimentConfig& config) {
  sim::ScenarioSpec spec;
  spec.horizon = config.horizon_days;
  spec.public_count = std::min<std::size_t>(2, config.provider_count);
  spec.private_count = config.provider_count - spec.public_count;
  for (const auto& [key, value] : j.items()) {
    if (key == "private_count") spec.private_count = value.get<std::size_t>();
    else if (key == "public_count") spec.public_count = value.get<std::size_t>();
    else if (key == "private_noise") spec.private_noise = value.get<double>();
    else if (key == "public_noise") spec.public_noise = value.get<double>();
    else if (key == "private_annual_amplitude") spec.private_annual_amplitude = value.get<double>();
    else if (key == "public_annual_amplitude") spec.public_annual_amplitude = value.get<double>();
    else if (key == "weekly_amplitude") spec.weekly_amplitude = value.get<double>();
    else if (key == "attributes") spec.attributes = value.get<std::vector<std::string>>();
    else throw UsageError("scenario: unknown key '" + key + "'");
  }
  if (spec.private_count + spec.public_count != config.provider_count) {
    throw UsageError("scenario provider counts do not add up to experiment.provider_count");
  }
  return spec;
}

WorkloadSeries workload_from_config(const json& j, const sim::ExperimentConfig& config, const fs::path& base) {
  const std::string kind = j.value("kind", std::string("zipf"));
  if (kind == "zipf") {
    sim::ZipfWorkloadSpec spec;
    spec.horizon = config.horizon_days;
    for (const auto& [key, value] : j.items()) {
      if (key == "kind") continue;
      if (key == "distinct") spec.distinct = value.get<std::size_t>();
      else if (key == "exponent") spec.exponent = value.get<double>();
      else if (key == "capacity") spec.capacity = value.get<double>();
      else throw UsageError("workload: unknown key '" + key + "'");
    }
    return sim::zipf_workload(spec, sim::derive_seed(config.seed, {sim::kWorkloadStream}));
  }
  if (kind == "csv") {
    sim::WorkloadCsvOptions options;
    fs::path path;
    for (const auto& [key, value] : j.items()) {
      if (key == "kind") continue;
      if (key == "path") path = value.get<std::string>();
      else if (key == "capacity") options.capacity = value.get<double>();
      else if (key == "samples_per_step") options.samples_per_step = value.get<std::size_t>();
      else if (key == "expand") {
        if (value.get<bool>()) options.expand_to = config.horizon_days;
      } else throw UsageError("workload: unknown key '" + key + "'");
    }
    if (path.empty()) throw UsageError("workload: csv kind needs a 'path'");
    return sim::ingest_workload_csv(path.is_absolute() ? path : base / path, options);
  }
  throw UsageError("workload: unknown kind '" + kind + "'");
}

ExperimentSetup load_experiment(const ExperimentArgs& a) {
  const fs::path config_path = a.config;
  const fs::path base = config_path.parent_path();
  ExperimentSetup setup;
  const json doc = io::read_json_file(config_path);
  if (!doc.is_object()) throw UsageError("experiment config must be a JSON object");
  try {
    for (const auto& [key, _] : doc.items()) {
      if (key != "schema" && key != "experiment" && key != "scenario" && key != "workload" &&
          key != "profiles" && key != "request") {
        throw UsageError("experiment config: unknown section '" + key + "'");
      }
    }
    if (doc.contains("schema") && doc.at("schema") != io::kSchemaVersion) {
      throw UsageError("experiment config: unsupported schema version");
    }
    setup.config = io::config_from_json(doc.value("experiment", json::object()));
    if (a.seed) setup.config.seed = *a.seed;
    if (a.threads) setup.config.threads = *a.threads;
    setup.config.validate();

    if (doc.contains("profiles")) {
      for (const auto& p : doc.at("profiles")) {
        const fs::path path = p.get<std::string>();
        setup.profiles.push_back(io::profile_from_json(io::read_json_file(path.is_absolute() ? path : base / path)));
      }
    } else {
      const auto spec = scenario_from_json(doc.value("scenario", json::object()), setup.config);
      setup.profiles = sim::synthetic_providers(spec, sim::derive_seed(setup.config.seed, {sim::kProviderStream}));
    }

    if (doc.contains("request")) {
      const fs::path path = doc.at("request").get<std::string>();
      setup.request = io::request_from_json(io::read_json_file(path.is_absolute() ? path : base / path));
    } else {
      const auto spec = scenario_from_json(doc.value("scenario", json::object()), setup.config);
      const WorkloadSeries workload = workload_from_config(doc.value("workload", json::object()), setup.config, base);
      setup.request = sim::synthetic_request(workload, spec, sim::derive_seed(setup.config.seed, {sim::kRequestStream}),
                                             setup.config.level_thresholds);
    }
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("experiment config: ") + e.what());
  } catch (const Error& e) {
    if (e.is_input_error()) throw;
    throw UsageError(e.what());
  }
  return setup;
}

void add_experiment(CLI::App& app, ExperimentArgs& a, std::function<void()>& action, std::ostream& out) {
  auto* sub = app.add_subcommand("experiment", "Run the full synthetic evaluation and write reports");
  sub->add_option("--config", a.config, "Experiment config JSON")->required()->check(CLI::ExistingFile);
  sub->add_option("--out-dir", a.out_dir, "Directory for report.json, rankings.csv, nrmse.csv")->required();
  sub->add_option("--seed", a.seed, "Override experiment.seed");
  sub->add_option("--threads", a.threads, "Worker threads (0 = hardware); results do not depend on it");
  sub->footer(kExperimentSchema);
  sub->callback([&] {
    action = [&] {
      const ExperimentSetup setup = load_experiment(a);
      const sim::ExperimentReport report = sim::run_experiment(setup.config, setup.request, setup.profiles);
      std::error_code ec;
      fs::create_directories(a.out_dir, ec);
      if (ec) throw Error(ErrorKind::Io, "cannot create '" + a.out_dir + "': " + ec.message());
      const fs::path dir = a.out_dir;
      io::write_json_file(dir / "report.json", io::to_json(report));
      auto rankings = open_output(dir / "rankings.csv");
      io::write_ranking_table(rankings, report);
      auto nrmse = open_output(dir / "nrmse.csv");
      io::write_nrmse_table(nrmse, report);
      out << "seed: " << setup.config.seed << "\n";
    };
  });
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Signature-based IaaS provider selection from free-trial observations", "sigsel"};
  app.require_subcommand(1);
  app.config_formatter(std::make_shared<JsonConfig>());
  app.set_config("--config-file", "", "JSON file of flag defaults ({\"<subcommand>\": {\"<flag>\": value}})");
  app.allow_config_extras(CLI::config_extras_mode::error);

  std::function<void()> action;
  SignatureArgs signature_args;
  PlanArgs plan_args;
  DiscoverArgs discover_args;
  RankArgs rank_args;
  ExperimentArgs experiment_args;
  add_signature(app, signature_args, action);
  add_plan(app, plan_args, action);
  add_discover(app, discover_args, action);
  add_rank(app, rank_args, action);
  add_experiment(app, experiment_args, action, out);

  std::vector<std::string> argv_storage{"sigsel"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (action) action();
    return kExitOk;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.is_input_error() ? kExitUsage : kExitDomain;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace sigsel::cli
