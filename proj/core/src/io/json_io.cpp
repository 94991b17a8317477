#include "sigsel/io/json_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "sigsel/error.hpp"

namespace sigsel::io {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

// Runs a reader, turning nlohmann type/lookup errors into ParseError.
template <typename F>
auto guarded(const char* document, F&& read) -> decltype(read()) {
  try {
    return read();
  } catch (const nlohmann::json::exception& e) {
    parse_fail(std::string(document) + ": " + e.what());
  }
}

const json& field(const json& j, const char* key, const char* document) {
  if (!j.is_object()) parse_fail(std::string(document) + ": expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) parse_fail(std::string(document) + ": missing field '" + key + "'");
  return *it;
}

void check_schema(const json& j, const char* document) {
  const json& schema = field(j, "schema", document);
  if (!schema.is_number_integer() || schema.get<int>() != kSchemaVersion) {
    parse_fail(std::string(document) + ": unsupported schema version " + schema.dump());
  }
}

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

Level level_from(const json& j) {
  const auto level = parse_level(j.get<std::string>());
  if (!level) parse_fail("unknown workload level " + j.dump());
  return *level;
}

Scheme scheme_from(const json& j) {
  const auto scheme = parse_scheme(j.get<std::string>());
  if (!scheme) parse_fail("unknown trial scheme " + j.dump());
  return *scheme;
}

}  // namespace

json to_json(const QoSMatrix& matrix) {
  json j = json::object();
  for (const auto& [name, series] : matrix) {
    j[name] = std::vector<double>(series.values().begin(), series.values().end());
  }
  return j;
}

QoSMatrix qos_from_json(const json& j, Timestamp start_index) {
  return guarded("QoS matrix", [&] {
    if (!j.is_object()) parse_fail("QoS matrix: expected an object of attribute arrays");
    QoSMatrix m;
    for (const auto& [name, values] : j.items()) {
      m.insert(name, TimeSeries(values.get<std::vector<double>>(), start_index));
    }
    return m;
  });
}

json to_json(const IaaSSignature& signature) {
  return {{"schema", kSchemaVersion},
          {"provider_id", signature.provider_id},
          {"period", signature.period()},
          {"attributes", to_json(signature.matrix)},
          {"coverage", signature.coverage},
          {"flags", {{"flat_attributes", signature.flat_attributes}}}};
}

IaaSSignature signature_from_json(const json& j) {
  return guarded("signature", [&] {
    check_schema(j, "signature");
    IaaSSignature sig;
    sig.provider_id = field(j, "provider_id", "signature").get<std::string>();
    sig.matrix = qos_from_json(field(j, "attributes", "signature"), 1);
    const auto period = field(j, "period", "signature").get<std::size_t>();
    if (sig.matrix.length() != period) parse_fail("signature: attribute arrays do not match 'period'");
    if (j.contains("coverage")) sig.coverage = j.at("coverage").get<std::vector<std::size_t>>();
    if (j.contains("flags") && j.at("flags").contains("flat_attributes")) {
      sig.flat_attributes = j.at("flags").at("flat_attributes").get<std::set<std::string>>();
    }
    return sig;
  });
}

json to_json(const TrialObservation& observation) {
  return {{"schema", kSchemaVersion},
          {"user_id", observation.user_id},
          {"window", {observation.window.start, observation.window.end}},
          {"observed", to_json(observation.observed)}};
}

TrialObservation observation_from_json(const json& j) {
  return guarded("observation", [&] {
    check_schema(j, "observation");
    TrialObservation obs;
    obs.user_id = field(j, "user_id", "observation").get<std::string>();
    const auto window = field(j, "window", "observation").get<std::vector<Timestamp>>();
    if (window.size() != 2) parse_fail("observation: 'window' must be [start, end]");
    obs.window = {window[0], window[1]};
    obs.observed = qos_from_json(field(j, "observed", "observation"), obs.window.start);
    return obs;
  });
}

json to_json(const TrialPlan& plan) {
  json entries = json::array();
  for (const auto& e : plan.entries) {
    entries.push_back({{"vm", e.vm},
                       {"slot", e.slot},
                       {"demand", e.demand},
                       {"source_timestamp", e.source_timestamp},
                       {"level", std::string(to_string(e.level))}});
  }
  return {{"schema", kSchemaVersion},
          {"scheme", std::string(to_string(plan.scheme))},
          {"trial_length", plan.trial_length},
          {"vm_count", plan.vm_count},
          {"entries", std::move(entries)}};
}

TrialPlan plan_from_json(const json& j) {
  return guarded("trial plan", [&] {
    check_schema(j, "trial plan");
    TrialPlan plan;
    plan.scheme = scheme_from(field(j, "scheme", "trial plan"));
    plan.trial_length = field(j, "trial_length", "trial plan").get<std::size_t>();
    plan.vm_count = j.value("vm_count", std::size_t{1});
    for (const auto& e : field(j, "entries", "trial plan")) {
      TrialEntry entry;
      entry.vm = e.value("vm", std::size_t{0});
      entry.slot = field(e, "slot", "trial entry").get<std::size_t>();
      entry.demand = field(e, "demand", "trial entry").get<double>();
      entry.source_timestamp = field(e, "source_timestamp", "trial entry").get<Timestamp>();
      entry.level = level_from(field(e, "level", "trial entry"));
      plan.entries.push_back(entry);
    }
    return plan;
  });
}

json to_json(const TrialExperience& experience) {
  json streams = json::array();
  for (const auto& m : experience.observed) streams.push_back(to_json(m));
  return {{"schema", kSchemaVersion},
          {"provider_id", experience.provider_id},
          {"trial_start", experience.trial_start},
          {"observed", std::move(streams)}};
}

TrialExperience experience_from_json(const json& j, TrialPlan plan) {
  return guarded("trial experience", [&] {
    check_schema(j, "trial experience");
    TrialExperience exp;
    exp.provider_id = field(j, "provider_id", "trial experience").get<std::string>();
    exp.trial_start = field(j, "trial_start", "trial experience").get<Timestamp>();
    exp.plan = std::move(plan);
    const json& observed = field(j, "observed", "trial experience");
    if (observed.is_object()) {
      exp.observed.push_back(qos_from_json(observed, exp.trial_start));
    } else {
      for (const auto& stream : observed) exp.observed.push_back(qos_from_json(stream, exp.trial_start));
    }
    exp.validate();
    return exp;
  });
}

json to_json(const PerformancePrediction& prediction) {
  return {{"schema", kSchemaVersion},
          {"provider_id", prediction.provider_id},
          {"method", std::string(to_string(prediction.method))},
          {"start_index", prediction.predicted.start_index()},
          {"predicted", to_json(prediction.predicted)},
          {"matched_entry", prediction.matched_entry}};
}

PerformancePrediction prediction_from_json(const json& j) {
  return guarded("prediction", [&] {
    check_schema(j, "prediction");
    PerformancePrediction p;
    p.provider_id = field(j, "provider_id", "prediction").get<std::string>();
    const auto method = parse_discovery_method(field(j, "method", "prediction").get<std::string>());
    if (!method) parse_fail("prediction: unknown method " + j.at("method").dump());
    p.method = *method;
    p.predicted = qos_from_json(field(j, "predicted", "prediction"), j.value("start_index", Timestamp{1}));
    if (j.contains("matched_entry")) p.matched_entry = j.at("matched_entry").get<std::vector<std::size_t>>();
    return p;
  });
}

json to_json(const WorkloadSeries& workload) {
  return {{"capacity", workload.capacity()},
          {"start_index", workload.demands().start_index()},
          {"demands", std::vector<double>(workload.demands().values().begin(),
                                          workload.demands().values().end())}};
}

WorkloadSeries workload_from_json(const json& j) {
  return guarded("workload", [&] {
    return WorkloadSeries(TimeSeries(field(j, "demands", "workload").get<std::vector<double>>(),
                                     j.value("start_index", Timestamp{1})),
                          field(j, "capacity", "workload").get<double>());
  });
}

json to_json(const ConsumerRequest& request) {
  return {{"schema", kSchemaVersion},
          {"workload", to_json(request.workload)},
          {"required_qos", to_json(request.required_qos)}};
}

ConsumerRequest request_from_json(const json& j) {
  return guarded("request", [&] {
    check_schema(j, "request");
    ConsumerRequest r;
    r.workload = workload_from_json(field(j, "workload", "request"));
    r.required_qos = qos_from_json(field(j, "required_qos", "request"), r.workload.demands().start_index());
    r.validate();
    return r;
  });
}

json to_json(const sim::ProviderProfile& profile) {
  json base = json::object();
  for (const auto& [level, attrs] : profile.base_perf) base[std::string(to_string(level))] = attrs;
  return {{"schema", kSchemaVersion},
          {"provider_id", profile.provider_id},
          {"base_perf", std::move(base)},
          {"seasonal", to_json(profile.seasonal)},
          {"noise_std", profile.noise_std},
          {"rng_seed", profile.rng_seed}};
}

sim::ProviderProfile profile_from_json(const json& j) {
  return guarded("provider profile", [&] {
    check_schema(j, "provider profile");
    sim::ProviderProfile p;
    p.provider_id = field(j, "provider_id", "provider profile").get<std::string>();
    for (const auto& [level, attrs] : field(j, "base_perf", "provider profile").items()) {
      const auto parsed = parse_level(level);
      if (!parsed) parse_fail("provider profile: unknown level '" + level + "'");
      p.base_perf[*parsed] = attrs.get<std::map<std::string, double>>();
    }
    p.seasonal = qos_from_json(field(j, "seasonal", "provider profile"), 1);
    p.noise_std = j.value("noise_std", 0.0);
    p.rng_seed = j.value("rng_seed", std::uint64_t{0});
    p.validate();
    return p;
  });
}

json to_json(const ConfidenceReport& report) {
  return {{"provider_id", report.provider_id},
          {"per_attribute", report.per_attribute},
          {"total", report.total},
          {"passed", report.passed},
          {"skipped_attributes", report.skipped_attributes},
          {"degenerate_attributes", report.degenerate_attributes}};
}

json to_json(const RankingReport& report) {
  return {{"schema", kSchemaVersion},
          {"method", std::string(to_string(report.method))},
          {"scores", report.scores},
          {"order", report.order},
          {"flags", report.flags}};
}

json to_json(const sim::ExperimentConfig& c) {
  std::vector<std::string> schemes;
  for (const Scheme s : c.schemes) schemes.emplace_back(to_string(s));
  // `threads` is an execution knob and is left out so reports compare equal
  // across thread counts.
  return {{"horizon_days", c.horizon_days},
          {"provider_count", c.provider_count},
          {"trial_length_days", c.trial_length_days},
          {"trial_start_day", c.trial_start_day},
          {"schemes", schemes},
          {"confidence_threshold", c.confidence_threshold},
          {"seed", c.seed},
          {"eq_vm_count", c.eq_vm_count},
          {"signature_window_days", c.signature_window_days},
          {"signature_users_per_window", c.signature_users_per_window},
          {"signature_reference_level", std::string(to_string(c.signature_reference_level))},
          {"level_thresholds",
           {{"low_upper", c.level_thresholds.low_upper}, {"medium_upper", c.level_thresholds.medium_upper}}},
          {"ranking_scheme", std::string(to_string(c.ranking_scheme))},
          {"adjust_confidence_for_levels", c.adjust_confidence_for_levels},
          {"wrap_signature", c.wrap_signature},
          {"time_unit", c.time_unit}};
}

sim::ExperimentConfig config_from_json(const json& j, sim::ExperimentConfig c) {
  return guarded("experiment config", [&] {
    if (!j.is_object()) parse_fail("experiment config: expected an object");
    for (const auto& [key, value] : j.items()) {
      if (key == "horizon_days") c.horizon_days = value.get<std::size_t>();
      else if (key == "provider_count") c.provider_count = value.get<std::size_t>();
      else if (key == "trial_length_days") c.trial_length_days = value.get<std::size_t>();
      else if (key == "trial_start_day") c.trial_start_day = value.get<Timestamp>();
      else if (key == "schemes") {
        c.schemes.clear();
        for (const auto& s : value) c.schemes.push_back(scheme_from(s));
      } else if (key == "confidence_threshold") c.confidence_threshold = value.get<double>();
      else if (key == "seed") c.seed = value.get<std::uint64_t>();
      else if (key == "eq_vm_count") c.eq_vm_count = value.get<std::size_t>();
      else if (key == "signature_window_days") c.signature_window_days = value.get<std::size_t>();
      else if (key == "signature_users_per_window") c.signature_users_per_window = value.get<std::size_t>();
      else if (key == "signature_reference_level") c.signature_reference_level = level_from(value);
      else if (key == "level_thresholds") {
        c.level_thresholds.low_upper = value.value("low_upper", c.level_thresholds.low_upper);
        c.level_thresholds.medium_upper = value.value("medium_upper", c.level_thresholds.medium_upper);
      } else if (key == "ranking_scheme") c.ranking_scheme = scheme_from(value);
      else if (key == "adjust_confidence_for_levels") c.adjust_confidence_for_levels = value.get<bool>();
      else if (key == "wrap_signature") c.wrap_signature = value.get<bool>();
      else if (key == "time_unit") c.time_unit = value.get<std::string>();
      else if (key == "threads") c.threads = value.get<std::size_t>();
      else parse_fail("experiment config: unknown key '" + key + "'");
    }
    return c;
  });
}

json to_json(const sim::ExperimentReport& report) {
  json cells = json::array();
  for (const auto& c : report.cells) {
    cells.push_back({{"provider_id", c.provider_id},
                     {"scheme", std::string(to_string(c.scheme))},
                     {"confidence", c.confidence ? to_json(*c.confidence) : json(nullptr)},
                     {"discarded", c.discarded},
                     {"spd_nrmse", optional_number(c.spd_nrmse)},
                     {"lpd_nrmse", optional_number(c.lpd_nrmse)},
                     {"spd_nrmse_by_attribute", c.spd_nrmse_by_attribute},
                     {"lpd_nrmse_by_attribute", c.lpd_nrmse_by_attribute},
                     {"error", c.error ? json(*c.error) : json(nullptr)}});
  }
  json rankings = json::object();
  for (const auto& [method, r] : report.rankings) {
    json rj = to_json(r);
    rj.erase("schema");
    rankings[std::string(to_string(method))] = std::move(rj);
  }
  json taus = json::object();
  for (const auto& [method, tau] : report.kendall_vs_expected) {
    taus[std::string(to_string(method))] = optional_number(tau);
  }
  return {{"schema", kSchemaVersion},
          {"config", to_json(report.config)},
          {"providers", report.providers},
          {"cells", std::move(cells)},
          {"rankings", std::move(rankings)},
          {"kendall_tau_vs_expected", std::move(taus)}};
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open '" + path.string() + "'");
  try {
    return json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    parse_fail(path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::Io, "cannot write '" + path.string() + "'");
  out << j.dump(2) << "\n";
  if (!out) throw Error(ErrorKind::Io, "failed writing '" + path.string() + "'");
}

}  // namespace sigsel::io
