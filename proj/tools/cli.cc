// Copyright 2026 The trimof Authors
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

#include "cli.h"

#include <cstdio>
#include <filesystem>
#include <functional>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "trimof/config_io.h"
#include "trimof/error.h"
#include "trimof/evaluation.h"
#include "trimof/mof.h"
#include "trimof/search_trigen.h"
#include "trimof/search_trimax.h"
#include "trimof/solution.h"
#include "trimof/synthetic.h"
#include "trimof/tensor.h"

namespace trimof::cli {
namespace {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

// Bad combinations of flags and config keys; reported with exit status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string ReadText(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIoError, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteText(const fs::path& path, std::string_view text) {
  if (path.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw Error(ErrorKind::kIoError, "cannot write " + path.string());
}

json ParseJson(std::string_view text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::kParseError, what + ": " + e.what());
  }
}

std::string Number(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

std::string Short(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.4g", value);
  return buffer;
}

std::string MeanStd(const MetricSummary& s) {
  return Short(s.mean) + "±" + Short(s.stddev);
}

// The resolved settings of one invocation. It starts from the defaults, takes
// the keys of the --config document and then the flags given on the command
// line, and is what manifest.json records. Feeding a manifest back through
// --config reproduces the run.
class Settings {
 public:
  Settings(std::string command, json defaults)
      : command_(std::move(command)), doc_(std::move(defaults)) {}

  void Load(const std::string& path) {
    if (path.empty()) return;
    json file = ParseJson(ReadText(path), path);
    if (!file.is_object()) {
      throw Error(ErrorKind::kInvalidConfig, path + ": expected an object");
    }
    for (auto& [key, value] : file.items()) {
      if (key == "command") {
        if (value != command_) {
          throw UsageError(path + " is a config for '" +
                           value.dump() + "', not '" + command_ + "'");
        }
        continue;
      }
      if (!doc_.contains(key)) {
        throw Error(ErrorKind::kInvalidConfig,
                    path + ": unknown key '" + key + "'");
      }
      doc_[key] = value;
    }
  }

  template <typename T>
  void Override(const char* key, const CLI::Option* option, const T& value) {
    if (option->count() > 0) doc_[key] = value;
  }

  json& operator[](const char* key) { return doc_[key]; }

  std::string String(const char* key) const {
    const json& v = doc_.at(key);
    if (!v.is_string()) {
      throw Error(ErrorKind::kInvalidConfig,
                  std::string("'") + key + "' must be a string");
    }
    return v.get<std::string>();
  }
  std::optional<std::string> OptionalString(const char* key) const {
    if (doc_.at(key).is_null()) return std::nullopt;
    return String(key);
  }
  bool Bool(const char* key) const {
    const json& v = doc_.at(key);
    if (!v.is_boolean()) {
      throw Error(ErrorKind::kInvalidConfig,
                  std::string("'") + key + "' must be a boolean");
    }
    return v.get<bool>();
  }

  // The output directory, created on first use.
  fs::path Out() const {
    const fs::path dir(String("out"));
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw Error(ErrorKind::kIoError, "cannot create " + dir.string());
    return dir;
  }

  void WriteManifest() const {
    json manifest;
    manifest["command"] = command_;
    for (const auto& [key, value] : doc_.items()) manifest[key] = value;
    WriteText(Out() / "manifest.json", manifest.dump(2) + "\n");
  }

 private:
  std::string command_;
  json doc_;
};

// Data loading shared by ingest and mine: tensor, optional labels, optional
// min-max scaling and PAA, in that order.
json DataDefaults() {
  json d;
  d["data"] = "";
  d["labels"] = nullptr;
  d["scale"] = false;
  d["paa"] = nullptr;
  return d;
}

struct DataFlags {
  std::string data;
  std::string labels;
  bool scale = false;
  std::size_t paa = 0;
  CLI::Option* data_opt = nullptr;
  CLI::Option* labels_opt = nullptr;
  CLI::Option* scale_opt = nullptr;
  CLI::Option* paa_opt = nullptr;

  void Register(CLI::App* app) {
    data_opt = app->add_option("--data", data, "Long-form tensor CSV");
    labels_opt = app->add_option("--labels", labels, "Outcome CSV (obs,label)");
    scale_opt = app->add_flag("--scale", scale, "Min-max scale each variable");
    paa_opt = app->add_option("--paa", paa, "PAA target length");
  }
  void Apply(Settings& s) const {
    s.Override("data", data_opt, data);
    s.Override("labels", labels_opt, labels);
    s.Override("scale", scale_opt, scale);
    s.Override("paa", paa_opt, paa);
  }
};

Dataset LoadData(Settings& s) {
  const std::string path = s.String("data");
  if (path.empty()) throw UsageError("--data is required");
  Dataset dataset = LoadTensorCsv(path);
  if (auto labels = s.OptionalString("labels")) {
    dataset = dataset.WithLabels(LoadLabels(*labels, dataset));
  }
  if (s.Bool("scale")) dataset = MinMaxScale(dataset);
  const json& paa = s["paa"];
  if (!paa.is_null()) {
    if (!paa.is_number_unsigned()) {
      throw Error(ErrorKind::kInvalidConfig, "'paa' must be a positive integer");
    }
    dataset = Paa(dataset, paa.get<std::size_t>());
  }
  return dataset;
}

// ingest -------------------------------------------------------------------

struct IngestCommand {
  std::string config, out;
  CLI::Option* out_opt = nullptr;
  DataFlags data;

  void Register(CLI::App* app) {
    app->add_option("--config", config, "JSON config file");
    out_opt = app->add_option("--out", out, "Output directory");
    data.Register(app);
  }

  void Run(std::ostream& os) const {
    json defaults = DataDefaults();
    defaults["out"] = ".";
    Settings s("ingest", defaults);
    s.Load(config);
    data.Apply(s);
    s.Override("out", out_opt, out);
    const Dataset dataset = LoadData(s);
    WriteTensorCsv(dataset, s.Out() / "tensor.csv");
    if (dataset.has_labels()) WriteLabelsCsv(dataset, s.Out() / "labels.csv");
    s.WriteManifest();
    os << dataset.num_observations() << " x " << dataset.num_variables()
       << " x " << dataset.num_contexts() << "\n";
  }
};

// synth --------------------------------------------------------------------

struct SynthCommand {
  std::string config, out;
  CLI::Option* out_opt = nullptr;
  // Flag values; only the flags actually given are copied into the settings.
  PlantSpec values;
  std::string coherence, background;
  std::vector<std::pair<CLI::Option*, std::function<void(PlantSpec&)>>> flags;

  template <typename T>
  void Flag(CLI::App* app, const char* name, T PlantSpec::*field,
            const char* help) {
    CLI::Option* opt = app->add_option(name, values.*field, help);
    flags.emplace_back(opt,
                       [this, field](PlantSpec& s) { s.*field = values.*field; });
  }

  void Register(CLI::App* app) {
    app->add_option("--config", config, "JSON config file");
    out_opt = app->add_option("--out", out, "Output directory");
    Flag(app, "--n", &PlantSpec::n, "Observations");
    Flag(app, "--m", &PlantSpec::m, "Variables");
    Flag(app, "--p", &PlantSpec::p, "Contexts");
    Flag(app, "--block-i", &PlantSpec::block_i, "Planted observations");
    Flag(app, "--block-j", &PlantSpec::block_j, "Planted variables");
    Flag(app, "--block-k", &PlantSpec::block_k, "Planted contexts");
    Flag(app, "--block-value", &PlantSpec::block_value, "Planted level");
    Flag(app, "--noise", &PlantSpec::noise_sigma, "Noise sigma");
    Flag(app, "--association", &PlantSpec::label_association,
         "Target-label probability of planted rows");
    Flag(app, "--outcomes", &PlantSpec::num_outcomes, "Number of outcomes");
    Flag(app, "--seed", &PlantSpec::seed, "Random seed");
    CLI::Option* c = app->add_option("--coherence", coherence,
                                     "constant or additive");
    flags.emplace_back(c, [this](PlantSpec& s) {
      s.coherence = ParseCoherence(coherence);
    });
    CLI::Option* b = app->add_option("--background", background,
                                     "uniform or additive");
    flags.emplace_back(b, [this](PlantSpec& s) {
      s.background = ParseBackground(background);
    });
  }

  void Run(std::ostream& os) const {
    json defaults;
    defaults["out"] = ".";
    defaults["plant"] = json::parse(PlantSpecToJson(PlantSpec{}));
    Settings s("synth", defaults);
    s.Load(config);
    s.Override("out", out_opt, out);
    PlantSpec plant = PlantSpecFromJson(s["plant"].dump());
    for (const auto& [opt, apply] : flags) {
      if (opt->count() > 0) apply(plant);
    }
    s["plant"] = json::parse(PlantSpecToJson(plant));

    const PlantedDataset planted = Generate(plant);
    WriteTensorCsv(planted.dataset, s.Out() / "tensor.csv");
    WriteLabelsCsv(planted.dataset, s.Out() / "labels.csv");
    json truth;
    truth["target"] = planted.target;
    truth["tricluster"] =
        json::parse(TriclusterToJson(planted.dataset, planted.truth));
    WriteText(s.Out() / "truth.json", truth.dump(2) + "\n");
    s.WriteManifest();
    os << "planted " << planted.truth.observations.size() << " x "
       << planted.truth.variables.size() << " x "
       << planted.truth.contexts.size() << " block, target "
       << planted.target << "\n";
  }
};

// recalibrate --------------------------------------------------------------

json MofSection(const ObjectiveConfig& objective) {
  return json::parse(ObjectiveConfigToJson(objective))["mof"];
}

struct RecalibrateCommand {
  std::string config, out, mode;
  double delta = 0.0, theta = 0.0;
  std::size_t m = 0;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  CLI::Option *out_opt, *mode_opt, *delta_opt, *theta_opt, *m_opt, *seed_opt,
      *threads_opt;

  void Register(CLI::App* app) {
    app->add_option("--config", config, "JSON config file");
    out_opt = app->add_option("--out", out, "Output directory");
    mode_opt = app->add_option("--mof", mode, "add or mul");
    delta_opt = app->add_option("--delta", delta, "User quality threshold");
    theta_opt = app->add_option("--theta", theta, "Significance threshold");
    m_opt = app->add_option("--m", m, "Monte-Carlo sample size");
    seed_opt = app->add_option("--seed", seed, "Random seed");
    threads_opt = app->add_option("--threads", threads, "Worker threads");
  }

  void Run(std::ostream& os) const {
    ObjectiveConfig base;
    base.mof.mode = MofMode::kAdditive;
    json defaults;
    defaults["out"] = ".";
    defaults["delta"] = 0.01;
    defaults["seed"] = 0;
    defaults["threads"] = 1;
    defaults["mof"] = MofSection(base);
    Settings s("recalibrate", defaults);
    s.Load(config);
    s.Override("out", out_opt, out);
    s.Override("delta", delta_opt, delta);
    s.Override("seed", seed_opt, seed);
    s.Override("threads", threads_opt, threads);

    json wrapped;
    wrapped["mof"] = s["mof"];
    ObjectiveConfig objective = ObjectiveConfigFromJson(wrapped.dump(), base);
    if (mode_opt->count() > 0) objective.mof.mode = ParseMofMode(mode);
    if (theta_opt->count() > 0) objective.mof.significance.theta = theta;
    if (m_opt->count() > 0) objective.mof.sample_size = m;
    s["mof"] = MofSection(objective);

    MofConfig mof = objective.mof;
    mof.seed = s["seed"].get<std::uint64_t>();
    mof.Validate();
    if (mof.mode == MofMode::kOriginal) {
      throw Error(ErrorKind::kNoRecalibrationNeeded,
                  "the original objective uses the threshold unchanged");
    }
    const double user_delta = s["delta"].get<double>();
    if (!(user_delta > 0.0)) {
      throw Error(ErrorKind::kInvalidConfig, "delta must be positive");
    }
    const unsigned workers = s["threads"].get<unsigned>();
    const std::vector<double> sample =
        SampleMofDistribution(user_delta, mof, workers);
    const double threshold = sample[mof.PercentileRank() - 1];

    std::string csv = "mof\n";
    for (double v : sample) csv += Number(v) + "\n";
    WriteText(s.Out() / "distribution.csv", csv);
    s.WriteManifest();
    os << Number(threshold) << "\n";
  }
};

// mine ---------------------------------------------------------------------

struct MineCommand {
  std::string config, out, algo, pqc, mode;
  double delta = 0.0, lambda = 0.0, radius = 0.0, theta = 0.0;
  std::size_t n = 0, max_triclusters = 0, generations = 0, population = 0,
              m = 0;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  DataFlags data;
  CLI::Option *out_opt, *algo_opt, *pqc_opt, *mode_opt, *delta_opt,
      *lambda_opt, *radius_opt, *theta_opt, *n_opt, *max_opt, *gen_opt,
      *pop_opt, *m_opt, *seed_opt, *threads_opt;

  void Register(CLI::App* app) {
    app->add_option("--config", config, "JSON config file");
    out_opt = app->add_option("--out", out, "Output directory");
    data.Register(app);
    algo_opt = app->add_option("--algo", algo, "trimax or trigen");
    pqc_opt = app->add_option("--pqc", pqc, "msr, lsl or msl");
    mode_opt = app->add_option("--mof", mode, "none, add or mul");
    seed_opt = app->add_option("--seed", seed, "Random seed");
    threads_opt = app->add_option("--threads", threads, "Worker threads");
    radius_opt = app->add_option("--radius", radius, "Pattern radius");
    theta_opt = app->add_option("--theta", theta, "Significance threshold");
    m_opt = app->add_option("--m", m, "Recalibration sample size (trimax)");
    delta_opt = app->add_option("--delta", delta, "Quality threshold (trimax)");
    lambda_opt = app->add_option("--lambda", lambda,
                                 "Multiple-deletion factor (trimax)");
    max_opt = app->add_option("--max-triclusters", max_triclusters,
                              "Round limit (trimax)");
    n_opt = app->add_option("--n", n, "Triclusters to extract (trigen)");
    gen_opt = app->add_option("--generations", generations,
                              "Generations per round (trigen)");
    pop_opt = app->add_option("--population", population,
                              "Population size (trigen)");
  }

  void ApplyObjective(ObjectiveConfig& o) const {
    if (pqc_opt->count() > 0) o.pqc = ParseQualityMeasure(pqc);
    if (mode_opt->count() > 0) o.mof.mode = ParseMofMode(mode);
    if (radius_opt->count() > 0) o.radius = radius;
    if (theta_opt->count() > 0) o.mof.significance.theta = theta;
  }

  void Reject(std::initializer_list<CLI::Option*> options,
              const std::string& algorithm) const {
    for (CLI::Option* opt : options) {
      if (opt->count() > 0) {
        throw UsageError(opt->get_name() + " does not apply to " + algorithm);
      }
    }
  }

  void Run(std::ostream& os) const {
    json defaults = DataDefaults();
    defaults["out"] = ".";
    defaults["algo"] = "trimax";
    defaults["trimax"] = nullptr;
    defaults["trigen"] = nullptr;
    Settings s("mine", defaults);
    s.Load(config);
    data.Apply(s);
    s.Override("out", out_opt, out);
    s.Override("algo", algo_opt, algo);
    const std::string algorithm = s.String("algo");
    auto section = [&](const char* key) {
      const json& v = s[key];
      return v.is_null() ? std::string("{}") : v.dump();
    };

    const Dataset dataset = LoadData(s);
    Solution solution;
    if (algorithm == "trimax") {
      Reject({n_opt, gen_opt, pop_opt}, algorithm);
      if (!s["trigen"].is_null()) {
        throw UsageError("config holds a trigen section for a trimax run");
      }
      TrimaxConfig c = TrimaxConfigFromJson(section("trimax"));
      ApplyObjective(c.objective);
      if (delta_opt->count() > 0) c.delta = delta;
      if (lambda_opt->count() > 0) c.lambda = lambda;
      if (max_opt->count() > 0) c.max_triclusters = max_triclusters;
      if (m_opt->count() > 0) c.objective.mof.sample_size = m;
      if (seed_opt->count() > 0) c.seed = seed;
      if (threads_opt->count() > 0) c.threads = threads;
      s["trimax"] = json::parse(TrimaxConfigToJson(c));
      s["trigen"] = nullptr;
      solution = RunTrimax(dataset, c);
    } else if (algorithm == "trigen") {
      Reject({delta_opt, lambda_opt, max_opt, m_opt}, algorithm);
      if (!s["trimax"].is_null()) {
        throw UsageError("config holds a trimax section for a trigen run");
      }
      TrigenConfig c = TrigenConfigFromJson(section("trigen"));
      ApplyObjective(c.objective);
      if (n_opt->count() > 0) c.n_triclusters = n;
      if (gen_opt->count() > 0) c.generations = generations;
      if (pop_opt->count() > 0) c.population_size = population;
      if (seed_opt->count() > 0) c.seed = seed;
      if (threads_opt->count() > 0) c.threads = threads;
      s["trigen"] = json::parse(TrigenConfigToJson(c));
      s["trimax"] = nullptr;
      solution = RunTrigen(dataset, c);
    } else {
      throw UsageError("unknown algorithm '" + algorithm +
                       "' (expected trimax or trigen)");
    }
    WriteText(s.Out() / "solution.json", SolutionToJson(dataset, solution));
    s.WriteManifest();
    os << solution.triclusters.size() << " triclusters\n";
  }
};

// evaluate -----------------------------------------------------------------

struct EvaluateCommand {
  std::string config, out, a, b;
  CLI::Option *out_opt, *a_opt, *b_opt;

  void Register(CLI::App* app) {
    app->add_option("--config", config, "JSON config file");
    out_opt = app->add_option("--out", out, "Output directory");
    a_opt = app->add_option("a", a, "First Solution JSON");
    b_opt = app->add_option("b", b, "Second Solution JSON");
  }

  void Run(std::ostream& os) const {
    json defaults;
    defaults["a"] = "";
    defaults["b"] = "";
    defaults["out"] = ".";
    Settings s("evaluate", defaults);
    s.Load(config);
    s.Override("out", out_opt, out);
    s.Override("a", a_opt, a);
    s.Override("b", b_opt, b);
    if (s.String("a").empty() || s.String("b").empty()) {
      throw UsageError("evaluate needs two Solution files");
    }
    const SolutionMetrics ma = ReadSolutionMetrics(ReadText(s.String("a")));
    const SolutionMetrics mb = ReadSolutionMetrics(ReadText(s.String("b")));
    if (ma.rows.empty() || mb.rows.empty()) {
      throw Error(ErrorKind::kEmptySolution, "solution has no triclusters");
    }
    auto column = [](const SolutionMetrics& m, std::string_view name) {
      std::vector<double> values;
      for (const auto& row : m.rows) {
        for (const auto& [metric, value] : row) {
          if (metric == name) values.push_back(value);
        }
      }
      return values;
    };

    std::string csv = "metric,mean_a±std_a,mean_b±std_b,t,p\n";
    for (const char* name : MetricNames()) {
      const auto va = column(ma, name);
      const auto vb = column(mb, name);
      if (va.empty() || vb.empty()) continue;
      std::string t = "NA", p = "NA";
      try {
        const TTestResult test = WelchTTest(va, vb);
        t = Short(test.t);
        p = Short(test.p_value);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::kDegenerateSample) throw;
      }
      csv += std::string(name) + "," + MeanStd(Summarize(va)) + "," +
             MeanStd(Summarize(vb)) + "," + t + "," + p + "\n";
    }
    WriteText(s.Out() / "comparison.csv", csv);
    s.WriteManifest();
    os << csv;
  }
};

// report -------------------------------------------------------------------

struct ReportCommand {
  std::string config, out;
  std::vector<std::string> solutions;
  bool no_profiles = false;
  CLI::Option *out_opt, *solutions_opt, *profiles_opt;

  void Register(CLI::App* app) {
    app->add_option("--config", config, "JSON config file");
    out_opt = app->add_option("--out", out, "Output directory");
    solutions_opt = app->add_option("solutions", solutions,
                                    "Solution JSON files");
    profiles_opt = app->add_flag("--no-profiles", no_profiles,
                                 "Skip per-pattern profile CSVs");
  }

  static std::string ProfileCsv(const json& tricluster) {
    std::string csv = "variable,context,expectation,lower,upper\n";
    const double radius = tricluster.at("radius").get<double>();
    const json& vars = tricluster.at("J");
    const json& ctxs = tricluster.at("K");
    const json& pattern = tricluster.at("pattern");
    for (std::size_t jj = 0; jj < vars.size(); ++jj) {
      for (std::size_t kk = 0; kk < ctxs.size(); ++kk) {
        const double c = pattern.at(jj).at(kk).get<double>();
        csv += vars[jj].get<std::string>() + "," +
               ctxs[kk].get<std::string>() + "," + Number(c) + "," +
               Number(c - radius) + "," + Number(c + radius) + "\n";
      }
    }
    return csv;
  }

  void Run(std::ostream& os) const {
    json defaults;
    defaults["solutions"] = json::array();
    defaults["out"] = ".";
    defaults["profiles"] = true;
    Settings s("report", defaults);
    s.Load(config);
    s.Override("out", out_opt, out);
    s.Override("solutions", solutions_opt, solutions);
    if (profiles_opt->count() > 0) s["profiles"] = !no_profiles;
    const json& files = s["solutions"];
    if (!files.is_array() || files.empty()) {
      throw UsageError("report needs at least one Solution file");
    }

    std::string csv = "solution,algo,pqc,mof_mode,seed,triclusters,I,J,K";
    for (const char* name : MetricNames()) {
      const std::string_view n(name);
      if (n == "size_I" || n == "size_J" || n == "size_K") continue;
      csv += ",";
      csv += name;
    }
    csv += "\n";
    for (const auto& entry : files) {
      const fs::path path = entry.get<std::string>();
      // Runs usually share the file name solution.json, so the directory
      // name goes into the label too.
      const std::string parent = path.parent_path().filename().string();
      const std::string label =
          parent.empty() ? path.stem().string()
                         : parent + "_" + path.stem().string();
      const std::string text = ReadText(path);
      const SolutionMetrics metrics = ReadSolutionMetrics(text);
      const SolutionSummary summary =
          SummarizeMetricRows(metrics.rows, metrics.meta);
      auto meta = [&](const char* key) {
        auto it = summary.meta.find(key);
        return it == summary.meta.end() ? std::string() : it->second;
      };
      csv += label + "," + meta("algo") + "," + meta("pqc") +
             "," + meta("mof_mode") + "," + meta("seed") + "," +
             std::to_string(summary.num_triclusters) + "," +
             std::to_string(summary.mean_i) + "," +
             std::to_string(summary.mean_j) + "," +
             std::to_string(summary.mean_k);
      for (const char* name : MetricNames()) {
        const std::string_view n(name);
        if (n == "size_I" || n == "size_J" || n == "size_K") continue;
        const MetricSummary* m = summary.Find(name);
        csv += ",";
        if (m) csv += MeanStd(*m);
      }
      csv += "\n";

      if (s.Bool("profiles")) {
        const json doc = ParseJson(text, path.string());
        const json& triclusters = doc.at("triclusters");
        for (std::size_t t = 0; t < triclusters.size(); ++t) {
          WriteText(s.Out() / "profiles" /
                        (label + "_" + std::to_string(t) + ".csv"),
                    ProfileCsv(triclusters[t]));
        }
      }
    }
    WriteText(s.Out() / "summary.csv", csv);
    s.WriteManifest();
    os << csv;
  }
};

}  // namespace

int Execute(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Pattern-based triclustering with a multi-objective fitness",
               "trimof"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  IngestCommand ingest;
  SynthCommand synth;
  RecalibrateCommand recalibrate;
  MineCommand mine;
  EvaluateCommand evaluate;
  ReportCommand report;
  CLI::App* ingest_app =
      app.add_subcommand("ingest", "Load, scale and reduce a tensor CSV");
  CLI::App* synth_app =
      app.add_subcommand("synth", "Generate a planted-block dataset");
  CLI::App* recalibrate_app = app.add_subcommand(
      "recalibrate", "Recalibrate a quality threshold for a MOF objective");
  CLI::App* mine_app = app.add_subcommand("mine", "Search for triclusters");
  CLI::App* evaluate_app =
      app.add_subcommand("evaluate", "Compare two solutions metric by metric");
  CLI::App* report_app =
      app.add_subcommand("report", "Summarize solutions and export patterns");
  ingest.Register(ingest_app);
  synth.Register(synth_app);
  recalibrate.Register(recalibrate_app);
  mine.Register(mine_app);
  evaluate.Register(evaluate_app);
  report.Register(report_app);

  std::vector<std::string> storage;
  storage.reserve(args.size() + 1);
  storage.emplace_back("trimof");
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    err << "UsageError: " << e.what() << "\n";
    return kExitUsageError;
  }

  try {
    if (ingest_app->parsed()) ingest.Run(out);
    if (synth_app->parsed()) synth.Run(out);
    if (recalibrate_app->parsed()) recalibrate.Run(out);
    if (mine_app->parsed()) mine.Run(out);
    if (evaluate_app->parsed()) evaluate.Run(out);
    if (report_app->parsed()) report.Run(out);
  } catch (const UsageError& e) {
    err << "UsageError: " << e.what() << "\n";
    return kExitUsageError;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return kExitRuntimeError;
  } catch (const std::exception& e) {
    err << "InternalError: " << e.what() << "\n";
    return kExitRuntimeError;
  }
  return kExitOk;
}

}  // namespace trimof::cli
