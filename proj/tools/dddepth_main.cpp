// Copyright 2026 The dddepth authors.
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

#include <CLI11.hpp>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ddd/csv.hpp"
#include "ddd/discrepancy.hpp"
#include "ddd/error.hpp"
#include "ddd/hypothesis.hpp"
#include "ddd/parallel.hpp"
#include "ddd/result_document.hpp"
#include "ddd/simulation.hpp"
#include "ddd/standardize.hpp"
#include "ddd/svg.hpp"

namespace {

using namespace ddd;

struct CommonOptions {
  std::optional<std::uint64_t> seed;
  std::string method = "auto";
  std::size_t directions = 5000;
  std::size_t bootstrap = 200;
  std::size_t ref_size = 0;  // 0 -> per-command default
  bool standardize_flag = false;
  std::string eval_grid;  // empty -> per-test default
  double alpha = 0.05;
  std::string out;
  std::string format = "json";
  unsigned threads = 0;
  std::size_t eval_count = 2000;
};

void add_common(CLI::App* cmd, CommonOptions& opt) {
  cmd->add_option("--seed", opt.seed, "RNG seed; omitted -> entropy seed, echoed in the output");
  cmd->add_option("--method", opt.method, "Depth engine: auto|exact|approx")
      ->check(CLI::IsMember({"auto", "exact", "approx"}));
  cmd->add_option("--directions", opt.directions, "Direction count for the approx engine");
  cmd->add_option("--bootstrap", opt.bootstrap, "Bootstrap replicates B");
  cmd->add_option("--ref-size", opt.ref_size,
                  "Reference sample size for the null depth (0 = default: max(10n, 5000) "
                  "for ddd plots, 2000 for tests)");
  cmd->add_flag("--standardize", opt.standardize_flag,
                "Estimate-and-whiten before testing against the standard null");
  cmd->add_option("--eval-grid", opt.eval_grid,
                  "KS evaluation grid: sphere|pooled (default: sphere for gof, pooled "
                  "for two-sample)")
      ->check(CLI::IsMember({"sphere", "pooled"}));
  cmd->add_option("--alpha", opt.alpha, "Significance level for simulate");
  cmd->add_option("--out", opt.out, "Write the result here instead of stdout");
  cmd->add_option("--format", opt.format, "Output format: json|csv")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--threads", opt.threads, "Worker thread cap (0 = hardware)");
  cmd->add_option("--eval-count", opt.eval_count, "Evaluation points M for the statistics");
}

std::uint64_t resolve_seed(const CommonOptions& opt) {
  if (opt.seed) return *opt.seed;
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

DepthConfig depth_config(const CommonOptions& opt) {
  DepthConfig cfg;
  cfg.method = opt.method == "exact"
                   ? DepthMethod::kExact
                   : (opt.method == "approx" ? DepthMethod::kApprox : DepthMethod::kAuto);
  cfg.directions = opt.directions;
  return cfg;
}

std::optional<EvalGrid> eval_grid(const CommonOptions& opt) {
  if (opt.eval_grid.empty()) return std::nullopt;
  return opt.eval_grid == "pooled" ? EvalGrid::kPooled : EvalGrid::kSphere;
}

void emit(const std::string& text, const CommonOptions& opt) {
  if (opt.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(opt.out, std::ios::binary);
  if (!f) throw Error("cannot write '" + opt.out + "'");
  f << text;
}

std::string command_echo(int argc, char** argv) {
  std::string echo;
  for (int i = 0; i < argc; ++i) {
    if (i) echo += ' ';
    echo += argv[i];
  }
  return echo;
}

// --null mini-language:
//   standard-normal | t:<dof> | cauchy | laplace
//   normal:<mean.csv>:<cov.csv>
//   mixture:<w1>;<spec1>;<w2>;<spec2>...   (specs must not be mixtures)
ReferenceDistribution parse_null_spec(const std::string& text, std::size_t d);

ReferenceDistribution parse_simple_null(const std::string& text, std::size_t d) {
  if (text == "standard-normal") return ReferenceDistribution::standard_normal(d);
  if (text == "cauchy") {
    auto di = static_cast<Eigen::Index>(d);
    return ReferenceDistribution::cauchy(Eigen::VectorXd::Zero(di),
                                         Eigen::MatrixXd::Identity(di, di));
  }
  if (text == "laplace") return ReferenceDistribution::standard_laplace(d);
  if (text.rfind("t:", 0) == 0) {
    double dof = std::stod(text.substr(2));
    auto di = static_cast<Eigen::Index>(d);
    return ReferenceDistribution::student_t(Eigen::VectorXd::Zero(di),
                                            Eigen::MatrixXd::Identity(di, di), dof);
  }
  if (text.rfind("normal:", 0) == 0) {
    std::string rest = text.substr(7);
    std::size_t colon = rest.find(':');
    if (colon == std::string::npos) {
      throw ParameterError("normal null needs 'normal:<mean.csv>:<cov.csv>'");
    }
    DataMatrix mean_rows = read_csv(rest.substr(0, colon), false);
    DataMatrix cov_rows = read_csv(rest.substr(colon + 1), false);
    Eigen::VectorXd mean(static_cast<Eigen::Index>(mean_rows.cols()));
    for (std::size_t j = 0; j < mean_rows.cols(); ++j) {
      mean(static_cast<Eigen::Index>(j)) = mean_rows(0, j);
    }
    Eigen::MatrixXd cov(cov_rows.rows(), cov_rows.cols());
    for (std::size_t i = 0; i < cov_rows.rows(); ++i) {
      for (std::size_t j = 0; j < cov_rows.cols(); ++j) {
        cov(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = cov_rows(i, j);
      }
    }
    return ReferenceDistribution::normal(std::move(mean), std::move(cov));
  }
  throw ParameterError("unknown null spec '" + text + "'");
}

ReferenceDistribution parse_null_spec(const std::string& text, std::size_t d) {
  if (text.rfind("mixture:", 0) == 0) {
    std::string rest = text.substr(8);
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (start <= rest.size()) {
      std::size_t semi = rest.find(';', start);
      if (semi == std::string::npos) {
        parts.push_back(rest.substr(start));
        break;
      }
      parts.push_back(rest.substr(start, semi - start));
      start = semi + 1;
    }
    if (parts.size() < 4 || parts.size() % 2 != 0) {
      throw ParameterError("mixture null needs 'mixture:<w1>;<spec1>;<w2>;<spec2>...'");
    }
    std::vector<double> weights;
    std::vector<ReferenceDistribution> components;
    for (std::size_t i = 0; i < parts.size(); i += 2) {
      weights.push_back(std::stod(parts[i]));
      components.push_back(parse_simple_null(parts[i + 1], d));
    }
    return ReferenceDistribution::mixture(std::move(weights), std::move(components));
  }
  return parse_simple_null(text, d);
}

int run_depth(const std::string& sample_path, const std::string& point_text,
              const std::string& query_path, bool has_header, const CommonOptions& opt,
              const std::string& echo) {
  auto t0 = std::chrono::steady_clock::now();
  DataMatrix sample = read_csv(sample_path, has_header);
  std::uint64_t seed = resolve_seed(opt);

  std::vector<double> flat;
  std::size_t count = 0;
  if (!query_path.empty()) {
    DataMatrix q = read_csv(query_path, has_header);
    if (q.cols() != sample.cols()) throw ShapeError("query dimension does not match sample");
    flat = q.values();
    count = q.rows();
  } else if (!point_text.empty()) {
    std::istringstream in(point_text);
    std::string cell;
    while (std::getline(in, cell, ',')) flat.push_back(std::stod(cell));
    if (flat.size() != sample.cols()) throw ShapeError("--point dimension does not match sample");
    count = 1;
  } else {
    flat = sample.values();  // depth of each sample point by default
    count = sample.rows();
  }

  Rng rng(seed, 5);
  DepthEvaluator eval(sample.cols(), depth_config(opt), rng);
  std::vector<double> depths = eval.profile(sample, flat, count);

  ResultDocument doc;
  doc.command = echo;
  doc.seed = seed;
  doc.payload = DepthValuesPayload{std::move(depths)};
  doc.timing_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (opt.format == "csv") {
    std::string text = "index,depth\n";
    const auto& values = std::get<DepthValuesPayload>(doc.payload).depths;
    char buf[64];
    for (std::size_t i = 0; i < values.size(); ++i) {
      std::snprintf(buf, sizeof(buf), "%zu,%.17g\n", i, values[i]);
      text += buf;
    }
    emit(text, opt);
  } else {
    emit(to_json(doc), opt);
  }
  return 0;
}

int run_ddd(bool two_sample, const std::string& a_path, const std::string& b_path,
            const std::string& null_spec, bool has_header, const std::string& svg_path,
            unsigned svg_width, unsigned svg_height, const CommonOptions& opt) {
  DataMatrix a = read_csv(a_path, has_header);
  std::uint64_t seed = resolve_seed(opt);
  Rng rng(seed, 0);

  std::vector<DddRecord> records;
  if (two_sample) {
    DataMatrix b = read_csv(b_path, has_header);
    records = ddd_twosample(a, b, depth_config(opt), rng);
  } else {
    DataMatrix data = a;
    if (opt.standardize_flag) data = standardize(a).first;
    auto f0 = parse_null_spec(null_spec, data.cols());
    std::size_t n_ref = opt.ref_size ? opt.ref_size : default_reference_size(data.rows());
    records = ddd_gof(data, f0, n_ref, depth_config(opt), rng);
  }

  emit(write_ddd_csv(records), opt);
  if (!svg_path.empty()) {
    std::ofstream f(svg_path, std::ios::binary);
    if (!f) throw Error("cannot write '" + svg_path + "'");
    f << write_ddd_svg(records, svg_width, svg_height);
  }
  return 0;
}

int run_gof(const std::string& data_path, const std::string& null_spec,
            const std::string& statistic, bool has_header, const CommonOptions& opt,
            const std::string& echo) {
  auto t0 = std::chrono::steady_clock::now();
  DataMatrix x = read_csv(data_path, has_header);
  std::uint64_t seed = resolve_seed(opt);

  GofSpec spec{parse_null_spec(null_spec, x.cols())};
  spec.statistic = statistic == "cvm" ? StatisticKind::kCvM : StatisticKind::kKS;
  spec.eval_count = opt.eval_count;
  spec.bootstrap = opt.bootstrap;
  spec.ref_size = opt.ref_size ? opt.ref_size : 2000;
  spec.depth = depth_config(opt);
  if (auto grid = eval_grid(opt)) spec.grid = *grid;
  spec.plugin_standardize = opt.standardize_flag;
  spec.seed = seed;

  TestResult result = gof_test(x, spec);
  ResultDocument doc;
  doc.command = echo;
  doc.seed = seed;
  doc.payload = result;
  doc.timing_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (opt.format == "csv") {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "statistic,value,p_value,bootstrap,seed\n%s,%.17g,%.17g,%zu,%llu\n",
                  to_string(result.statistic).c_str(), result.statistic_value, result.p_value,
                  result.bootstrap, static_cast<unsigned long long>(seed));
    emit(buf, opt);
  } else {
    emit(to_json(doc), opt);
  }
  return 0;
}

int run_twosample(const std::string& x_path, const std::string& y_path,
                  const std::string& statistic, bool has_header, const CommonOptions& opt,
                  const std::string& echo) {
  auto t0 = std::chrono::steady_clock::now();
  DataMatrix x = read_csv(x_path, has_header);
  DataMatrix y = read_csv(y_path, has_header);
  std::uint64_t seed = resolve_seed(opt);

  TwoSampleSpec spec;
  spec.statistic = statistic == "cvm" ? StatisticKind::kCvM : StatisticKind::kKS;
  spec.eval_count = opt.eval_count;
  spec.bootstrap = opt.bootstrap;
  spec.depth = depth_config(opt);
  if (auto grid = eval_grid(opt)) spec.grid = *grid;
  spec.seed = seed;

  TestResult result = twosample_test(x, y, spec);
  ResultDocument doc;
  doc.command = echo;
  doc.seed = seed;
  doc.payload = result;
  doc.timing_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (opt.format == "csv") {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "statistic,value,p_value,bootstrap,seed\n%s,%.17g,%.17g,%zu,%llu\n",
                  to_string(result.statistic).c_str(), result.statistic_value, result.p_value,
                  result.bootstrap, static_cast<unsigned long long>(seed));
    emit(buf, opt);
  } else {
    emit(to_json(doc), opt);
  }
  return 0;
}

struct SimulateOptions {
  std::string model = "A1";
  double mu = 0.0;
  double gamma = 0.0;
  std::string gamma_grid;
  std::size_t d = 2;
  std::size_t n = 100;
  std::size_t m = 0;
  std::size_t reps = 200;
  std::string statistic = "both";
  std::string config_path;
  std::string h_spec = "laplace";
  std::string f0_spec = "standard-normal";
};

ExperimentSpec build_experiment(const SimulateOptions& sim, const CommonOptions& opt,
                                std::uint64_t seed) {
  ExperimentSpec spec;
  spec.d = sim.d;
  spec.n = sim.n;
  spec.m = sim.m;
  spec.alpha = opt.alpha;
  spec.reps = sim.reps;
  spec.bootstrap = opt.bootstrap;
  spec.eval_count = opt.eval_count;
  spec.ref_size = opt.ref_size ? opt.ref_size : 2000;
  spec.depth = depth_config(opt);
  spec.grid = eval_grid(opt);
  spec.seed = seed;
  if (sim.statistic == "ks") {
    spec.statistics = {StatisticKind::kKS};
  } else if (sim.statistic == "cvm") {
    spec.statistics = {StatisticKind::kCvM};
  }

  if (sim.model == "B") {
    spec.model = ShiftModel{sim.mu};
  } else if (sim.model == "contiguous-gof") {
    spec.model = ContiguousGofModel{sim.gamma, parse_null_spec(sim.f0_spec, sim.d),
                                    parse_null_spec(sim.h_spec, sim.d)};
  } else if (sim.model == "contiguous-ts") {
    spec.model = ContiguousTwoSampleModel{sim.gamma, parse_null_spec(sim.f0_spec, sim.d),
                                          parse_null_spec(sim.h_spec, sim.d)};
  } else if (sim.model.size() == 2 && sim.model[0] == 'A' && sim.model[1] >= '1' &&
             sim.model[1] <= '6') {
    spec.model = static_cast<GofModel>(sim.model[1] - '1');
  } else {
    throw ParameterError("unknown model '" + sim.model +
                         "' (A1..A6, B, contiguous-gof, contiguous-ts)");
  }
  return spec;
}

void apply_config_file(SimulateOptions& sim, CommonOptions& opt) {
  if (sim.config_path.empty()) return;
  std::ifstream f(sim.config_path);
  if (!f) throw Error("cannot open '" + sim.config_path + "'");
  nlohmann::json j = nlohmann::json::parse(f);
  if (j.contains("model")) sim.model = j["model"].get<std::string>();
  if (j.contains("mu")) sim.mu = j["mu"].get<double>();
  if (j.contains("gamma")) sim.gamma = j["gamma"].get<double>();
  if (j.contains("gamma_grid")) sim.gamma_grid = j["gamma_grid"].get<std::string>();
  if (j.contains("d")) sim.d = j["d"].get<std::size_t>();
  if (j.contains("n")) sim.n = j["n"].get<std::size_t>();
  if (j.contains("m")) sim.m = j["m"].get<std::size_t>();
  if (j.contains("reps")) sim.reps = j["reps"].get<std::size_t>();
  if (j.contains("statistic")) sim.statistic = j["statistic"].get<std::string>();
  if (j.contains("alpha")) opt.alpha = j["alpha"].get<double>();
  if (j.contains("bootstrap")) opt.bootstrap = j["bootstrap"].get<std::size_t>();
  if (j.contains("eval_count")) opt.eval_count = j["eval_count"].get<std::size_t>();
  if (j.contains("ref_size")) opt.ref_size = j["ref_size"].get<std::size_t>();
  if (j.contains("eval_grid")) opt.eval_grid = j["eval_grid"].get<std::string>();
  if (j.contains("seed")) opt.seed = j["seed"].get<std::uint64_t>();
}

int run_simulate(SimulateOptions sim, CommonOptions opt, const std::string& echo) {
  auto t0 = std::chrono::steady_clock::now();
  apply_config_file(sim, opt);
  std::uint64_t seed = resolve_seed(opt);

  std::vector<PowerEstimate> cells;
  if (!sim.gamma_grid.empty()) {
    std::vector<double> grid;
    std::istringstream in(sim.gamma_grid);
    std::string cell;
    while (std::getline(in, cell, ',')) grid.push_back(std::stod(cell));
    ExperimentSpec base = build_experiment(sim, opt, seed);
    auto f0 = parse_null_spec(sim.f0_spec, sim.d);
    auto h = parse_null_spec(sim.h_spec, sim.d);
    std::optional<std::size_t> m;
    if (sim.m > 0) m = sim.m;
    auto curve = run_local_power_curve(grid, f0, h, base, m);
    for (auto& [gamma, points] : curve) {
      for (auto& p : points) cells.push_back(std::move(p));
    }
  } else {
    ExperimentSpec spec = build_experiment(sim, opt, seed);
    bool two_sample = std::holds_alternative<ShiftModel>(spec.model) ||
                      std::holds_alternative<ContiguousTwoSampleModel>(spec.model);
    cells = two_sample ? run_twosample_cell(spec) : run_gof_cell(spec);
  }

  if (opt.format == "csv") {
    emit(render_table_csv(cells), opt);
  } else {
    ResultDocument doc;
    doc.command = echo;
    doc.seed = seed;
    doc.payload = cells;
    doc.timing_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    emit(to_json(doc), opt);
  }
  std::cerr << render_table(cells);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Half-space depth, data-depth discrepancy plots, and depth-based "
               "goodness-of-fit / two-sample tests"};
  app.require_subcommand(1);
  std::string echo = command_echo(argc, argv);

  // depth
  auto* depth_cmd = app.add_subcommand("depth", "Half-space depth of query points");
  std::string depth_sample, depth_point, depth_query;
  bool depth_header = false;
  depth_cmd->add_option("sample", depth_sample, "Sample CSV")->required();
  depth_cmd->add_option("--point", depth_point, "Single query point 'x1,x2,...'");
  depth_cmd->add_option("--query", depth_query, "CSV of query points");
  depth_cmd->add_flag("--header", depth_header, "Inputs carry a header row");
  CommonOptions depth_opt;
  add_common(depth_cmd, depth_opt);

  // ddd gof / ddd twosample
  auto* ddd_cmd = app.add_subcommand("ddd", "Data-depth discrepancy plot data");
  ddd_cmd->require_subcommand(1);
  auto* ddd_gof_cmd = ddd_cmd->add_subcommand("gof", "Discrepancy against a null distribution");
  std::string ddd_data, ddd_null = "standard-normal", ddd_svg;
  unsigned svg_w = 640, svg_h = 480;
  bool ddd_header = false;
  ddd_gof_cmd->add_option("data", ddd_data, "Data CSV")->required();
  ddd_gof_cmd->add_option("--null", ddd_null, "Null distribution spec");
  ddd_gof_cmd->add_flag("--header", ddd_header, "Input carries a header row");
  ddd_gof_cmd->add_option("--svg", ddd_svg, "Also write an SVG plot here");
  ddd_gof_cmd->add_option("--svg-width", svg_w, "SVG width");
  ddd_gof_cmd->add_option("--svg-height", svg_h, "SVG height");
  CommonOptions ddd_gof_opt;
  add_common(ddd_gof_cmd, ddd_gof_opt);

  auto* ddd_ts_cmd = ddd_cmd->add_subcommand("twosample", "Discrepancy between two samples");
  std::string ts_a, ts_b, ts_svg;
  unsigned ts_svg_w = 640, ts_svg_h = 480;
  bool ts_header = false;
  ddd_ts_cmd->add_option("first", ts_a, "First sample CSV")->required();
  ddd_ts_cmd->add_option("second", ts_b, "Second sample CSV")->required();
  ddd_ts_cmd->add_flag("--header", ts_header, "Inputs carry a header row");
  ddd_ts_cmd->add_option("--svg", ts_svg, "Also write an SVG plot here");
  ddd_ts_cmd->add_option("--svg-width", ts_svg_w, "SVG width");
  ddd_ts_cmd->add_option("--svg-height", ts_svg_h, "SVG height");
  CommonOptions ddd_ts_opt;
  add_common(ddd_ts_cmd, ddd_ts_opt);

  // gof
  auto* gof_cmd = app.add_subcommand("gof", "Bootstrap goodness-of-fit test");
  std::string gof_data, gof_null = "standard-normal", gof_statistic = "ks";
  bool gof_header = false;
  gof_cmd->add_option("data", gof_data, "Data CSV")->required();
  gof_cmd->add_option("--null", gof_null, "Null distribution spec");
  gof_cmd->add_option("--statistic", gof_statistic, "ks|cvm")
      ->check(CLI::IsMember({"ks", "cvm"}));
  gof_cmd->add_flag("--header", gof_header, "Input carries a header row");
  CommonOptions gof_opt;
  add_common(gof_cmd, gof_opt);

  // twosample
  auto* ts_cmd = app.add_subcommand("twosample", "Bootstrap two-sample test");
  std::string ts_x, ts_y, ts_statistic = "ks";
  bool ts_test_header = false;
  ts_cmd->add_option("first", ts_x, "First sample CSV")->required();
  ts_cmd->add_option("second", ts_y, "Second sample CSV")->required();
  ts_cmd->add_option("--statistic", ts_statistic, "ks|cvm")
      ->check(CLI::IsMember({"ks", "cvm"}));
  ts_cmd->add_flag("--header", ts_test_header, "Inputs carry a header row");
  CommonOptions ts_opt;
  add_common(ts_cmd, ts_opt);

  // simulate
  auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo size/power study");
  SimulateOptions sim;
  sim_cmd->add_option("--model", sim.model, "A1..A6 | B | contiguous-gof | contiguous-ts");
  sim_cmd->add_option("--mu", sim.mu, "Shift for model B");
  sim_cmd->add_option("--gamma", sim.gamma, "Mixing rate for contiguous models");
  sim_cmd->add_option("--gamma-grid", sim.gamma_grid, "Comma list of gammas (power curve)");
  sim_cmd->add_option("--d", sim.d, "Dimension");
  sim_cmd->add_option("--n", sim.n, "First-sample size");
  sim_cmd->add_option("--m", sim.m, "Second-sample size (two-sample models)");
  sim_cmd->add_option("--reps", sim.reps, "Monte Carlo repeats");
  sim_cmd->add_option("--statistic", sim.statistic, "ks|cvm|both")
      ->check(CLI::IsMember({"ks", "cvm", "both"}));
  sim_cmd->add_option("--f0", sim.f0_spec, "Null / first distribution for contiguous models");
  sim_cmd->add_option("--h-dist", sim.h_spec, "Contamination distribution for contiguous models");
  sim_cmd->add_option("--config", sim.config_path, "JSON config file (flags override)");
  CommonOptions sim_opt;
  add_common(sim_cmd, sim_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);  // prints help or the usage error
    return code == 0 ? 0 : 2;
  }

  try {
    if (depth_cmd->parsed()) {
      set_max_threads(depth_opt.threads);
      return run_depth(depth_sample, depth_point, depth_query, depth_header, depth_opt, echo);
    }
    if (ddd_gof_cmd->parsed()) {
      set_max_threads(ddd_gof_opt.threads);
      return run_ddd(false, ddd_data, "", ddd_null, ddd_header, ddd_svg, svg_w, svg_h,
                     ddd_gof_opt);
    }
    if (ddd_ts_cmd->parsed()) {
      set_max_threads(ddd_ts_opt.threads);
      return run_ddd(true, ts_a, ts_b, "", ts_header, ts_svg, ts_svg_w, ts_svg_h, ddd_ts_opt);
    }
    if (gof_cmd->parsed()) {
      set_max_threads(gof_opt.threads);
      return run_gof(gof_data, gof_null, gof_statistic, gof_header, gof_opt, echo);
    }
    if (ts_cmd->parsed()) {
      set_max_threads(ts_opt.threads);
      return run_twosample(ts_x, ts_y, ts_statistic, ts_test_header, ts_opt, echo);
    }
    if (sim_cmd->parsed()) {
      set_max_threads(sim_opt.threads);
      return run_simulate(sim, sim_opt, echo);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
