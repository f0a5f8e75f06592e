// Copyright 2026 The sclego Authors
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
//
// sclego command line tool.
//
// Subcommands:
//   metrics    collateral comparison table from price series, redemption
//              costs, jurisdiction compliance, and an inflation config
//   score      upstream/downstream risk report from assessments and holder
//              snapshots
//   simulate   peg trajectories and a terminal-deviation summary from a
//              scenario file and a seed list
//   incidents  root-cause histogram from an incident dataset
//
// Every command is a pure function of (input files, flags, seeds): reruns
// write byte-identical files. Exit codes: 0 success, 2 invalid input or
// configuration, 3 numeric failure at runtime.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sclego/sclego.hpp"

namespace fs = std::filesystem;

namespace {

std::vector<std::string> parse_format_list(const std::string& list) {
  std::vector<std::string> formats;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    if (token != "json" && token != "csv" && token != "md") {
      throw sclego::ConfigError("unknown format '" + token +
                                "'; valid formats: json csv md");
    }
    for (const auto& f : formats) {
      if (f == token) {
        token.clear();
        return;
      }
    }
    formats.push_back(token);
    token.clear();
  };
  for (char c : list) {
    if (c == ',') flush();
    else token += c;
  }
  flush();
  if (formats.empty()) throw sclego::ConfigError("empty format list");
  return formats;
}

void emit(const fs::path& out_dir, const std::string& stem,
          const std::vector<std::string>& formats,
          const std::string& json_text, const std::string& csv_text,
          const std::string& md_text) {
  for (const auto& format : formats) {
    const fs::path path = out_dir / (stem + "." + format);
    if (format == "json") sclego::write_file(path, json_text);
    else if (format == "csv") sclego::write_file(path, csv_text);
    else sclego::write_file(path, md_text);
    std::cout << "wrote " << path.string() << "\n";
  }
}

void echo_warnings(const std::vector<std::string>& warnings) {
  for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
}

sclego::RunConfig load_run_config(const std::string& config_path) {
  if (config_path.empty()) return sclego::RunConfig{};
  return sclego::parse_run_config(sclego::read_file(config_path));
}

std::string sanitize_stem(const std::string& name) {
  std::string stem;
  for (char c : name) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                    (c >= '0' && c <= '9') || c == '_' || c == '-';
    stem += ok ? c : '_';
  }
  return stem;
}

int run_metrics(const fs::path& out_dir,
                const std::vector<std::string>& formats,
                const std::vector<std::string>& price_paths,
                const std::string& redemption_path,
                const std::string& jurisdictions_path,
                const std::string& inflation_path) {
  std::vector<sclego::PriceSeries> series;
  for (const auto& path : price_paths) {
    series.push_back(sclego::parse_price_csv(sclego::read_file(path)));
  }
  const auto costs =
      sclego::parse_redemption_costs(sclego::read_file(redemption_path));
  const auto jurisdictions =
      sclego::parse_jurisdictions(sclego::read_file(jurisdictions_path));
  const auto metrics_config =
      sclego::parse_metrics_config(sclego::read_file(inflation_path));

  const auto table = sclego::build_comparison(
      series, costs, metrics_config.inflation_by_asset(), jurisdictions,
      metrics_config.return_mode, metrics_config.best_mark_tolerance);
  echo_warnings(table.warnings);
  emit(out_dir, "comparison", formats, sclego::write_comparison_json(table),
       sclego::write_comparison_csv(table),
       sclego::write_comparison_md(table));
  return 0;
}

int run_score(const fs::path& out_dir, const std::vector<std::string>& formats,
              const sclego::RunConfig& run_config, double scale,
              const std::string& assessments_path,
              const std::string& snapshots_dir) {
  const auto assessments =
      sclego::parse_assessments(sclego::read_file(assessments_path));

  std::map<std::string, sclego::HolderSnapshot> snapshots;
  if (!snapshots_dir.empty()) {
    if (!fs::is_directory(snapshots_dir)) {
      throw sclego::InputError("snapshot directory not found: " +
                               snapshots_dir);
    }
    std::vector<fs::path> paths;
    for (const auto& entry : fs::directory_iterator(snapshots_dir)) {
      if (entry.is_regular_file() && entry.path().extension() == ".csv") {
        paths.push_back(entry.path());
      }
    }
    std::sort(paths.begin(), paths.end());
    for (const auto& path : paths) {
      auto snapshot =
          sclego::parse_holder_snapshot(sclego::read_file(path));
      if (snapshots.count(snapshot.symbol)) {
        throw sclego::InputError("duplicate snapshot for symbol " +
                                 snapshot.symbol + " in " + path.string());
      }
      snapshots.emplace(snapshot.symbol, std::move(snapshot));
    }
  }

  sclego::WeightScheme scheme = run_config.scheme;
  scheme.scale *= scale;
  sclego::validate(scheme);

  const auto objects = sclego::default_impact_objects();
  const auto report = sclego::build_risk_report(
      assessments, snapshots, objects, scheme, run_config.archetype_threshold);
  echo_warnings(report.warnings);
  emit(out_dir, "report", formats, sclego::write_report_json(report),
       sclego::write_report_csv(report), sclego::write_report_md(report));
  return 0;
}

int run_simulate(const fs::path& out_dir, const std::string& scenario_path,
                 const std::string& seeds_list,
                 const std::string& seeds_file) {
  const auto scenario =
      sclego::parse_scenario(sclego::read_file(scenario_path));
  if (!seeds_list.empty() && !seeds_file.empty()) {
    throw sclego::ConfigError("--seeds and --seeds-file are exclusive");
  }

  std::vector<std::uint64_t> seeds;
  if (!seeds_list.empty()) {
    std::string token;
    auto flush = [&] {
      if (token.empty()) return;
      seeds.push_back(sclego::parse_uint64_strict(token, "seed list"));
      token.clear();
    };
    for (char c : seeds_list) {
      if (c == ',') flush();
      else token += c;
    }
    flush();
  } else if (!seeds_file.empty()) {
    for (const auto& line :
         sclego::split_lines(sclego::read_file(seeds_file))) {
      if (line.empty()) continue;
      seeds.push_back(sclego::parse_uint64_strict(line, "seeds file"));
    }
  }
  if (seeds.empty()) seeds.push_back(scenario.config.seed);

  const std::string stem = sanitize_stem(scenario.name);
  std::vector<sclego::Trajectory> runs;
  for (std::uint64_t seed : seeds) {
    sclego::ScenarioConfig config = scenario.config;
    config.seed = seed;
    runs.push_back(
        sclego::simulate(config, scenario.controllers, scenario.initial));
    const auto& run = runs.back();
    const fs::path traj_path =
        out_dir / (stem + "_seed" + std::to_string(seed) + ".csv");
    sclego::write_file(traj_path, sclego::write_trajectory_csv(run));
    std::cout << "wrote " << traj_path.string() << "\n";
    const fs::path events_path =
        out_dir / (stem + "_seed" + std::to_string(seed) + "_events.csv");
    sclego::write_file(events_path, sclego::write_supply_events_csv(run));
    std::cout << "wrote " << events_path.string() << "\n";
  }

  const auto summary = sclego::summarize_runs(
      scenario.name, scenario.config.peg_target, runs);
  const fs::path summary_path = out_dir / (stem + "_summary.json");
  sclego::write_file(summary_path, sclego::write_summary_json(summary));
  std::cout << "wrote " << summary_path.string() << "\n";
  return 0;
}

int run_incidents(const fs::path& out_dir,
                  const std::vector<std::string>& formats,
                  const std::string& incidents_path) {
  const auto incidents =
      sclego::parse_incidents(sclego::read_file(incidents_path));
  const auto histogram = sclego::cause_histogram(incidents);
  emit(out_dir, "histogram", formats, sclego::write_histogram_json(histogram),
       sclego::write_histogram_csv(histogram),
       sclego::write_histogram_md(histogram));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stablecoin collateral, risk scoring, and peg simulation"};
  app.require_subcommand(1);

  std::string out_dir_flag = ".";
  std::string format_flag = "json,csv,md";
  std::string config_flag;
  app.add_option("--out", out_dir_flag, "output directory")
      ->capture_default_str();
  app.add_option("--format", format_flag,
                 "comma-separated list of output formats (json,csv,md)")
      ->capture_default_str();
  app.add_option("--config", config_flag,
                 "run config JSON (weights, thresholds, rubric tiers)")
      ->envname("SCLEGO_CONFIG");

  auto* metrics_cmd =
      app.add_subcommand("metrics", "collateral comparison table");
  metrics_cmd->fallthrough();
  std::vector<std::string> price_paths;
  std::string redemption_path, jurisdictions_path, inflation_path;
  metrics_cmd->add_option("--prices", price_paths, "price series CSV files")
      ->required()
      ->expected(-1);
  metrics_cmd
      ->add_option("--redemption", redemption_path, "redemption costs CSV")
      ->required();
  metrics_cmd
      ->add_option("--jurisdictions", jurisdictions_path,
                   "jurisdiction compliance CSV")
      ->required();
  metrics_cmd
      ->add_option("--inflation", inflation_path,
                   "metrics config JSON (inflation, nominal returns)")
      ->required();

  auto* score_cmd = app.add_subcommand("score", "stablecoin risk report");
  score_cmd->fallthrough();
  std::string assessments_path, snapshots_dir;
  double scale = 1.0;
  score_cmd->add_option("--assessments", assessments_path, "assessments CSV")
      ->required();
  score_cmd->add_option("--snapshots", snapshots_dir,
                        "directory of holder snapshot CSV files");
  score_cmd
      ->add_option("--scale", scale, "extra multiplier on the weight scale")
      ->capture_default_str();

  auto* simulate_cmd = app.add_subcommand("simulate", "peg trajectories");
  simulate_cmd->fallthrough();
  std::string scenario_path, seeds_list, seeds_file;
  simulate_cmd->add_option("--scenario", scenario_path, "scenario JSON")
      ->required();
  simulate_cmd->add_option("--seeds", seeds_list,
                           "comma-separated seed list (default: scenario seed)");
  simulate_cmd->add_option("--seeds-file", seeds_file,
                           "file with one seed per line");

  auto* incidents_cmd =
      app.add_subcommand("incidents", "incident root-cause histogram");
  incidents_cmd->fallthrough();
  std::string incidents_path;
  incidents_cmd->add_option("--incidents", incidents_path, "incident CSV")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const auto formats = parse_format_list(format_flag);
    const fs::path out_dir(out_dir_flag);
    fs::create_directories(out_dir);

    if (*metrics_cmd) {
      return run_metrics(out_dir, formats, price_paths, redemption_path,
                         jurisdictions_path, inflation_path);
    }
    if (*score_cmd) {
      return run_score(out_dir, formats, load_run_config(config_flag), scale,
                       assessments_path, snapshots_dir);
    }
    if (*simulate_cmd) {
      return run_simulate(out_dir, scenario_path, seeds_list, seeds_file);
    }
    return run_incidents(out_dir, formats, incidents_path);
  } catch (const sclego::NumericError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const sclego::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
