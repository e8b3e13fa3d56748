// Command line front end: run a sweep, print thresholds at one t, or validate
// a configuration.
//
// Exit codes: 0 success, 1 configuration or input error, 2 per-t failure.

#include <CLI11.hpp>

#include <iostream>

#include "dtrs/app/config.hpp"
#include "dtrs/app/dataset.hpp"
#include "dtrs/app/output.hpp"
#include "dtrs/app/sweep.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kConfigError = 1;
constexpr int kTimePointFailure = 2;

using namespace dtrs;
using namespace dtrs::app;

Sweep load(const std::string& config_path) {
  RunConfig config = load_config(config_path);
  InformationSystem table = load_dataset(config.dataset_path, config.decision_attribute, config.positive_value);
  return Sweep(std::move(config), std::move(table));
}

int cmd_run(const std::string& config_path, const std::string& out_dir, bool strict) {
  Sweep sweep = [&] {
    RunConfig config = load_config(config_path);
    if (strict) config.strict_ordering = true;
    InformationSystem table = load_dataset(config.dataset_path, config.decision_attribute, config.positive_value);
    return Sweep(std::move(config), std::move(table));
  }();
  const auto rows = sweep.run();
  emit_outputs(rows, sweep.config(), sweep.table(), out_dir);
  std::size_t bad = 0;
  for (const auto& row : rows) bad += row.status != RowStatus::Ok;
  std::cout << "wrote " << rows.size() << " time points to " << out_dir;
  if (bad != 0) std::cout << " (" << bad << " degenerate or violating)";
  std::cout << '\n';
  return kOk;
}

int cmd_thresholds(const std::string& config_path, double t) {
  Sweep sweep = load(config_path);
  const SweepRow row = sweep.evaluate(t);
  nlohmann::json j = row_to_json(row);
  j["loss_family"] = to_string(sweep.config().family);
  j["mode"] = to_string(sweep.config().mode);
  std::cout << j.dump(2) << '\n';
  return row.status == RowStatus::Ok ? kOk : kTimePointFailure;
}

int cmd_validate(const std::string& config_path) {
  Sweep sweep = load(config_path);
  const auto points = sweep.config().grid.points();
  const OrderingMode ordering = required_ordering(sweep.config().family, sweep.config().mode);
  bool ok = true;
  for (double t : {points.front(), points.back()}) {
    try {
      if (auto bad = validate_ordering(sweep.config().matrix, t, ordering)) {
        std::cout << "ordering violation: " << bad->message() << '\n';
        ok = false;
      }
    } catch (const Error& e) {
      std::cout << "t=" << format_number(t) << ": " << e.what() << '\n';
      ok = false;
    }
    if (points.size() == 1) break;
  }
  std::cout << "objects: " << sweep.table().size() << ", blocks: " << sweep.blocks().blocks.size()
            << ", grid points: " << points.size() << '\n';
  std::cout << (ok ? "config ok" : "config invalid") << '\n';
  return ok ? kOk : kConfigError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Time-dependent three-way decision thresholds"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  bool strict = false;
  double t = 0.0;

  auto* run = app.add_subcommand("run", "Sweep the time grid and write thresholds.csv, regions.csv, summary.txt");
  run->add_option("--config", config_path, "JSON run configuration")->required();
  run->add_option("--out", out_dir, "Output directory")->required();
  run->add_flag("--strict", strict, "Fail on the first degenerate or ordering-violating time point");

  auto* thresholds = app.add_subcommand("thresholds", "Print the thresholds at one time point as JSON");
  thresholds->add_option("--config", config_path, "JSON run configuration")->required();
  thresholds->add_option("--t", t, "Time point")->required();

  auto* validate = app.add_subcommand("validate", "Check the configuration and ordering at the grid endpoints");
  validate->add_option("--config", config_path, "JSON run configuration")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    if (*run) return cmd_run(config_path, out_dir, strict);
    if (*thresholds) return cmd_thresholds(config_path, t);
    if (*validate) return cmd_validate(config_path);
  } catch (const SweepFailure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kTimePointFailure;
  } catch (const OracleMismatch& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kTimePointFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConfigError;
  }
  return kConfigError;
}
