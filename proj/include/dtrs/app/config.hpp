#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "dtrs/error.hpp"
#include "dtrs/loss_model.hpp"
#include "dtrs/thresholds.hpp"

namespace dtrs::app {

class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Closed grid start, start + step, ..., stop. The stop value is included when
/// (stop - start) / step is within 1e-9 of an integer.
struct TimeGrid {
  double start = 0.0;
  double stop = 0.0;
  double step = 1.0;

  std::vector<double> points() const;
};

struct RunConfig {
  std::filesystem::path dataset_path;
  std::vector<std::string> condition_attributes;
  std::string decision_attribute;
  std::string positive_value;
  LossFamily family;
  ThresholdMode mode;
  LossMatrix matrix;
  TimeGrid grid;
  bool strict_ordering = false;
};

/// Builds a RunConfig from its JSON form. Relative dataset paths resolve
/// against `base_dir`. Throws ConfigError with the offending field.
///
///   {
///     "dataset": "objects.csv",
///     "condition_attributes": ["color"],
///     "decision_attribute": "d",
///     "positive_value": "yes",
///     "loss_family": "uniform",          // point|uniform|normal|interval|fuzzy
///     "mode": "point",                   // see ThresholdMode
///     "n": 1,                            // normal only
///     "eta": "1-1/(3*t)", "strong": false, // fuzzy only
///     "loss_matrix": { "pp": {"uniform": {"a": "0", "b": "0"}}, ... },
///     "time_grid": {"start": 0, "stop": 10, "step": 1},
///     "strict_ordering": false
///   }
///
/// Entry shapes: {"point": "<expr>"}, {"uniform": {"a","b"}},
/// {"normal": {"mu","sigma"}}, {"interval": {"lo","hi"}},
/// {"fuzzy": {"elements": [{"value","membership"}, ...]}}. Expressions may be
/// strings or JSON numbers; implicit multiplication is not accepted.
RunConfig parse_config(const nlohmann::json& doc, const std::filesystem::path& base_dir);

RunConfig load_config(const std::filesystem::path& path);

}  // namespace dtrs::app
