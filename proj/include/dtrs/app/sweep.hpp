#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dtrs/app/config.hpp"
#include "dtrs/rough_set.hpp"
#include "dtrs/thresholds.hpp"

namespace dtrs::app {

enum class RowStatus {
  Ok,
  Degenerate,         ///< vanishing denominator, broken loss invariant, or beta > alpha
  OrderingViolation,  ///< the loss ordering chain the mode relies on fails
};

struct SweepRow {
  double t = 0.0;
  RowStatus status = RowStatus::Ok;
  /// Present for Ok rows and for beta > alpha crossovers.
  std::optional<ThresholdResult> thresholds;
  std::string reason;
  /// Filled for Ok rows with point thresholds, one per object in table order.
  std::vector<RegionAssignment> regions;
};

/// A time point failed while strict ordering was requested.
class SweepFailure : public Error {
 public:
  SweepFailure(double t, const std::string& reason);
  double t() const noexcept { return t_; }

 private:
  double t_;
};

/// The threshold rule and the direct minimum-risk choice disagreed.
class OracleMismatch : public Error {
 public:
  using Error::Error;
};

/// Evaluates a configuration over its time grid. Every time point is
/// independent of the others.
class Sweep {
 public:
  Sweep(RunConfig config, InformationSystem table);

  const RunConfig& config() const noexcept { return config_; }
  const InformationSystem& table() const noexcept { return table_; }
  const Partition& blocks() const noexcept { return blocks_; }

  /// Throws SweepFailure in strict mode and OracleMismatch always.
  SweepRow evaluate(double t) const;

  /// One row per grid point, ascending in t.
  std::vector<SweepRow> run() const;

 private:
  RunConfig config_;
  InformationSystem table_;
  Partition blocks_;
};

/// Loads the dataset named by the config and runs the whole grid.
std::vector<SweepRow> run_sweep(const RunConfig& config);

}  // namespace dtrs::app
