#include "dtrs/app/sweep.hpp"

#include <algorithm>
#include <cstdio>

#include "dtrs/app/dataset.hpp"
#include "dtrs/risk.hpp"

namespace dtrs::app {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

SweepFailure::SweepFailure(double t, const std::string& reason)
    : Error("t=" + num(t) + ": " + reason), t_(t) {}

Sweep::Sweep(RunConfig config, InformationSystem table)
    : config_(std::move(config)),
      table_(std::move(table)),
      blocks_(partition(table_, config_.condition_attributes)) {}

SweepRow Sweep::evaluate(double t) const {
  SweepRow row;
  row.t = t;
  auto fail = [&](RowStatus status, std::string reason) {
    if (config_.strict_ordering) throw SweepFailure(t, reason);
    row.status = status;
    row.reason = std::move(reason);
    return row;
  };

  const OrderingMode ordering = required_ordering(config_.family, config_.mode);
  std::optional<OrderingViolation> violation;
  try {
    violation = validate_ordering(config_.matrix, t, ordering);
  } catch (const DegenerateError& e) {
    return fail(RowStatus::Degenerate, e.what());
  } catch (const ExprEvalError& e) {
    return fail(RowStatus::Degenerate, e.what());
  }
  if (violation) return fail(RowStatus::OrderingViolation, violation->message());

  ThresholdComputation computed;
  try {
    computed = compute_thresholds(config_.matrix, t, config_.mode);
  } catch (const OrderingError& e) {
    return fail(RowStatus::OrderingViolation, e.what());
  } catch (const DegenerateError& e) {
    return fail(RowStatus::Degenerate, e.what());
  } catch (const ExprEvalError& e) {
    return fail(RowStatus::Degenerate, e.what());
  }
  row.thresholds = computed.result;

  const auto* point = std::get_if<PointPair>(&computed.result);
  if (point == nullptr) return row;
  if (point->beta > point->alpha) {
    return fail(RowStatus::Degenerate, "beta " + num(point->beta) + " > alpha " + num(point->alpha));
  }

  row.regions = assign_regions(table_, blocks_, point->alpha, point->beta);
  for (const auto& a : row.regions) {
    const Region direct = min_risk_region(a.probability, *computed.scalar_losses);
    if (direct != a.region) {
      throw OracleMismatch("t=" + num(t) + ", object " + table_.object_ids()[a.object] + ": threshold rule gives " +
                           std::string(to_string(a.region)) + " but minimum risk gives " +
                           std::string(to_string(direct)));
    }
  }
  return row;
}

std::vector<SweepRow> Sweep::run() const {
  std::vector<SweepRow> rows;
  for (double t : config_.grid.points()) rows.push_back(evaluate(t));
  std::stable_sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) { return a.t < b.t; });
  return rows;
}

std::vector<SweepRow> run_sweep(const RunConfig& config) {
  Sweep sweep(config, load_dataset(config.dataset_path, config.decision_attribute, config.positive_value));
  return sweep.run();
}

}  // namespace dtrs::app
