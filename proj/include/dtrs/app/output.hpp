#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "dtrs/app/sweep.hpp"

namespace dtrs::app {

/// Fixed 12-significant-digit rendering used in every output file.
std::string format_number(double v);

/// `t,alpha_lo,alpha_hi,beta_lo,beta_hi`; point results repeat the value.
/// Rows without thresholds are skipped.
void write_thresholds_csv(std::ostream& out, const std::vector<SweepRow>& rows);

/// `t,object_id,probability,region` for Ok rows with point thresholds.
void write_regions_csv(std::ostream& out, const std::vector<SweepRow>& rows, const InformationSystem& table);

/// Per-t region counts, degenerate time points and ordering violations.
void write_summary(std::ostream& out, const std::vector<SweepRow>& rows, const RunConfig& config,
                   const InformationSystem& table);

/// Writes thresholds.csv, regions.csv and summary.txt into `out_dir`,
/// creating it if needed. Throws Error on I/O failure.
void emit_outputs(const std::vector<SweepRow>& rows, const RunConfig& config, const InformationSystem& table,
                  const std::filesystem::path& out_dir);

nlohmann::json row_to_json(const SweepRow& row);

}  // namespace dtrs::app
