#include "dtrs/app/output.hpp"

#include <array>
#include <cstdio>
#include <fstream>

namespace dtrs::app {

std::string format_number(double v) {
  if (v == 0.0) v = 0.0;  // no "-0"
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

namespace {

BandPair widen(const ThresholdResult& r) {
  if (const auto* p = std::get_if<PointPair>(&r)) return {p->alpha, p->alpha, p->beta, p->beta};
  return std::get<BandPair>(r);
}

bool has_regions(const SweepRow& row) {
  return row.status == RowStatus::Ok && row.thresholds && std::holds_alternative<PointPair>(*row.thresholds);
}

void open_and_write(const std::filesystem::path& path, auto&& writer) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open '" + path.string() + "' for writing");
  writer(out);
  out.flush();
  if (!out) throw Error("failed writing '" + path.string() + "'");
}

}  // namespace

void write_thresholds_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "t,alpha_lo,alpha_hi,beta_lo,beta_hi\n";
  for (const auto& row : rows) {
    if (!row.thresholds) continue;
    const BandPair b = widen(*row.thresholds);
    out << format_number(row.t) << ',' << format_number(b.alpha_lo) << ',' << format_number(b.alpha_hi) << ','
        << format_number(b.beta_lo) << ',' << format_number(b.beta_hi) << '\n';
  }
}

void write_regions_csv(std::ostream& out, const std::vector<SweepRow>& rows, const InformationSystem& table) {
  out << "t,object_id,probability,region\n";
  for (const auto& row : rows) {
    if (!has_regions(row)) continue;
    for (const auto& a : row.regions) {
      out << format_number(row.t) << ',' << table.object_ids()[a.object] << ',' << format_number(a.probability)
          << ',' << to_string(a.region) << '\n';
    }
  }
}

void write_summary(std::ostream& out, const std::vector<SweepRow>& rows, const RunConfig& config,
                   const InformationSystem& table) {
  out << "loss_family: " << to_string(config.family) << '\n';
  out << "mode: " << to_string(config.mode) << '\n';
  out << "objects: " << table.size() << '\n';
  out << "concept_size: " << table.concept_set().size() << '\n';
  out << "grid_points: " << rows.size() << '\n';

  out << "\nregion_counts (t POS BND NEG):\n";
  bool any = false;
  for (const auto& row : rows) {
    if (!has_regions(row)) continue;
    std::array<std::size_t, 3> counts{};
    for (const auto& a : row.regions) ++counts[static_cast<std::size_t>(a.region)];
    out << format_number(row.t) << ' ' << counts[0] << ' ' << counts[1] << ' ' << counts[2] << '\n';
    any = true;
  }
  if (!any) out << "none\n";

  auto list = [&](const char* title, RowStatus status) {
    out << '\n' << title << ":\n";
    bool found = false;
    for (const auto& row : rows) {
      if (row.status != status) continue;
      out << format_number(row.t) << ": " << row.reason << '\n';
      found = true;
    }
    if (!found) out << "none\n";
  };
  list("degenerate", RowStatus::Degenerate);
  list("ordering_violations", RowStatus::OrderingViolation);
}

void emit_outputs(const std::vector<SweepRow>& rows, const RunConfig& config, const InformationSystem& table,
                  const std::filesystem::path& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw Error("cannot create output directory '" + out_dir.string() + "': " + ec.message());
  open_and_write(out_dir / "thresholds.csv", [&](std::ostream& o) { write_thresholds_csv(o, rows); });
  open_and_write(out_dir / "regions.csv", [&](std::ostream& o) { write_regions_csv(o, rows, table); });
  open_and_write(out_dir / "summary.txt", [&](std::ostream& o) { write_summary(o, rows, config, table); });
}

nlohmann::json row_to_json(const SweepRow& row) {
  nlohmann::json j;
  j["t"] = row.t;
  switch (row.status) {
    case RowStatus::Ok: j["status"] = "ok"; break;
    case RowStatus::Degenerate: j["status"] = "degenerate"; break;
    case RowStatus::OrderingViolation: j["status"] = "ordering_violation"; break;
  }
  if (!row.reason.empty()) j["reason"] = row.reason;
  if (row.thresholds) {
    if (const auto* p = std::get_if<PointPair>(&*row.thresholds)) {
      j["kind"] = "point";
      j["alpha"] = p->alpha;
      j["beta"] = p->beta;
    } else {
      const auto& b = std::get<BandPair>(*row.thresholds);
      j["kind"] = "band";
      j["alpha_lo"] = b.alpha_lo;
      j["alpha_hi"] = b.alpha_hi;
      j["beta_lo"] = b.beta_lo;
      j["beta_hi"] = b.beta_hi;
    }
  }
  return j;
}

}  // namespace dtrs::app
