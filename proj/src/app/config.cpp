#include "dtrs/app/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>

namespace dtrs::app {

using nlohmann::json;

std::vector<double> TimeGrid::points() const {
  if (!std::isfinite(start) || !std::isfinite(stop) || !std::isfinite(step)) {
    throw ConfigError("time_grid values must be finite");
  }
  if (!(step > 0.0)) throw ConfigError("time_grid.step must be > 0");
  if (stop < start) throw ConfigError("time_grid.stop must not be below time_grid.start");

  const double span = (stop - start) / step;
  const double nearest = std::round(span);
  const bool closed = std::abs(span - nearest) <= 1e-9;
  const double intervals = closed ? nearest : std::floor(span);
  if (intervals > 1e7) throw ConfigError("time_grid has more than 10^7 points");

  const auto count = static_cast<std::size_t>(intervals);
  std::vector<double> out;
  out.reserve(count + 1);
  for (std::size_t k = 0; k <= count; ++k) out.push_back(start + static_cast<double>(k) * step);
  if (closed) out.back() = stop;
  return out;
}

namespace {

const json& field(const json& obj, const char* name, const std::string& where) {
  if (!obj.is_object() || !obj.contains(name)) throw ConfigError("missing field '" + where + name + "'");
  return obj.at(name);
}

std::string string_field(const json& obj, const char* name, const std::string& where = "") {
  const json& v = field(obj, name, where);
  if (!v.is_string()) throw ConfigError("field '" + where + name + "' must be a string");
  return v.get<std::string>();
}

double number_field(const json& obj, const char* name, const std::string& where) {
  const json& v = field(obj, name, where);
  if (!v.is_number()) throw ConfigError("field '" + where + name + "' must be a number");
  return v.get<double>();
}

TimeExpr expression(const json& v, const std::string& where) {
  std::string text;
  if (v.is_string()) {
    text = v.get<std::string>();
  } else if (v.is_number()) {
    // Shortest round-trip text keeps the parsed constant bit-exact.
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v.get<double>());
    (void)ec;
    text.assign(buf, end);
  } else {
    throw ConfigError("field '" + where + "' must be an expression string or a number");
  }
  try {
    return parse_time_expr(text);
  } catch (const ExprSyntaxError& e) {
    throw ConfigError("field '" + where + "': " + e.what());
  }
}

TimeExpr expression_field(const json& obj, const char* name, const std::string& where) {
  return expression(field(obj, name, where), where + name);
}

struct FamilyOptions {
  int n = 1;
  std::optional<TimeExpr> eta;
  bool strong = false;
};

LossSpec parse_entry(const json& doc, LossFamily family, const FamilyOptions& options, const std::string& where) {
  if (!doc.is_object() || doc.size() != 1) {
    throw ConfigError("loss entry '" + where + "' must be an object with exactly one family key");
  }
  const std::string key = doc.begin().key();
  const json& body = doc.begin().value();
  const auto entry_family = parse_loss_family(key);
  if (!entry_family) throw ConfigError("loss entry '" + where + "' has unknown family '" + key + "'");
  if (*entry_family != family) {
    throw ConfigError("loss entry '" + where + "' is " + key + " but loss_family is " +
                      std::string(to_string(family)));
  }
  const std::string inner = where + "." + key + ".";
  switch (family) {
    case LossFamily::Point:
      if (body.is_object()) return PointLoss{expression_field(body, "value", inner)};
      return PointLoss{expression(body, where + "." + key)};
    case LossFamily::Uniform:
      return UniformLoss{expression_field(body, "a", inner), expression_field(body, "b", inner)};
    case LossFamily::Normal:
      return NormalBandLoss{expression_field(body, "mu", inner), expression_field(body, "sigma", inner), options.n};
    case LossFamily::Interval:
      return IntervalLoss{expression_field(body, "lo", inner), expression_field(body, "hi", inner)};
    case LossFamily::Fuzzy: {
      const json& list = field(body, "elements", inner);
      if (!list.is_array() || list.empty()) throw ConfigError("field '" + inner + "elements' must be a non-empty array");
      std::vector<FuzzyElement> elements;
      for (std::size_t i = 0; i < list.size(); ++i) {
        const std::string at = inner + "elements[" + std::to_string(i) + "].";
        elements.push_back({expression_field(list[i], "value", at), expression_field(list[i], "membership", at)});
      }
      std::optional<TimeExpr> eta = options.eta;
      if (body.contains("eta")) eta = expression_field(body, "eta", inner);
      if (!eta) throw ConfigError("fuzzy entry '" + where + "' needs an eta (top-level or per entry)");
      bool strong = options.strong;
      if (body.contains("strong")) {
        if (!body["strong"].is_boolean()) throw ConfigError("field '" + inner + "strong' must be a boolean");
        strong = body["strong"].get<bool>();
      }
      return FuzzyLoss{std::move(elements), *eta, strong};
    }
  }
  throw ConfigError("unreachable loss family");
}

}  // namespace

RunConfig parse_config(const json& doc, const std::filesystem::path& base_dir) {
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");

  std::filesystem::path dataset = string_field(doc, "dataset");
  if (dataset.is_relative()) dataset = base_dir / dataset;

  const json& attrs = field(doc, "condition_attributes", "");
  if (!attrs.is_array() || attrs.empty()) throw ConfigError("field 'condition_attributes' must be a non-empty array");
  std::vector<std::string> condition;
  for (const auto& a : attrs) {
    if (!a.is_string()) throw ConfigError("field 'condition_attributes' must contain strings");
    condition.push_back(a.get<std::string>());
  }

  const std::string family_name = string_field(doc, "loss_family");
  const auto family = parse_loss_family(family_name);
  if (!family) throw ConfigError("unknown loss_family '" + family_name + "'");

  std::optional<ThresholdMode> mode;
  if (doc.contains("mode")) {
    const std::string name = string_field(doc, "mode");
    mode = parse_threshold_mode(name);
    if (!mode) throw ConfigError("unknown mode '" + name + "'");
  } else if (*family == LossFamily::Point || *family == LossFamily::Uniform) {
    mode = ThresholdMode::Point;
  } else {
    throw ConfigError("field 'mode' is required for the " + family_name + " family");
  }
  if (!mode_supported(*family, *mode)) {
    throw ConfigError("mode '" + std::string(to_string(*mode)) + "' is not available for the " + family_name +
                      " family");
  }

  FamilyOptions options;
  if (*family == LossFamily::Normal) {
    const json& n = field(doc, "n", "");
    if (!n.is_number_integer() || n.get<int>() < 1 || n.get<int>() > 3) {
      throw ConfigError("field 'n' must be the integer 1, 2 or 3");
    }
    options.n = n.get<int>();
  }
  if (*family == LossFamily::Fuzzy) {
    if (doc.contains("eta")) options.eta = expression_field(doc, "eta", "");
    if (doc.contains("strong")) {
      if (!doc["strong"].is_boolean()) throw ConfigError("field 'strong' must be a boolean");
      options.strong = doc["strong"].get<bool>();
    }
  }

  const json& m = field(doc, "loss_matrix", "");
  auto entry = [&](const char* name) {
    return parse_entry(field(m, name, "loss_matrix."), *family, options, std::string("loss_matrix.") + name);
  };
  LossMatrix matrix(entry("pp"), entry("bp"), entry("np"), entry("nn"), entry("bn"), entry("pn"));

  const json& g = field(doc, "time_grid", "");
  TimeGrid grid{number_field(g, "start", "time_grid."), number_field(g, "stop", "time_grid."),
                number_field(g, "step", "time_grid.")};
  (void)grid.points();

  bool strict = false;
  if (doc.contains("strict_ordering")) {
    if (!doc["strict_ordering"].is_boolean()) throw ConfigError("field 'strict_ordering' must be a boolean");
    strict = doc["strict_ordering"].get<bool>();
  }

  return RunConfig{std::move(dataset),
                   std::move(condition),
                   string_field(doc, "decision_attribute"),
                   string_field(doc, "positive_value"),
                   *family,
                   *mode,
                   std::move(matrix),
                   grid,
                   strict};
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path.string() + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("config '" + path.string() + "' is not valid JSON: " + e.what());
  }
  return parse_config(doc, path.parent_path());
}

}  // namespace dtrs::app
