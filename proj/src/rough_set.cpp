#include "dtrs/rough_set.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <unordered_set>

namespace dtrs {

InformationSystem::InformationSystem(std::vector<std::string> object_ids, std::vector<std::string> attributes,
                                     std::vector<std::vector<std::string>> rows, std::string decision_attribute,
                                     std::string positive_value)
    : object_ids_(std::move(object_ids)),
      attributes_(std::move(attributes)),
      rows_(std::move(rows)),
      decision_attribute_(std::move(decision_attribute)),
      positive_value_(std::move(positive_value)) {
  if (object_ids_.empty()) throw Error("no objects");
  if (rows_.size() != object_ids_.size()) throw Error("row count does not match object count");

  std::unordered_set<std::string> seen_ids;
  for (const auto& id : object_ids_) {
    if (!seen_ids.insert(id).second) throw Error("duplicate object id '" + id + "'");
  }
  std::unordered_set<std::string> seen_attrs;
  for (const auto& name : attributes_) {
    if (!seen_attrs.insert(name).second) throw Error("duplicate attribute '" + name + "'");
  }
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].size() != attributes_.size()) {
      throw Error("object '" + object_ids_[i] + "' has " + std::to_string(rows_[i].size()) + " values, expected " +
                  std::to_string(attributes_.size()));
    }
  }

  const std::size_t decision = attribute_index(decision_attribute_);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i][decision] == positive_value_) target_.push_back(i);
  }
}

std::size_t InformationSystem::attribute_index(std::string_view name) const {
  auto it = std::find(attributes_.begin(), attributes_.end(), name);
  if (it == attributes_.end()) throw UnknownAttributeError("unknown attribute '" + std::string(name) + "'");
  return static_cast<std::size_t>(it - attributes_.begin());
}

std::vector<std::size_t> Partition::block_of(std::size_t universe_size) const {
  std::vector<std::size_t> index(universe_size, 0);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (std::size_t object : blocks[b]) index.at(object) = b;
  }
  return index;
}

Partition partition(const InformationSystem& table, std::span<const std::string> condition_attributes) {
  if (condition_attributes.empty()) throw Error("at least one condition attribute is required");
  std::vector<std::size_t> columns;
  columns.reserve(condition_attributes.size());
  for (const auto& name : condition_attributes) columns.push_back(table.attribute_index(name));

  // Objects are visited in order, so blocks come out sorted by first member.
  std::map<std::vector<std::string>, std::size_t> block_by_key;
  Partition result;
  for (std::size_t i = 0; i < table.size(); ++i) {
    std::vector<std::string> key;
    key.reserve(columns.size());
    for (std::size_t c : columns) key.push_back(table.value(i, c));
    auto [it, inserted] = block_by_key.try_emplace(std::move(key), result.blocks.size());
    if (inserted) result.blocks.emplace_back();
    result.blocks[it->second].push_back(i);
  }
  return result;
}

double conditional_probability(const ObjectSet& target, const ObjectSet& block) {
  if (block.empty()) throw Error("conditional probability of an empty block");
  std::size_t hits = 0;
  auto c = target.begin();
  for (std::size_t object : block) {
    c = std::lower_bound(c, target.end(), object);
    if (c != target.end() && *c == object) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(block.size());
}

std::string_view to_string(Region region) {
  switch (region) {
    case Region::Positive: return "POS";
    case Region::Boundary: return "BND";
    case Region::Negative: return "NEG";
  }
  return "?";
}

Region classify(double p, double alpha, double beta) {
  if (beta > alpha) {
    throw DegenerateError("beta " + std::to_string(beta) + " exceeds alpha " + std::to_string(alpha));
  }
  if (p >= alpha) return Region::Positive;
  if (p <= beta) return Region::Negative;
  return Region::Boundary;
}

std::vector<RegionAssignment> assign_regions(const InformationSystem& table, const Partition& blocks,
                                             double alpha, double beta) {
  std::vector<RegionAssignment> out(table.size());
  for (const auto& block : blocks.blocks) {
    const double p = conditional_probability(table.concept_set(), block);
    const Region region = classify(p, alpha, beta);
    for (std::size_t object : block) out.at(object) = {object, p, region};
  }
  return out;
}

}  // namespace dtrs
