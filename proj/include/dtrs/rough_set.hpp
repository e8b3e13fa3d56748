#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dtrs/error.hpp"

namespace dtrs {

/// Sorted, duplicate-free list of object indices into an InformationSystem.
using ObjectSet = std::vector<std::size_t>;

class UnknownAttributeError : public Error {
 public:
  using Error::Error;
};

/// Finite table U x A -> V with string-valued cells and a designated concept
/// X = { x : f(x, decision_attribute) == positive_value }.
class InformationSystem {
 public:
  /// `rows[i][j]` is the value of attribute j for object i. Throws Error on
  /// duplicate ids, ragged rows, an empty table or a missing decision attribute.
  InformationSystem(std::vector<std::string> object_ids, std::vector<std::string> attributes,
                    std::vector<std::vector<std::string>> rows, std::string decision_attribute,
                    std::string positive_value);

  std::size_t size() const noexcept { return object_ids_.size(); }
  const std::vector<std::string>& object_ids() const noexcept { return object_ids_; }
  const std::vector<std::string>& attributes() const noexcept { return attributes_; }
  const std::string& value(std::size_t object, std::size_t attribute) const { return rows_.at(object).at(attribute); }

  /// Throws UnknownAttributeError.
  std::size_t attribute_index(std::string_view name) const;

  const std::string& decision_attribute() const noexcept { return decision_attribute_; }
  const std::string& positive_value() const noexcept { return positive_value_; }
  const ObjectSet& concept_set() const noexcept { return target_; }

 private:
  std::vector<std::string> object_ids_;
  std::vector<std::string> attributes_;
  std::vector<std::vector<std::string>> rows_;
  std::string decision_attribute_;
  std::string positive_value_;
  ObjectSet target_;
};

/// Equivalence classes of the indiscernibility relation. Blocks are ordered by
/// their smallest member; members ascend within a block.
struct Partition {
  std::vector<ObjectSet> blocks;

  /// Index of the block containing each object.
  std::vector<std::size_t> block_of(std::size_t universe_size) const;
};

Partition partition(const InformationSystem& table, std::span<const std::string> condition_attributes);

/// |block ∩ target| / |block|. Both sets must be sorted. Throws Error on an empty block.
double conditional_probability(const ObjectSet& target, const ObjectSet& block);

enum class Region { Positive, Boundary, Negative };

std::string_view to_string(Region region);

/// Three-way rule: POS iff p >= alpha, NEG iff p <= beta, otherwise BND.
/// At p == alpha == beta POS wins. Throws DegenerateError when beta > alpha.
Region classify(double p, double alpha, double beta);

struct RegionAssignment {
  std::size_t object = 0;
  double probability = 0.0;
  Region region = Region::Boundary;
};

/// One assignment per object, in object order.
std::vector<RegionAssignment> assign_regions(const InformationSystem& table, const Partition& blocks,
                                             double alpha, double beta);

}  // namespace dtrs
