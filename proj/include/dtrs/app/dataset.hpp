#pragma once

#include <filesystem>
#include <istream>
#include <string>

#include "dtrs/error.hpp"
#include "dtrs/rough_set.hpp"

namespace dtrs::app {

class DatasetError : public Error {
 public:
  using Error::Error;
};

/// Comma-separated table with a header row. The first column holds object ids
/// (restricted to [A-Za-z0-9_-]); every other column is an attribute. Cells are
/// not quoted. The concept is every row whose `decision_attribute` equals
/// `positive_value`.
InformationSystem parse_dataset(std::istream& in, const std::string& decision_attribute,
                                const std::string& positive_value);

InformationSystem load_dataset(const std::filesystem::path& path, const std::string& decision_attribute,
                               const std::string& positive_value);

}  // namespace dtrs::app
