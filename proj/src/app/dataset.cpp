#include "dtrs/app/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <unordered_set>
#include <vector>

namespace dtrs::app {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string::size_type begin = 0;
  for (;;) {
    const auto comma = line.find(',', begin);
    fields.push_back(line.substr(begin, comma == std::string::npos ? std::string::npos : comma - begin));
    if (comma == std::string::npos) return fields;
    begin = comma + 1;
  }
}

bool valid_id(const std::string& id) {
  return !id.empty() && std::all_of(id.begin(), id.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_' || c == '-';
  });
}

}  // namespace

InformationSystem parse_dataset(std::istream& in, const std::string& decision_attribute,
                                const std::string& positive_value) {
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) return true;
    }
    return false;
  };

  if (!next_line()) throw DatasetError("dataset has no header row");
  std::vector<std::string> header = split_fields(line);
  if (header.size() < 2) throw DatasetError("dataset needs an id column and at least one attribute");
  std::vector<std::string> attributes(header.begin() + 1, header.end());
  if (std::find(attributes.begin(), attributes.end(), decision_attribute) == attributes.end()) {
    throw DatasetError("decision attribute '" + decision_attribute + "' is not a dataset column");
  }

  std::vector<std::string> ids;
  std::vector<std::vector<std::string>> rows;
  std::unordered_set<std::string> seen;
  while (next_line()) {
    std::vector<std::string> fields = split_fields(line);
    if (fields.size() != header.size()) {
      throw DatasetError("line " + std::to_string(line_no) + " has " + std::to_string(fields.size()) +
                         " fields, expected " + std::to_string(header.size()));
    }
    if (!valid_id(fields[0])) {
      throw DatasetError("line " + std::to_string(line_no) + ": object id '" + fields[0] +
                         "' must match [A-Za-z0-9_-]+");
    }
    if (!seen.insert(fields[0]).second) {
      throw DatasetError("line " + std::to_string(line_no) + ": duplicate object id '" + fields[0] + "'");
    }
    ids.push_back(fields[0]);
    rows.emplace_back(std::make_move_iterator(fields.begin() + 1), std::make_move_iterator(fields.end()));
  }
  if (ids.empty()) throw DatasetError("no objects");

  try {
    return InformationSystem(std::move(ids), std::move(attributes), std::move(rows), decision_attribute,
                             positive_value);
  } catch (const Error& e) {
    throw DatasetError(e.what());
  }
}

InformationSystem load_dataset(const std::filesystem::path& path, const std::string& decision_attribute,
                               const std::string& positive_value) {
  std::ifstream in(path);
  if (!in) throw DatasetError("cannot open dataset '" + path.string() + "'");
  return parse_dataset(in, decision_attribute, positive_value);
}

}  // namespace dtrs::app
