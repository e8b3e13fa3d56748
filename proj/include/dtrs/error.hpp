#pragma once

#include <stdexcept>
#include <string>

namespace dtrs {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thresholds or losses whose ordering assumptions fail at a time point.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

}  // namespace dtrs
