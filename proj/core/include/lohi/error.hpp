#pragma once

#include <stdexcept>
#include <string>

namespace lohi {

// Raised for malformed or unusable input data (files, labelings, feature
// matrices). Programming errors such as out-of-range node ids use the
// standard logic_error family instead.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A requested column is absent from a CSV header.
class ColumnNotFound : public DataError {
 public:
  using DataError::DataError;
};

}  // namespace lohi
