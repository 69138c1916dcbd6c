#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace vrel {

using Index = Eigen::Index;

// Row-major storage matches the on-disk layout of feature blobs and keeps
// per-frame / per-entry rows contiguous.
using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vector = Eigen::VectorXd;

// Error taxonomy shared by the library and the CLI exit codes:
// ConfigError -> 1, DataError -> 2, NumericError -> 3.
class ConfigError : public std::runtime_error {
public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
  ConfigError(const std::string& field, const std::string& what)
      : std::runtime_error(field + ": " + what), field_(field) {}
  const std::string& field() const { return field_; }

private:
  std::string field_;
};

class DataError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class NumericError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline constexpr const char* kVersion = "0.1.0";

}  // namespace vrel
