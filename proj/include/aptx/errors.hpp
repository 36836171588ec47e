#pragma once

#include <stdexcept>
#include <string>

namespace aptx {

// Invalid configuration: bad activation parameters, bad run options.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input outside a function's supported domain (non-finite x, unsafe range).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A numerical oracle (finite difference, minimizer) saw non-finite values.
class OracleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BenchmarkError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class TrainingError : public std::runtime_error {
 public:
  TrainingError(const std::string& what, int epoch)
      : std::runtime_error(what), epoch_(epoch) {}
  int epoch() const noexcept { return epoch_; }

 private:
  int epoch_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace aptx
