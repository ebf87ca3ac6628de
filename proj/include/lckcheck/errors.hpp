#pragma once

#include <stdexcept>
#include <string>

namespace lck {

// Exit/status codes shared by the C API and the CLI.
enum class Status : int {
  kOk = 0,
  kInternal = 1,
  kInvalidInput = 2,
  kPrecisionExhausted = 3,
  kBudgetExceeded = 4,
};

class Error : public std::runtime_error {
 public:
  Error(Status status, const std::string& what) : std::runtime_error(what), status_(status) {}
  Status status() const noexcept { return status_; }

 private:
  Status status_;
};

class InvalidInput : public Error {
 public:
  explicit InvalidInput(const std::string& what) : Error(Status::kInvalidInput, what) {}
};

class PrecisionExhausted : public Error {
 public:
  explicit PrecisionExhausted(const std::string& what)
      : Error(Status::kPrecisionExhausted, what) {}
};

class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(const std::string& what) : Error(Status::kBudgetExceeded, what) {}
};

const char* status_name(Status s) noexcept;

}  // namespace lck
