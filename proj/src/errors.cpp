#include "lckcheck/errors.hpp"

namespace lck {

const char* status_name(Status s) noexcept {
  switch (s) {
    case Status::kOk:
      return "ok";
    case Status::kInternal:
      return "internal_error";
    case Status::kInvalidInput:
      return "invalid_input";
    case Status::kPrecisionExhausted:
      return "precision_exhausted";
    case Status::kBudgetExceeded:
      return "budget_exceeded";
  }
  return "unknown";
}

}  // namespace lck
