#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace segal {

/// Raised when an input object violates a structural invariant. Carries every violation found.
class InvalidObject : public std::runtime_error {
 public:
  explicit InvalidObject(std::vector<std::string> violations);
  const std::vector<std::string>& violations() const { return violations_; }

 private:
  std::vector<std::string> violations_;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Hard cap on the number of simplices a construction may materialize.
struct Budget {
  std::size_t max_simplices = 1'000'000;
};

}  // namespace segal
