#include "dofw/common.hpp"

#include <cmath>

namespace dofw {

bool all_finite(const Vector& v) {
  for (double x : v) {
    if (!std::isfinite(x)) return false;
  }
  return true;
}

void require_finite(const Vector& v, const char* what) {
  if (!all_finite(v)) {
    throw ContractViolation(std::string(what) + ": entries must be finite");
  }
}

void require_dimension(std::size_t expected, const Vector& v,
                       const char* what) {
  if (v.size() != expected) {
    throw ContractViolation(std::string(what) + ": dimension mismatch (got " +
                            std::to_string(v.size()) + ", expected " +
                            std::to_string(expected) + ")");
  }
}

}  // namespace dofw
