#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace dofw {

/// Dense real decision/gradient point in R^n.
using Vector = std::vector<double>;

// Thrown when a caller breaks a documented precondition (dimension
// mismatch, duplicate enqueue, non-monotone drain, t out of range).
// The CLI maps this to exit code 3.
class ContractViolation : public std::logic_error {
 public:
  explicit ContractViolation(const std::string& msg) : std::logic_error(msg) {}
};

// Malformed or inconsistent experiment configuration; exit code 2.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

bool all_finite(const Vector& v);
void require_finite(const Vector& v, const char* what);
void require_dimension(std::size_t expected, const Vector& v, const char* what);

}  // namespace dofw
