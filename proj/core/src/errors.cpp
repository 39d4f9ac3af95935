#include "specflow/errors.hpp"

#include <sstream>

namespace specflow {

ConfigError::ConfigError(const std::string& message, std::string key)
    : Error(message), key_(std::move(key)) {}

namespace {
std::string divergence_message(std::int64_t step, double max_abs) {
  std::ostringstream os;
  os << "solution diverged at step " << step << " (max|eta| = " << max_abs << ")";
  return os.str();
}
}  // namespace

DivergenceError::DivergenceError(std::int64_t step_index, double max_abs)
    : Error(divergence_message(step_index, max_abs)),
      step_index_(step_index),
      max_abs_(max_abs) {}

}  // namespace specflow
