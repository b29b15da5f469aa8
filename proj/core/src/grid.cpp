#include "superosc/grid.hpp"

#include "superosc/errors.hpp"

namespace superosc {

std::vector<double> linspace(double lo, double hi, std::size_t samples) {
  if (samples == 1 && lo == hi) return {lo};
  if (samples < 2) throw ContractViolation("linspace needs at least 2 samples");
  std::vector<double> xs(samples);
  const double last = static_cast<double>(samples - 1);
  for (std::size_t i = 0; i < samples; ++i) {
    const double w = static_cast<double>(i);
    xs[i] = (lo * (last - w) + hi * w) / last;
  }
  return xs;
}

bool nonincreasing_within(std::span<const double> errors, double jitter) {
  for (std::size_t i = 1; i < errors.size(); ++i) {
    if (errors[i] > (1.0 + jitter) * errors[i - 1]) return false;
  }
  return true;
}

bool strictly_decreasing(std::span<const double> errors) {
  for (std::size_t i = 1; i < errors.size(); ++i) {
    if (!(errors[i] < errors[i - 1])) return false;
  }
  return true;
}

}  // namespace superosc
