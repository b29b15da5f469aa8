#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace superosc {

/// Sampled values of a sequence of functions against a limit on a uniform
/// grid. sup_error[i] is the max over samples of |values[i][s] - limit[s]|.
struct GridResult {
  std::vector<unsigned> n_values;
  std::vector<double> xs;
  std::vector<std::complex<double>> limit;
  std::vector<std::vector<std::complex<double>>> values;
  std::vector<double> sup_error;
};

/// samples >= 2 points from lo to hi inclusive, or the single point lo
/// when lo == hi and samples == 1. Computed as a weighted
/// average of the end points so symmetric grids hit 0 exactly.
std::vector<double> linspace(double lo, double hi, std::size_t samples);

/// True when every step satisfies e[i+1] <= (1 + jitter) * e[i].
bool nonincreasing_within(std::span<const double> errors, double jitter);

bool strictly_decreasing(std::span<const double> errors);

}  // namespace superosc
