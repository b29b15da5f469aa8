#pragma once

#include <complex>
#include <memory>
#include <span>
#include <vector>

namespace superosc::detail {

/// sum_{j=0}^{n} c_j(n,a) w(k_j) exp(i phase(k_j) x) with k_j = 1 - 2j/n,
/// where w is a polynomial with complex coefficients and phase a polynomial
/// with real coefficients.
///
/// The c_j(n,a) alternate in sign with magnitudes up to
/// (|1+a|/2 + |1-a|/2)^n while the sum stays O(1), so the terms are formed
/// and accumulated in MPFR with enough guard bits to absorb that
/// cancellation. All inputs are doubles and therefore exact in MPFR.
class FourierSum {
 public:
  FourierSum(unsigned n, double a, std::span<const double> phase_poly,
             std::span<const std::complex<double>> weight_poly);
  ~FourierSum();
  FourierSum(FourierSum&&) noexcept;
  FourierSum& operator=(FourierSum&&) noexcept;

  std::complex<double> operator()(double x) const;

  /// c_j(n,a) w(k_j) rounded to double, j = 0..n.
  std::vector<std::complex<double>> weights() const;

  long precision_bits() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace superosc::detail
