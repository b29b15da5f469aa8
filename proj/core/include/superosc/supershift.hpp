#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "superosc/grid.hpp"

namespace superosc {

/// Real-coefficient polynomial standing in for an entire function g or h;
/// coefficient u multiplies lambda^u.
class EntireFnSpec {
 public:
  EntireFnSpec() = default;
  explicit EntireFnSpec(std::vector<double> coeffs);

  /// Comma-separated ascending coefficients, e.g. "0,0,1" for lambda^2.
  static EntireFnSpec parse(std::string_view text);
  static EntireFnSpec identity() { return EntireFnSpec({0.0, 1.0}); }
  static EntireFnSpec one() { return EntireFnSpec({1.0}); }

  const std::vector<double>& coefficients() const { return coeffs_; }
  std::complex<double> operator()(std::complex<double> lambda) const;

 private:
  std::vector<double> coeffs_;
};

/// Which argument the weight h sees in Y_n: h(i k_j) as in the displayed
/// sequence, or h(k_j), the form whose limit is h(a) e^{i g(a) x}.
enum class WeightArgument { imaginary, real };

/// d^p/dx^p F_n(x,a) = sum_j c_j(n,a) (i k_j)^p e^{i k_j x}.
std::complex<double> dpf_eval(unsigned n, double a, double x, unsigned p);

/// sum_j c_j(n,a) (i k_j)^{mp} e^{i k_j^m x}, m >= 1.
std::complex<double> z_eval(unsigned n, double a, double x, unsigned m, unsigned p);

/// sum_j c_j(n,a) h(i k_j) e^{i g(k_j) x} (or h(k_j) for WeightArgument::real).
std::complex<double> y_eval(unsigned n, double a, double x, const EntireFnSpec& g,
                            const EntireFnSpec& h,
                            WeightArgument weight = WeightArgument::imaginary);

/// The coefficients E_j(n,a) = c_j(n,a) h(i k_j) (or h(k_j)) of Y_n viewed as a
/// generalized Fourier sequence, j = 0..n.
std::vector<std::complex<double>> y_coefficients(unsigned n, double a, const EntireFnSpec& h,
                                                 WeightArgument weight = WeightArgument::imaginary);

enum class LimitKind { dpf, z, y };

struct SupershiftParams {
  double a = 2.0;
  unsigned p = 0;
  unsigned m = 1;
  EntireFnSpec g = EntireFnSpec::identity();
  EntireFnSpec h = EntireFnSpec::one();
  WeightArgument weight = WeightArgument::imaginary;
};

/// Value of the n-th member of the sequence of the given kind.
std::complex<double> supershift_eval(LimitKind kind, const SupershiftParams& params, unsigned n,
                                     double x);

/// Pointwise limit as n -> infinity:
///   dpf: (ia)^p e^{iax}
///   z:   (ia)^{mp} e^{i a^m x}
///   y:   h(ia) e^{i g(a) x} for imaginary weights, h(a) e^{i g(a) x} for real ones.
std::complex<double> supershift_limit(LimitKind kind, const SupershiftParams& params, double x);

/// Sup error against supershift_limit on a uniform grid for each n.
GridResult limit_profile(LimitKind kind, const SupershiftParams& params,
                         std::span<const unsigned> n_list, double x_lo, double x_hi,
                         std::size_t samples);

}  // namespace superosc
