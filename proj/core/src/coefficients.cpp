#include "superosc/coefficients.hpp"

#include <algorithm>
#include <cmath>

#include "superosc/combinatorics.hpp"
#include "superosc/errors.hpp"
#include "superosc/supershift.hpp"

namespace superosc {

namespace {

Poly half_one_plus_x() { return Poly::linear(Rat(1, 2), Rat(1, 2)); }
Poly half_one_minus_x() { return Poly::linear(Rat(1, 2), Rat(-1, 2)); }

}  // namespace

Poly c_coeff(long k, long n) {
  if (n < 0) throw ContractViolation("c_coeff: n must be non-negative");
  if (k < 0 || k > n) return {};
  return half_one_plus_x().pow(static_cast<unsigned>(n - k)) *
         half_one_minus_x().pow(static_cast<unsigned>(k)) * binomial(n, k);
}

Rat c_coeff_at(long k, long n, const Rat& a) {
  if (n < 0) throw ContractViolation("c_coeff_at: n must be non-negative");
  if (k < 0 || k > n) return Rat();
  const Rat plus = (Rat(1) + a) / Rat(2);
  const Rat minus = (Rat(1) - a) / Rat(2);
  return binomial(n, k) * plus.pow(n - k) * minus.pow(k);
}

std::variant<Poly, Rat> evaluate(const SuperoscParams& params) {
  if (params.a) return c_coeff_at(params.k, params.n, *params.a);
  return c_coeff(params.k, params.n);
}

Poly c_derivative(long k, long n) { return c_coeff(k, n).derivative(); }

Poly c_derivative_rhs(long k, long n) {
  if (n <= 0) return {};
  return (c_coeff(k, n - 1) - c_coeff(k - 1, n - 1)) * Rat(n, 2);
}

Poly c_recurrence_rhs(long k, long n) {
  return half_one_minus_x() * c_coeff(k - 1, n) + half_one_plus_x() * c_coeff(k, n);
}

double wavenumber(unsigned j, unsigned n) {
  return 1.0 - 2.0 * static_cast<double>(j) / static_cast<double>(n);
}

ExpSeries g_series(unsigned k, std::size_t order) {
  if (k > order) throw ContractViolation("g_series: k exceeds the truncation order");
  ExpSeries s = series_shift_tk(series_exp_linear(half_one_plus_x(), order), k);
  return s * (half_one_minus_x().pow(k) * factorial(k).inverse());
}

std::complex<double> f_eval(unsigned n, double a, double x) {
  if (n == 0) throw ContractViolation("f_eval: n must be at least 1");
  const double theta = x / static_cast<double>(n);
  std::complex<double> base(std::cos(theta), a * std::sin(theta));
  std::complex<double> result(1.0, 0.0);
  unsigned e = n;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

std::complex<double> f_eval_fourier(unsigned n, double a, double x) { return dpf_eval(n, a, x, 0); }

GridResult convergence_profile(std::span<const unsigned> n_list, double a, double x_lo,
                               double x_hi, std::size_t samples) {
  if (n_list.empty()) throw ContractViolation("convergence_profile: empty n_list");
  GridResult out;
  out.xs = linspace(x_lo, x_hi, samples);
  out.limit.reserve(samples);
  for (double x : out.xs) out.limit.push_back(std::polar(1.0, a * x));
  for (unsigned n : n_list) {
    std::vector<std::complex<double>> values;
    values.reserve(samples);
    double sup = 0.0;
    for (std::size_t s = 0; s < samples; ++s) {
      values.push_back(f_eval(n, a, out.xs[s]));
      sup = std::max(sup, std::abs(values.back() - out.limit[s]));
    }
    out.n_values.push_back(n);
    out.values.push_back(std::move(values));
    out.sup_error.push_back(sup);
  }
  return out;
}

}  // namespace superosc
