#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <variant>

#include "superosc/exp_series.hpp"
#include "superosc/grid.hpp"
#include "superosc/poly.hpp"
#include "superosc/rational.hpp"

namespace superosc {

/// Index data of one coefficient c_k(n, a). Without a value for a the
/// coefficient is the polynomial in the symbol x.
struct SuperoscParams {
  unsigned n = 0;
  long k = 0;
  std::optional<Rat> a;
};

/// C(n,k) ((1+x)/2)^{n-k} ((1-x)/2)^k, and the zero polynomial for k < 0 or
/// k > n.
Poly c_coeff(long k, long n);

/// c_k(n, a) at a rational point.
Rat c_coeff_at(long k, long n, const Rat& a);

/// Either the polynomial c_k(n, x) or its value at params.a.
std::variant<Poly, Rat> evaluate(const SuperoscParams& params);

/// Termwise d/dx of c_coeff(k, n).
Poly c_derivative(long k, long n);

/// (n/2) (c_k(n-1, x) - c_{k-1}(n-1, x)); zero for n = 0.
Poly c_derivative_rhs(long k, long n);

/// ((1-x)/2) c_{k-1}(n, x) + ((1+x)/2) c_k(n, x), which equals c_k(n+1, x).
Poly c_recurrence_rhs(long k, long n);

/// Fourier wavenumber 1 - 2j/n of the j-th term of F_n.
double wavenumber(unsigned j, unsigned n);

/// Exponential generating function of the c_k:
///   (1/k!) (t(1-x)/2)^k e^{t(x+1)/2}, truncated at `order`.
ExpSeries g_series(unsigned k, std::size_t order);

/// F_n(x, a) = (cos(x/n) + i a sin(x/n))^n in product form.
std::complex<double> f_eval(unsigned n, double a, double x);

/// F_n(x, a) = sum_k c_k(n, a) e^{i(1-2k/n)x}. The sum cancels massively
/// (sum |c_k| = (|1+a|/2 + |1-a|/2)^n), so it is accumulated in extended
/// precision and rounded once.
std::complex<double> f_eval_fourier(unsigned n, double a, double x);

/// sup over a uniform grid on [x_lo, x_hi] of |F_n(x, a) - e^{iax}| for
/// each n in n_list.
GridResult convergence_profile(std::span<const unsigned> n_list, double a, double x_lo,
                               double x_hi, std::size_t samples);

}  // namespace superosc
