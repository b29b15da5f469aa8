#pragma once

#include <cstddef>
#include <vector>

#include "superosc/exp_series.hpp"
#include "superosc/poly.hpp"
#include "superosc/rational.hpp"

namespace superosc {

/// Parameters of pFq[upper; lower; z]. Lower parameters must avoid
/// {0, -1, -2, ...}.
struct HyperSpec {
  std::vector<Rat> upper;
  std::vector<Rat> lower;

  /// count copies of `up` over count copies of `low`, the aFa shape used by
  /// the generating functions.
  static HyperSpec repeated(std::size_t count, const Rat& up, const Rat& low);

  std::size_t p() const { return upper.size(); }
  std::size_t q() const { return lower.size(); }

  /// Throws DomainError for a lower parameter in {0, -1, -2, ...}.
  void validate() const;
  bool terminating() const;
};

/// prod_j (beta_j)^{rising m} / prod_j (gamma_j)^{rising m}.
Rat pfq_coefficient(const HyperSpec& spec, std::size_t m);

/// pFq at z = zscale * t as an exponential series in t:
/// b_m = pfq_coefficient(m) * zscale^m. Purely formal, so p > q is fine.
ExpSeries pfq_series(const HyperSpec& spec, const Poly& zscale, std::size_t order);

/// Terminating pFq (some upper parameter in {0, -1, -2, ...}) evaluated at a
/// polynomial argument. Throws ContractViolation if the series does not
/// terminate.
Poly pfq_terminating(const HyperSpec& spec, const Poly& argument);

/// Floating-point partial sum of an entire pFq (p <= q). Summation stops
/// once 10 consecutive terms each satisfy |term| < tol * (1 + |sum|).
/// Throws UnsupportedDomain for p > q.
double pfq_eval_float(const HyperSpec& spec, double z, double tol = 1e-16);

/// Quadrature form of Kummer's function,
///   Gamma(sigma) / (Gamma(mu) Gamma(sigma-mu)) * int_0^1 e^{uw} w^{mu-1} (1-w)^{sigma-mu-1} dw,
/// valid for sigma > mu > 0. The integral is computed to an absolute error
/// target of 1e-10 on the returned value.
double kummer_integral(const Rat& mu, const Rat& sigma, double u);

enum class MillerParisVariant { general, c_equals_1 };

/// Closed forms for aFa[c+1, ..., c+1; c, ..., c; z] at z = zscale * t:
///   general:    c^{-a} e^z sum_v C(a,v) c^{a-v} sum_d S(v,d) z^d
///   c_equals_1: e^z sum_v S(a+1, v+1) z^v           (requires c = 1)
ExpSeries miller_paris_rhs(unsigned a, unsigned c, MillerParisVariant variant, std::size_t order,
                           const Poly& zscale = Poly::constant(Rat(1)));

}  // namespace superosc
