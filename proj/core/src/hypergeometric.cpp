#include "superosc/hypergeometric.hpp"

#include <cmath>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>

#include <gsl/gsl_errno.h>
#include <gsl/gsl_integration.h>

#include "superosc/combinatorics.hpp"
#include "superosc/errors.hpp"

namespace superosc {

namespace {

bool is_nonpositive_integer(const Rat& r) { return r.is_integer() && r.sign() <= 0; }

}  // namespace

HyperSpec HyperSpec::repeated(std::size_t count, const Rat& up, const Rat& low) {
  return HyperSpec{std::vector<Rat>(count, up), std::vector<Rat>(count, low)};
}

void HyperSpec::validate() const {
  for (const auto& g : lower) {
    if (is_nonpositive_integer(g)) {
      throw DomainError("lower hypergeometric parameter " + g.str() + " lies in {0, -1, -2, ...}");
    }
  }
}

bool HyperSpec::terminating() const {
  for (const auto& b : upper) {
    if (is_nonpositive_integer(b)) return true;
  }
  return false;
}

Rat pfq_coefficient(const HyperSpec& spec, std::size_t m) {
  Rat num(1);
  Rat den(1);
  for (const auto& b : spec.upper) num *= pochhammer(b, m);
  for (const auto& g : spec.lower) den *= pochhammer(g, m);
  return num / den;
}

ExpSeries pfq_series(const HyperSpec& spec, const Poly& zscale, std::size_t order) {
  spec.validate();
  std::vector<Poly> out(order + 1);
  Poly power = Poly::constant(Rat(1));
  Rat ratio(1);
  for (std::size_t m = 0; m <= order; ++m) {
    if (m > 0) {
      power *= zscale;
      // Successive Pochhammer ratios: (beta+m-1)/(gamma+m-1).
      for (const auto& b : spec.upper) ratio *= b + Rat(m - 1);
      for (const auto& g : spec.lower) ratio /= g + Rat(m - 1);
    }
    out[m] = power * ratio;
  }
  return ExpSeries(std::move(out));
}

Poly pfq_terminating(const HyperSpec& spec, const Poly& argument) {
  spec.validate();
  if (!spec.terminating()) throw ContractViolation("pfq_terminating: series does not terminate");
  Poly acc;
  Poly power = Poly::constant(Rat(1));
  for (std::size_t m = 0;; ++m) {
    const Rat c = pfq_coefficient(spec, m);
    if (c.is_zero()) break;
    acc += power * (c / factorial(m));
    power *= argument;
  }
  return acc;
}

double pfq_eval_float(const HyperSpec& spec, double z, double tol) {
  spec.validate();
  if (spec.p() > spec.q()) {
    throw UnsupportedDomain("pfq_eval_float evaluates entire pFq only (p <= q), got p = " +
                            std::to_string(spec.p()) + ", q = " + std::to_string(spec.q()));
  }
  if (!(tol > 0.0)) throw ContractViolation("pfq_eval_float: tol must be positive");

  std::vector<double> up, low;
  for (const auto& b : spec.upper) up.push_back(b.to_double());
  for (const auto& g : spec.lower) low.push_back(g.to_double());

  constexpr int kQuietRun = 10;
  constexpr std::size_t kMaxTerms = 1'000'000;

  double sum = 1.0;
  double term = 1.0;
  int quiet = 0;
  for (std::size_t m = 0; m < kMaxTerms; ++m) {
    double factor = z / static_cast<double>(m + 1);
    for (double b : up) factor *= b + static_cast<double>(m);
    for (double g : low) factor /= g + static_cast<double>(m);
    term *= factor;
    sum += term;
    quiet = std::abs(term) < tol * (1.0 + std::abs(sum)) ? quiet + 1 : 0;
    if (quiet >= kQuietRun) return sum;
  }
  throw std::runtime_error("pfq_eval_float: no convergence after " + std::to_string(kMaxTerms) +
                           " terms");
}

namespace {

struct KummerIntegrand {
  double u;
  double mu_minus_1;
  double tail_exponent;
};

double kummer_integrand(double w, void* params) {
  const auto* p = static_cast<const KummerIntegrand*>(params);
  double value = std::exp(p->u * w);
  if (p->mu_minus_1 != 0.0) value *= std::pow(w, p->mu_minus_1);
  if (p->tail_exponent != 0.0) value *= std::pow(1.0 - w, p->tail_exponent);
  return value;
}

}  // namespace

double kummer_integral(const Rat& mu, const Rat& sigma, double u) {
  if (!(mu.sign() > 0 && sigma > mu)) {
    throw DomainError("kummer_integral requires sigma > mu > 0, got mu = " + mu.str() +
                      ", sigma = " + sigma.str());
  }
  static std::once_flag quiet_gsl;
  std::call_once(quiet_gsl, [] { gsl_set_error_handler_off(); });

  const double m = mu.to_double();
  const double s = sigma.to_double();
  const double prefactor =
      std::exp(std::lgamma(s) - std::lgamma(m) - std::lgamma(s - m));

  KummerIntegrand params{u, m - 1.0, s - m - 1.0};
  gsl_function f;
  f.function = &kummer_integrand;
  f.params = &params;

  constexpr std::size_t kLimit = 1000;
  constexpr double kAbsTarget = 1e-10;
  std::unique_ptr<gsl_integration_workspace, decltype(&gsl_integration_workspace_free)> ws(
      gsl_integration_workspace_alloc(kLimit), &gsl_integration_workspace_free);

  double result = 0.0;
  double abserr = 0.0;
  // qags extrapolates through the integrable endpoint singularities that
  // appear when mu < 1 or sigma - mu < 1.
  const int status = gsl_integration_qags(&f, 0.0, 1.0, kAbsTarget / prefactor, 0.0, kLimit,
                                          ws.get(), &result, &abserr);
  if (status != GSL_SUCCESS) {
    throw std::runtime_error(std::string("kummer_integral: quadrature failed: ") +
                             gsl_strerror(status));
  }
  return prefactor * result;
}

ExpSeries miller_paris_rhs(unsigned a, unsigned c, MillerParisVariant variant, std::size_t order,
                           const Poly& zscale) {
  if (c == 0) throw DomainError("miller_paris_rhs: c must be at least 1");
  if (variant == MillerParisVariant::c_equals_1 && c != 1) {
    throw ContractViolation("miller_paris_rhs: c_equals_1 variant requires c = 1");
  }

  // z^d as an exponential series: coefficient d! zscale^d at index d.
  const auto z_power = [&](std::size_t d) -> ExpSeries {
    if (d > order) return ExpSeries(order);
    return series_shift_tk(ExpSeries::constant(zscale.pow(static_cast<unsigned>(d)), order), d);
  };

  ExpSeries poly_part(order);
  if (variant == MillerParisVariant::general) {
    const Rat cr(c);
    for (unsigned v = 0; v <= a; ++v) {
      ExpSeries inner(order);
      for (unsigned d = 0; d <= v; ++d) inner += z_power(d) * stirling2(v, d);
      poly_part += inner * (binomial(static_cast<long>(a), static_cast<long>(v)) *
                            cr.pow(static_cast<long>(a - v)));
    }
    poly_part *= cr.pow(-static_cast<long>(a));
  } else {
    for (unsigned v = 0; v <= a; ++v) poly_part += z_power(v) * stirling2(a + 1, v + 1);
  }
  return series_mul(series_exp_linear(zscale, order), poly_part);
}

}  // namespace superosc
