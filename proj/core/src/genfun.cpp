#include "superosc/genfun.hpp"

#include <string>

#include "superosc/coefficients.hpp"
#include "superosc/combinatorics.hpp"
#include "superosc/errors.hpp"
#include "superosc/hypergeometric.hpp"

namespace superosc {

namespace {

Poly half_one_plus_x() { return Poly::linear(Rat(1, 2), Rat(1, 2)); }
Poly half_one_minus_x() { return Poly::linear(Rat(1, 2), Rat(-1, 2)); }

/// ((1-x)t/2)^k / k! * inner.
ExpSeries apply_prefactor(const ExpSeries& inner, unsigned k) {
  if (k > inner.order()) throw ContractViolation("k exceeds the truncation order");
  return series_shift_tk(inner, k) * (half_one_minus_x().pow(k) * factorial(k).inverse());
}

/// ((1-x)t/2) / k! * inner, the un-exponentiated prefactor of the printed
/// closed forms.
ExpSeries apply_bare_prefactor(const ExpSeries& inner, unsigned k) {
  if (inner.order() < 1) throw ContractViolation("order too small for the t prefactor");
  return series_shift_tk(inner, 1) * (half_one_minus_x() * factorial(k).inverse());
}

/// sum_{l<=j} C(j,l) (-2k/n)^{j-l} F_l weighted by alpha_j, where
/// F_l = block(l) is an exponential series.
template <typename Block>
ExpSeries alpha_combination(const GenFunParams& p, std::size_t order, Block&& block) {
  const Rat shift = Rat(-2 * static_cast<long>(p.k), static_cast<long>(p.n));
  std::vector<Rat> weight(p.m + 1);
  for (unsigned j = 0; j <= p.m; ++j) {
    for (unsigned l = 0; l <= j; ++l) {
      weight[l] += p.alphas[j] * binomial(static_cast<long>(j), static_cast<long>(l)) *
                   shift.pow(static_cast<long>(j - l));
    }
  }
  ExpSeries acc(order);
  for (unsigned l = 0; l <= p.m; ++l) {
    if (weight[l].is_zero()) continue;
    acc += block(l) * weight[l];
  }
  return acc;
}

ExpSeries z_power(std::size_t d, std::size_t order) {
  if (d > order) return ExpSeries(order);
  return series_shift_tk(ExpSeries::constant(half_one_plus_x().pow(static_cast<unsigned>(d)), order),
                         d);
}

Rat alpha_shift(const GenFunParams& p) {
  return Rat(-2 * static_cast<long>(p.k), static_cast<long>(p.n));
}

void require_m(const GenFunParams& p, unsigned m, const char* who) {
  p.validate();
  if (p.m != m) {
    throw ContractViolation(std::string(who) + " requires m = " + std::to_string(m));
  }
  if (p.k == 0) throw DomainError(std::string(who) + " requires k >= 1");
}

}  // namespace

void GenFunParams::validate() const {
  if (alphas.size() != m + 1) {
    throw ContractViolation("GenFunParams: expected " + std::to_string(m + 1) +
                            " alpha values, got " + std::to_string(alphas.size()));
  }
  if (n == 0) throw ContractViolation("GenFunParams: n must be at least 1");
}

ExpSeries s1_series(const GenFunParams& p, std::size_t order) {
  p.validate();
  const Poly z = half_one_plus_x();
  const ExpSeries inner = alpha_combination(p, order, [&](unsigned l) {
    return pfq_series(HyperSpec::repeated(l, Rat(p.k), Rat(p.k + 1)), z, order);
  });
  return apply_prefactor(inner, p.k);
}

ExpSeries s2_series(const GenFunParams& p, std::size_t order) {
  p.validate();
  if (p.k == 0 && p.m >= 1) {
    throw DomainError("S2 with k = 0 and m >= 1 has lower hypergeometric parameter 0");
  }
  const Poly z = half_one_plus_x();
  const ExpSeries inner = alpha_combination(p, order, [&](unsigned l) {
    return pfq_series(HyperSpec::repeated(l, Rat(p.k + 1), Rat(p.k)), z, order);
  });
  return apply_prefactor(inner, p.k);
}

ExpSeries kummer_tail_series(unsigned k, unsigned power, std::size_t order) {
  if (k == 0) throw DomainError("kummer_tail_series: k = 0 gives a divergent integral");
  std::vector<Poly> out(order + 1);
  Poly zp = Poly::constant(Rat(1));
  for (std::size_t v = 0; v <= order; ++v) {
    out[v] = zp * Rat(1, static_cast<long>(v + k)).pow(static_cast<long>(power));
    zp *= half_one_plus_x();
  }
  return ExpSeries(std::move(out));
}

ClosedFormPair s1_m1_closed(const GenFunParams& p, std::size_t order) {
  require_m(p, 1, "s1_m1_closed");
  const Rat& a0 = p.alphas[0];
  const Rat& a1 = p.alphas[1];
  const Rat g_weight = a0 + alpha_shift(p) * a1;
  const ExpSeries g = g_series(p.k, order);
  const ExpSeries tail = apply_prefactor(kummer_tail_series(p.k, 1, order), p.k);

  ExpSeries printed = g * g_weight + tail * a1;
  ExpSeries corrected = g * g_weight + tail * (a1 * Rat(p.k));
  return {std::move(printed), std::move(corrected)};
}

ClosedFormPair s1_m2_closed(const GenFunParams& p, std::size_t order) {
  require_m(p, 2, "s1_m2_closed");
  const Rat& a0 = p.alphas[0];
  const Rat& a1 = p.alphas[1];
  const Rat& a2 = p.alphas[2];
  const Rat n(p.n);
  const Rat k(p.k);
  const ExpSeries g = g_series(p.k, order);
  const ExpSeries tail1 = kummer_tail_series(p.k, 1, order);
  const ExpSeries tail2 = kummer_tail_series(p.k, 2, order);
  const Rat mid_weight = (n * a1 - Rat(4) * k * a2) / n;

  const Rat printed_g = (n * n * a0 - Rat(2) * k * n * a1 + Rat(4) * n * k * k * a2) / (n * n);
  ExpSeries printed = g * printed_g + apply_bare_prefactor(tail1, p.k) * mid_weight +
                      apply_bare_prefactor(tail2, p.k) * a2;

  const Rat corrected_g = (n * n * a0 - Rat(2) * k * n * a1 + Rat(4) * k * k * a2) / (n * n);
  ExpSeries corrected = g * corrected_g + apply_prefactor(tail1, p.k) * (mid_weight * k) +
                        apply_prefactor(tail2, p.k) * (a2 * k * k);
  return {std::move(printed), std::move(corrected)};
}

ClosedFormPair s2_m1_closed(const GenFunParams& p, std::size_t order) {
  require_m(p, 1, "s2_m1_closed");
  const Rat& a0 = p.alphas[0];
  const Rat& a1 = p.alphas[1];
  const ExpSeries g = g_series(p.k, order);
  const ExpSeries f1 =
      pfq_series(HyperSpec::repeated(1, Rat(p.k + 1), Rat(p.k)), half_one_plus_x(), order);
  const Rat g_weight = a0 + alpha_shift(p) * a1;

  ExpSeries printed = g * g_weight + apply_bare_prefactor(f1, p.k) * a1;
  ExpSeries corrected = g * g_weight + apply_prefactor(f1, p.k) * a1;
  return {std::move(printed), std::move(corrected)};
}

ClosedFormPair s2_m2_closed(const GenFunParams& p, std::size_t order) {
  require_m(p, 2, "s2_m2_closed");
  const Rat& a0 = p.alphas[0];
  const Rat& a1 = p.alphas[1];
  const Rat& a2 = p.alphas[2];
  const Rat n(p.n);
  const Rat k(p.k);
  const ExpSeries g = g_series(p.k, order);
  const Poly z = half_one_plus_x();
  const ExpSeries f1 = pfq_series(HyperSpec::repeated(1, Rat(p.k + 1), Rat(p.k)), z, order);
  const ExpSeries f2 = pfq_series(HyperSpec::repeated(2, Rat(p.k + 1), Rat(p.k)), z, order);
  const Rat mid_weight = (n * a1 - Rat(4) * k * a2) / n;

  const Rat printed_g = (n * n * a0 - Rat(2) * k * n * a1 + Rat(4) * n * k * k * a2) / (n * n);
  ExpSeries printed = g * printed_g + apply_bare_prefactor(f1, p.k) * mid_weight +
                      apply_bare_prefactor(f2, p.k) * a2;

  const Rat corrected_g = (n * n * a0 - Rat(2) * k * n * a1 + Rat(4) * k * k * a2) / (n * n);
  ExpSeries corrected =
      g * corrected_g + apply_prefactor(f1, p.k) * mid_weight + apply_prefactor(f2, p.k) * a2;
  return {std::move(printed), std::move(corrected)};
}

ExpSeries s2_stirling_closed(const GenFunParams& p, std::size_t order) {
  p.validate();
  if (p.k == 0) throw DomainError("s2_stirling_closed requires k >= 1");
  const Rat k(p.k);
  const ExpSeries ez = series_exp_linear(half_one_plus_x(), order);
  const ExpSeries inner = alpha_combination(p, order, [&](unsigned l) {
    ExpSeries poly_part(order);
    for (unsigned c = 0; c <= l; ++c) {
      ExpSeries touchard(order);
      for (unsigned d = 0; d <= c; ++d) touchard += z_power(d, order) * stirling2(c, d);
      poly_part += touchard * (binomial(static_cast<long>(l), static_cast<long>(c)) *
                               k.pow(static_cast<long>(l - c)));
    }
    return series_mul(ez, poly_part) * k.pow(-static_cast<long>(l));
  });
  return apply_prefactor(inner, p.k);
}

ExpSeries s2_k1_corollary(const GenFunParams& p, std::size_t order) {
  p.validate();
  if (p.k != 1) throw ContractViolation("s2_k1_corollary requires k = 1");
  const ExpSeries ez = series_exp_linear(half_one_plus_x(), order);
  const ExpSeries inner = alpha_combination(p, order, [&](unsigned l) {
    ExpSeries poly_part(order);
    for (unsigned c = 0; c <= l; ++c) poly_part += z_power(c, order) * stirling2(l + 1, c + 1);
    return series_mul(ez, poly_part);
  });
  return apply_prefactor(inner, 1);
}

Poly b2_explicit(std::size_t v, const GenFunParams& p) {
  p.validate();
  if (p.k == 0) throw DomainError("b2_explicit requires k >= 1");
  const Rat shift = alpha_shift(p);
  const Rat k(p.k);
  const auto vv = static_cast<long>(v);

  // Inner sum over (c, d) depends only on l.
  const auto inner = [&](unsigned l) {
    Poly acc;
    for (unsigned c = 0; c <= l; ++c) {
      Poly by_d;
      for (unsigned d = 0; d <= c && d <= v; ++d) {
        const Rat s = stirling2(c, d);
        if (s.is_zero()) continue;
        by_d += half_one_plus_x().pow(d) * c_coeff(static_cast<long>(p.k), vv - d) *
                (binomial(vv, d) * factorial(d) * s);
      }
      acc += by_d * (binomial(static_cast<long>(l), static_cast<long>(c)) *
                     k.pow(-static_cast<long>(c)));
    }
    return acc;
  };

  Poly out;
  for (unsigned j = 0; j <= p.m; ++j) {
    if (p.alphas[j].is_zero()) continue;
    for (unsigned l = 0; l <= j; ++l) {
      out += inner(l) * (p.alphas[j] * binomial(static_cast<long>(j), static_cast<long>(l)) *
                         shift.pow(static_cast<long>(j - l)));
    }
  }
  return out;
}

Poly b2_k1_explicit(std::size_t v, const GenFunParams& p) {
  p.validate();
  if (p.k != 1) throw ContractViolation("b2_k1_explicit requires k = 1");
  if (v == 0) return {};
  const Rat shift(-2, static_cast<long>(p.n));
  const auto vv = static_cast<long>(v);

  Rat scalar;
  for (unsigned j = 0; j <= p.m; ++j) {
    for (unsigned l = 0; l <= j; ++l) {
      Rat by_c;
      for (unsigned c = 0; c <= l; ++c) {
        by_c += binomial(vv, c + 1) * factorial(c + 1) * stirling2(l + 1, c + 1);
      }
      scalar += p.alphas[j] * binomial(static_cast<long>(j), static_cast<long>(l)) *
                shift.pow(static_cast<long>(j - l)) * by_c;
    }
  }
  const Poly shape = Poly::linear(Rat(1), Rat(-1)) *
                     Poly::linear(Rat(1), Rat(1)).pow(static_cast<unsigned>(v - 1));
  return shape * (scalar / Rat(2).pow(vv));
}

}  // namespace superosc
