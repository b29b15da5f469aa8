#include "superosc/supershift.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fourier.hpp"
#include "superosc/errors.hpp"

namespace superosc {

EntireFnSpec::EntireFnSpec(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  for (double c : coeffs_) {
    if (!std::isfinite(c)) throw DomainError("EntireFnSpec: non-finite coefficient");
  }
}

EntireFnSpec EntireFnSpec::parse(std::string_view text) {
  std::vector<double> coeffs;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const auto end = comma == std::string_view::npos ? text.size() : comma;
    const std::string item(text.substr(pos, end - pos));
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(item, &used);
    } catch (const std::exception&) {
      throw UsageError("malformed polynomial coefficient list '" + std::string(text) + "'");
    }
    if (used != item.size() || !std::isfinite(value)) {
      throw UsageError("malformed polynomial coefficient list '" + std::string(text) + "'");
    }
    coeffs.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return EntireFnSpec(std::move(coeffs));
}

std::complex<double> EntireFnSpec::operator()(std::complex<double> lambda) const {
  std::complex<double> acc(0.0, 0.0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * lambda + *it;
  return acc;
}

namespace {

std::complex<double> i_power(unsigned u) {
  switch (u % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

struct SumShape {
  std::vector<double> phase;
  std::vector<std::complex<double>> weight;
};

/// (i k)^e as a polynomial in k.
std::vector<std::complex<double>> i_k_power(unsigned e) {
  std::vector<std::complex<double>> w(e + 1, {0.0, 0.0});
  w[e] = i_power(e);
  return w;
}

std::vector<std::complex<double>> h_weight(const EntireFnSpec& h, WeightArgument weight) {
  std::vector<std::complex<double>> w;
  const auto& hc = h.coefficients();
  for (std::size_t u = 0; u < hc.size(); ++u) {
    w.push_back(weight == WeightArgument::imaginary ? hc[u] * i_power(static_cast<unsigned>(u))
                                                     : std::complex<double>(hc[u], 0.0));
  }
  return w;
}

SumShape shape_of(LimitKind kind, const SupershiftParams& params) {
  SumShape s;
  switch (kind) {
    case LimitKind::dpf:
      s.phase = {0.0, 1.0};
      s.weight = i_k_power(params.p);
      break;
    case LimitKind::z: {
      if (params.m == 0) throw ContractViolation("z sequence needs m >= 1");
      s.phase.assign(params.m + 1, 0.0);
      s.phase[params.m] = 1.0;
      s.weight = i_k_power(params.m * params.p);
      break;
    }
    case LimitKind::y:
      s.phase = params.g.coefficients();
      s.weight = h_weight(params.h, params.weight);
      break;
  }
  return s;
}

detail::FourierSum make_sum(LimitKind kind, const SupershiftParams& params, unsigned n) {
  const SumShape s = shape_of(kind, params);
  return detail::FourierSum(n, params.a, s.phase, s.weight);
}

}  // namespace

std::complex<double> supershift_eval(LimitKind kind, const SupershiftParams& params, unsigned n,
                                     double x) {
  return make_sum(kind, params, n)(x);
}

std::complex<double> dpf_eval(unsigned n, double a, double x, unsigned p) {
  SupershiftParams params;
  params.a = a;
  params.p = p;
  return supershift_eval(LimitKind::dpf, params, n, x);
}

std::complex<double> z_eval(unsigned n, double a, double x, unsigned m, unsigned p) {
  SupershiftParams params;
  params.a = a;
  params.m = m;
  params.p = p;
  return supershift_eval(LimitKind::z, params, n, x);
}

std::complex<double> y_eval(unsigned n, double a, double x, const EntireFnSpec& g,
                            const EntireFnSpec& h, WeightArgument weight) {
  SupershiftParams params;
  params.a = a;
  params.g = g;
  params.h = h;
  params.weight = weight;
  return supershift_eval(LimitKind::y, params, n, x);
}

std::vector<std::complex<double>> y_coefficients(unsigned n, double a, const EntireFnSpec& h,
                                                 WeightArgument weight) {
  SupershiftParams params;
  params.a = a;
  params.h = h;
  params.weight = weight;
  return make_sum(LimitKind::y, params, n).weights();
}

std::complex<double> supershift_limit(LimitKind kind, const SupershiftParams& params, double x) {
  const double a = params.a;
  switch (kind) {
    case LimitKind::dpf:
      return std::pow(std::complex<double>(0.0, a), static_cast<int>(params.p)) *
             std::polar(1.0, a * x);
    case LimitKind::z:
      return std::pow(std::complex<double>(0.0, a), static_cast<int>(params.m * params.p)) *
             std::polar(1.0, std::pow(a, static_cast<int>(params.m)) * x);
    case LimitKind::y: {
      const std::complex<double> at =
          params.weight == WeightArgument::imaginary ? std::complex<double>(0.0, a)
                                                     : std::complex<double>(a, 0.0);
      return params.h(at) * std::polar(1.0, params.g(a).real() * x);
    }
  }
  return {};
}

GridResult limit_profile(LimitKind kind, const SupershiftParams& params,
                         std::span<const unsigned> n_list, double x_lo, double x_hi,
                         std::size_t samples) {
  if (n_list.empty()) throw ContractViolation("limit_profile: empty n_list");
  GridResult out;
  out.xs = linspace(x_lo, x_hi, samples);
  for (double x : out.xs) out.limit.push_back(supershift_limit(kind, params, x));
  for (unsigned n : n_list) {
    const detail::FourierSum sum = make_sum(kind, params, n);
    std::vector<std::complex<double>> values;
    values.reserve(samples);
    double sup = 0.0;
    for (std::size_t s = 0; s < samples; ++s) {
      values.push_back(sum(out.xs[s]));
      sup = std::max(sup, std::abs(values.back() - out.limit[s]));
    }
    out.n_values.push_back(n);
    out.values.push_back(std::move(values));
    out.sup_error.push_back(sup);
  }
  return out;
}

}  // namespace superosc
