#include "superosc/exp_series.hpp"

#include <string>

#include "superosc/combinatorics.hpp"
#include "superosc/errors.hpp"

namespace superosc {

ExpSeries::ExpSeries(std::size_t order) : coeffs_(order + 1) {}

ExpSeries::ExpSeries(std::vector<Poly> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw ContractViolation("ExpSeries needs at least one coefficient");
}

ExpSeries ExpSeries::one(std::size_t order) { return constant(Poly::constant(Rat(1)), order); }

ExpSeries ExpSeries::constant(const Poly& c, std::size_t order) {
  ExpSeries s(order);
  s.coeffs_[0] = c;
  return s;
}

const Poly& ExpSeries::coeff(std::size_t v) const {
  if (v > order()) {
    throw ContractViolation("coefficient index " + std::to_string(v) + " exceeds series order " +
                            std::to_string(order()));
  }
  return coeffs_[v];
}

bool ExpSeries::is_zero() const {
  for (const auto& p : coeffs_) {
    if (!p.is_zero()) return false;
  }
  return true;
}

void ExpSeries::require_same_order(const ExpSeries& o) const {
  if (o.order() != order()) {
    throw ContractViolation("series order mismatch: " + std::to_string(order()) + " vs " +
                            std::to_string(o.order()));
  }
}

ExpSeries& ExpSeries::operator+=(const ExpSeries& o) {
  require_same_order(o);
  for (std::size_t v = 0; v < coeffs_.size(); ++v) coeffs_[v] += o.coeffs_[v];
  return *this;
}

ExpSeries& ExpSeries::operator-=(const ExpSeries& o) {
  require_same_order(o);
  for (std::size_t v = 0; v < coeffs_.size(); ++v) coeffs_[v] -= o.coeffs_[v];
  return *this;
}

ExpSeries& ExpSeries::operator*=(const Rat& c) {
  for (auto& p : coeffs_) p *= c;
  return *this;
}

ExpSeries& ExpSeries::operator*=(const Poly& c) {
  for (auto& p : coeffs_) p = p * c;
  return *this;
}

ExpSeries series_mul(const ExpSeries& a, const ExpSeries& b) {
  if (a.order() != b.order()) {
    throw ContractViolation("series_mul: order mismatch " + std::to_string(a.order()) + " vs " +
                            std::to_string(b.order()));
  }
  const std::size_t order = a.order();
  std::vector<Poly> out(order + 1);
  for (std::size_t v = 0; v <= order; ++v) {
    Poly acc;
    for (std::size_t i = 0; i <= v; ++i) {
      const Poly& ai = a.coeff(i);
      const Poly& bj = b.coeff(v - i);
      if (ai.is_zero() || bj.is_zero()) continue;
      acc += (ai * bj) * binomial(static_cast<long>(v), static_cast<long>(i));
    }
    out[v] = std::move(acc);
  }
  return ExpSeries(std::move(out));
}

ExpSeries series_exp_linear(const Poly& c, std::size_t order) {
  std::vector<Poly> out(order + 1);
  out[0] = Poly::constant(Rat(1));
  for (std::size_t v = 1; v <= order; ++v) out[v] = out[v - 1] * c;
  return ExpSeries(std::move(out));
}

ExpSeries series_shift_tk(const ExpSeries& a, std::size_t k) {
  if (k > a.order()) {
    throw ContractViolation("series_shift_tk: k = " + std::to_string(k) + " exceeds order " +
                            std::to_string(a.order()));
  }
  std::vector<Poly> out(a.order() + 1);
  for (std::size_t v = k; v <= a.order(); ++v) {
    // v!/(v-k)! = k! * C(v, k)
    out[v] = a.coeff(v - k) * falling_factorial(static_cast<long>(v), k);
  }
  return ExpSeries(std::move(out));
}

const Poly& b_extract(const ExpSeries& s, std::size_t v) { return s.coeff(v); }

std::optional<std::size_t> first_difference(const ExpSeries& a, const ExpSeries& b) {
  if (a.order() != b.order()) {
    throw ContractViolation("first_difference: order mismatch");
  }
  for (std::size_t v = 0; v <= a.order(); ++v) {
    if (a.coeff(v) != b.coeff(v)) return v;
  }
  return std::nullopt;
}

}  // namespace superosc
