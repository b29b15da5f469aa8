#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "superosc/poly.hpp"

namespace superosc {

/// Default truncation order for identity checks.
inline constexpr std::size_t kDefaultOrder = 12;

/// Truncated exponential power series in t with polynomial coefficients:
///   sum_{v=0}^{order} b_v t^v / v!
/// Every generating function in the library lives in this representation,
/// so products are binomial convolutions of the b_v.
class ExpSeries {
 public:
  /// The zero series of the given order.
  explicit ExpSeries(std::size_t order);
  /// Takes b_0..b_V; throws ContractViolation on an empty list.
  explicit ExpSeries(std::vector<Poly> coeffs);

  static ExpSeries one(std::size_t order);
  static ExpSeries constant(const Poly& c, std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  /// b_v; throws ContractViolation when v > order().
  const Poly& coeff(std::size_t v) const;
  const std::vector<Poly>& coefficients() const { return coeffs_; }
  bool is_zero() const;

  ExpSeries& operator+=(const ExpSeries& o);
  ExpSeries& operator-=(const ExpSeries& o);
  ExpSeries& operator*=(const Rat& c);
  ExpSeries& operator*=(const Poly& c);

  friend ExpSeries operator+(ExpSeries a, const ExpSeries& b) { return a += b; }
  friend ExpSeries operator-(ExpSeries a, const ExpSeries& b) { return a -= b; }
  friend ExpSeries operator*(ExpSeries a, const Rat& c) { return a *= c; }
  friend ExpSeries operator*(const Rat& c, ExpSeries a) { return a *= c; }
  friend ExpSeries operator*(ExpSeries a, const Poly& c) { return a *= c; }
  friend ExpSeries operator*(const Poly& c, ExpSeries a) { return a *= c; }

  friend bool operator==(const ExpSeries& a, const ExpSeries& b) = default;

 private:
  void require_same_order(const ExpSeries& o) const;

  std::vector<Poly> coeffs_;
};

/// Binomial-convolution product (A*B)_v = sum_i C(v,i) a_i b_{v-i}.
ExpSeries series_mul(const ExpSeries& a, const ExpSeries& b);

/// Series of exp(c*t): b_v = c^v.
ExpSeries series_exp_linear(const Poly& c, std::size_t order);

/// t^k * A: b_v = v!/(v-k)! * a_{v-k} for v >= k, zero below.
ExpSeries series_shift_tk(const ExpSeries& a, std::size_t k);

/// Coefficient b_v (alias of ExpSeries::coeff, named after its role).
const Poly& b_extract(const ExpSeries& s, std::size_t v);

/// Smallest v with a_v != b_v, or nullopt when the series agree up to the
/// common order.
std::optional<std::size_t> first_difference(const ExpSeries& a, const ExpSeries& b);

}  // namespace superosc
