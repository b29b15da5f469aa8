#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>

#include "superosc/poly.hpp"
#include "superosc/rational.hpp"
#include "superosc/report.hpp"

namespace superosc {

/// B_k^v(y) = C(v,k) y^k (1-y)^{v-k} as a polynomial in y; zero for k > v.
Poly bernstein(unsigned k, unsigned v);

/// Sparse bivariate polynomial sum coef * x^i * y^s with no stored zeros.
class BiPoly {
 public:
  using Key = std::pair<unsigned, unsigned>;  // (power of x, power of y)

  BiPoly() = default;

  void add_term(unsigned x_power, unsigned y_power, const Rat& c);
  Rat coeff(unsigned x_power, unsigned y_power) const;
  const std::map<Key, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  BiPoly partial_x() const;
  BiPoly partial_y() const;
  /// p(x_of(z), y_of(z)) as a univariate polynomial.
  Poly substitute(const Poly& x_of, const Poly& y_of) const;

  std::string str() const;

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(BiPoly a, const Rat& c);
  friend bool operator==(const BiPoly& a, const BiPoly& b) = default;

 private:
  std::map<Key, Rat> terms_;
};

/// H_n^{(j)}(x, y) = n! sum_{s <= n/j} x^{n-js} y^s / ((n-js)! s!), the
/// coefficients of exp(xt + y t^j). DomainError for j = 0.
BiPoly gould_hopper(unsigned n, unsigned j);

/// Hermite H_n(z) = n! sum_s (-1)^s (2z)^{n-2s} / ((n-2s)! s!).
Poly hermite(unsigned n);

/// H_n^{(2)}(2z, -1).
Poly hermite_via_gould_hopper(unsigned n);

/// Coefficient of t^n/n! in exp(2zt - t^2), by series multiplication.
Poly hermite_via_series(unsigned n);

/// H_{2m} = (-1)^m (2m)!/m! 1F1[-m; 1/2; z^2],
/// H_{2m+1} = (-1)^m 2 (2m+1)! z / m! 1F1[-m; 3/2; z^2].
Poly hermite_via_kummer(unsigned n);

/// Checks ((1-x)/2)^k H_{n-k}((1+x)/4)
///   = (n!/C(n,k)) sum_{j <= n/2} (-1)^j c_k(n-2j, x) / (j! (n-2j)!).
/// ContractViolation for k > n.
IdentityReport hermite_conv_theorem(unsigned k, unsigned n);

}  // namespace superosc
