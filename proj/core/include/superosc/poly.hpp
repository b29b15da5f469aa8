#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "superosc/rational.hpp"

namespace superosc {

/// Dense univariate polynomial with rational coefficients; coefficient i
/// multiplies var^i. The zero polynomial has no stored coefficients and the
/// leading stored coefficient of any other polynomial is nonzero.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs);
  Poly(std::initializer_list<Rat> coeffs);

  static Poly constant(const Rat& c);
  static Poly monomial(const Rat& c, std::size_t degree);
  /// c0 + c1*x
  static Poly linear(const Rat& c0, const Rat& c1);
  static Poly x() { return monomial(Rat(1), 1); }

  /// Parses the format written by str(), e.g. "1/4 - 1/2*x + x^2".
  static Poly parse(std::string_view text, char var = 'x');

  bool is_zero() const { return coeffs_.empty(); }
  /// Throws ContractViolation for the zero polynomial.
  std::size_t degree() const;
  std::size_t size() const { return coeffs_.size(); }

  /// Coefficient of var^i; zero past the degree.
  Rat coeff(std::size_t i) const;
  std::span<const Rat> coefficients() const { return coeffs_; }

  Rat operator()(const Rat& at) const;
  double eval(double at) const;

  Poly derivative() const;
  /// this(inner(var)), by Horner's scheme.
  Poly compose(const Poly& inner) const;
  Poly pow(unsigned exponent) const;

  /// Canonical ascending-power string, e.g. "-2 + 4*z^2"; "0" for zero.
  std::string str(char var = 'x') const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rat& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
  friend Poly operator*(const Rat& c, Poly a) { return a *= c; }
  friend Poly operator-(Poly a);

  friend bool operator==(const Poly& a, const Poly& b) = default;

 private:
  void trim();

  std::vector<Rat> coeffs_;
};

}  // namespace superosc
