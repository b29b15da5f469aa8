#include "superosc/classical.hpp"

#include <string>

#include "superosc/coefficients.hpp"
#include "superosc/combinatorics.hpp"
#include "superosc/errors.hpp"
#include "superosc/exp_series.hpp"
#include "superosc/hypergeometric.hpp"

namespace superosc {

Poly bernstein(unsigned k, unsigned v) {
  if (k > v) return {};
  return Poly::monomial(binomial(static_cast<long>(v), static_cast<long>(k)), k) *
         Poly::linear(Rat(1), Rat(-1)).pow(v - k);
}

void BiPoly::add_term(unsigned x_power, unsigned y_power, const Rat& c) {
  if (c.is_zero()) return;
  const Key key{x_power, y_power};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Rat BiPoly::coeff(unsigned x_power, unsigned y_power) const {
  const auto it = terms_.find({x_power, y_power});
  return it == terms_.end() ? Rat() : it->second;
}

BiPoly BiPoly::partial_x() const {
  BiPoly out;
  for (const auto& [key, c] : terms_) {
    if (key.first > 0) out.add_term(key.first - 1, key.second, c * Rat(key.first));
  }
  return out;
}

BiPoly BiPoly::partial_y() const {
  BiPoly out;
  for (const auto& [key, c] : terms_) {
    if (key.second > 0) out.add_term(key.first, key.second - 1, c * Rat(key.second));
  }
  return out;
}

Poly BiPoly::substitute(const Poly& x_of, const Poly& y_of) const {
  Poly out;
  for (const auto& [key, c] : terms_) out += x_of.pow(key.first) * y_of.pow(key.second) * c;
  return out;
}

std::string BiPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [key, c] : terms_) {
    if (!out.empty()) out += c.sign() < 0 ? " - " : " + ";
    else if (c.sign() < 0) out += "-";
    const Rat mag = abs(c);
    std::string mono;
    if (key.first > 0) mono += key.first == 1 ? "x" : "x^" + std::to_string(key.first);
    if (key.second > 0) {
      if (!mono.empty()) mono += "*";
      mono += key.second == 1 ? "y" : "y^" + std::to_string(key.second);
    }
    if (mono.empty()) out += mag.str();
    else if (mag == Rat(1)) out += mono;
    else out += mag.str() + "*" + mono;
  }
  return out;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, -c);
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly out;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    }
  }
  return out;
}

BiPoly operator*(BiPoly a, const Rat& c) {
  if (c.is_zero()) return {};
  for (auto& [key, v] : a.terms_) v *= c;
  return a;
}

BiPoly gould_hopper(unsigned n, unsigned j) {
  if (j == 0) throw DomainError("gould_hopper: j must be at least 1");
  BiPoly out;
  const Rat nf = factorial(n);
  for (unsigned s = 0; j * s <= n; ++s) {
    out.add_term(n - j * s, s, nf / (factorial(n - j * s) * factorial(s)));
  }
  return out;
}

Poly hermite(unsigned n) {
  Poly out;
  const Rat nf = factorial(n);
  for (unsigned s = 0; 2 * s <= n; ++s) {
    const unsigned e = n - 2 * s;
    Rat c = nf * Rat(2).pow(e) / (factorial(e) * factorial(s));
    if (s % 2 == 1) c = -c;
    out += Poly::monomial(c, e);
  }
  return out;
}

Poly hermite_via_gould_hopper(unsigned n) {
  return gould_hopper(n, 2).substitute(Poly::monomial(Rat(2), 1), Poly::constant(Rat(-1)));
}

Poly hermite_via_series(unsigned n) {
  // exp(-t^2): coefficient (-1)^s (2s)!/s! at index 2s.
  std::vector<Poly> gauss(n + 1);
  for (unsigned s = 0; 2 * s <= n; ++s) {
    Rat c = factorial(2 * s) / factorial(s);
    if (s % 2 == 1) c = -c;
    gauss[2 * s] = Poly::constant(c);
  }
  const ExpSeries product =
      series_mul(series_exp_linear(Poly::monomial(Rat(2), 1), n), ExpSeries(std::move(gauss)));
  return product.coeff(n);
}

Poly hermite_via_kummer(unsigned n) {
  const unsigned m = n / 2;
  const Poly z_squared = Poly::monomial(Rat(1), 2);
  const Rat sign = m % 2 == 0 ? Rat(1) : Rat(-1);
  if (n % 2 == 0) {
    const HyperSpec spec{{-Rat(m)}, {Rat(1, 2)}};
    return pfq_terminating(spec, z_squared) * (sign * factorial(n) / factorial(m));
  }
  const HyperSpec spec{{-Rat(m)}, {Rat(3, 2)}};
  return pfq_terminating(spec, z_squared) * Poly::x() *
         (sign * Rat(2) * factorial(n) / factorial(m));
}

IdentityReport hermite_conv_theorem(unsigned k, unsigned n) {
  if (k > n) throw ContractViolation("hermite_conv_theorem: k must not exceed n");
  const Poly lhs = Poly::linear(Rat(1, 2), Rat(-1, 2)).pow(k) *
                   hermite(n - k).compose(Poly::linear(Rat(1, 4), Rat(1, 4)));
  Poly sum;
  for (unsigned j = 0; 2 * j <= n; ++j) {
    Rat w = (factorial(j) * factorial(n - 2 * j)).inverse();
    if (j % 2 == 1) w = -w;
    sum += c_coeff(k, n - 2 * j) * w;
  }
  const Poly rhs = sum * (factorial(n) / binomial(static_cast<long>(n), static_cast<long>(k)));
  return compare_polys("hermite-conv", {{"k", static_cast<long>(k)}, {"n", static_cast<long>(n)}},
                       0, n, lhs, rhs);
}

}  // namespace superosc
