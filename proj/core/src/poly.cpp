#include "superosc/poly.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "superosc/errors.hpp"

namespace superosc {

Poly::Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<Rat> coeffs) : coeffs_(coeffs) { trim(); }

Poly Poly::constant(const Rat& c) { return Poly({c}); }

Poly Poly::monomial(const Rat& c, std::size_t degree) {
  if (c.is_zero()) return {};
  std::vector<Rat> v(degree + 1);
  v[degree] = c;
  return Poly(std::move(v));
}

Poly Poly::linear(const Rat& c0, const Rat& c1) { return Poly({c0, c1}); }

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::size_t Poly::degree() const {
  if (coeffs_.empty()) throw ContractViolation("degree of the zero polynomial is undefined");
  return coeffs_.size() - 1;
}

Rat Poly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rat(); }

Rat Poly::operator()(const Rat& at) const {
  Rat acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

double Poly::eval(double at) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + it->to_double();
  return acc;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rat> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * Rat(i);
  return Poly(std::move(d));
}

Poly Poly::compose(const Poly& inner) const {
  Poly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * inner;
    acc += Poly::constant(*it);
  }
  return acc;
}

Poly Poly::pow(unsigned exponent) const {
  Poly result = Poly::constant(Rat(1));
  Poly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rat> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rat& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& r : coeffs_) r *= c;
  return *this;
}

Poly operator-(Poly a) {
  for (auto& r : a.coeffs_) r = -r;
  return a;
}

std::string Poly::str(char var) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rat& c = coeffs_[i];
    if (c.is_zero()) continue;
    const Rat mag = abs(c);
    if (first) {
      if (c.sign() < 0) out += '-';
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    first = false;
    if (i == 0) {
      out += mag.str();
      continue;
    }
    if (mag != Rat(1)) out += mag.str() + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

Poly Poly::parse(std::string_view text, char var) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  if (s.empty()) throw UsageError("empty polynomial");

  const auto fail = [&]() { throw UsageError("malformed polynomial '" + std::string(text) + "'"); };

  std::vector<Rat> coeffs;
  std::size_t pos = 0;
  while (pos < s.size()) {
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
      negative = s[pos] == '-';
      ++pos;
    } else if (pos != 0) {
      fail();
    }
    std::size_t end = pos;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    const std::string_view term(s.data() + pos, end - pos);
    if (term.empty()) fail();

    Rat c(1);
    std::size_t power = 0;
    const auto var_at = term.find(var);
    if (var_at == std::string_view::npos) {
      c = Rat::parse(term);
    } else {
      if (var_at > 0) {
        if (term[var_at - 1] != '*' || var_at < 2) fail();
        c = Rat::parse(term.substr(0, var_at - 1));
      }
      const std::string_view rest = term.substr(var_at + 1);
      if (rest.empty()) {
        power = 1;
      } else {
        if (rest[0] != '^' || rest.size() < 2) fail();
        for (char ch : rest.substr(1)) {
          if (!std::isdigit(static_cast<unsigned char>(ch))) fail();
        }
        power = std::stoul(std::string(rest.substr(1)));
      }
    }
    if (negative) c = -c;
    if (coeffs.size() <= power) coeffs.resize(power + 1);
    coeffs[power] += c;
    pos = end;
  }
  return Poly(std::move(coeffs));
}

}  // namespace superosc
