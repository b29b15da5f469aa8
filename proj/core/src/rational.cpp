#include "superosc/rational.hpp"

#include <cctype>
#include <cmath>
#include <string>

#include "superosc/errors.hpp"

namespace superosc {

Rat::Rat(long num, long den) : Rat(mpz_class(num), mpz_class(den)) {}

Rat::Rat(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DomainError("Rat: zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rat::Rat(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rat Rat::from_double(double value) {
  if (!std::isfinite(value)) throw DomainError("Rat::from_double: non-finite value");
  mpq_class q;
  mpq_set_d(q.get_mpq_t(), value);
  return Rat(std::move(q));
}

namespace {

bool is_integer_literal(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

mpz_class to_mpz(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rat Rat::parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  if (!is_integer_literal(num, true)) {
    throw UsageError("malformed rational '" + std::string(text) + "'");
  }
  if (slash == std::string_view::npos) return Rat(to_mpz(num), mpz_class(1));
  const std::string_view den = text.substr(slash + 1);
  if (!is_integer_literal(den, false)) {
    throw UsageError("malformed rational '" + std::string(text) + "'");
  }
  mpz_class d = to_mpz(den);
  if (d == 0) throw UsageError("zero denominator in '" + std::string(text) + "'");
  return Rat(to_mpz(num), d);
}

std::string Rat::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rat Rat::inverse() const {
  if (is_zero()) throw DomainError("Rat::inverse of zero");
  return Rat(value_.get_den(), value_.get_num());
}

Rat Rat::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rat(num, den);
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw DomainError("Rat: division by zero");
  value_ /= o.value_;
  return *this;
}

Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

}  // namespace superosc
