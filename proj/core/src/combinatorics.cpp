#include "superosc/combinatorics.hpp"

#include <string>

#include "superosc/errors.hpp"

namespace superosc {

Rat factorial(std::size_t n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rat(f, mpz_class(1));
}

Rat falling_factorial(long n, std::size_t k) {
  mpz_class acc = 1;
  for (std::size_t i = 0; i < k; ++i) acc *= mpz_class(n - static_cast<long>(i));
  return Rat(acc, mpz_class(1));
}

Rat binomial(long n, long k) {
  if (k < 0) return Rat();
  if (n >= 0) {
    if (k > n) return Rat();
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rat(c, mpz_class(1));
  }
  return falling_factorial(n, static_cast<std::size_t>(k)) / factorial(static_cast<std::size_t>(k));
}

Rat binomial(const Rat& beta, long k) {
  if (k < 0) return Rat();
  const auto kk = static_cast<std::size_t>(k);
  return pochhammer(beta - Rat(k) + Rat(1), kk) / factorial(kk);
}

Rat pochhammer(const Rat& beta, std::size_t v) {
  Rat acc(1);
  for (std::size_t j = 0; j < v; ++j) acc *= beta + Rat(j);
  return acc;
}

Poly falling_factorial_poly(std::size_t d) {
  Poly acc = Poly::constant(Rat(1));
  for (std::size_t i = 0; i < d; ++i) acc *= Poly::linear(-Rat(i), Rat(1));
  return acc;
}

StirlingTable::StirlingTable(std::size_t c_max) : rows_(c_max + 1) {
  rows_[0] = {Rat(1)};
  for (std::size_t c = 1; c <= c_max; ++c) {
    auto& row = rows_[c];
    row.assign(c + 1, Rat());
    const auto& prev = rows_[c - 1];
    for (std::size_t d = 1; d <= c; ++d) {
      Rat s = d < c ? prev[d] * Rat(d) : Rat();
      s += prev[d - 1];
      row[d] = std::move(s);
    }
  }
}

const Rat& StirlingTable::operator()(std::size_t c, std::size_t d) const {
  static const Rat zero;
  if (c > c_max()) {
    throw ContractViolation("StirlingTable: c = " + std::to_string(c) + " exceeds table size " +
                            std::to_string(c_max()));
  }
  return d > c ? zero : rows_[c][d];
}

Rat stirling2(std::size_t c, std::size_t d) {
  static const StirlingTable shared(64);
  if (c <= shared.c_max()) return shared(c, d);
  return StirlingTable(c)(c, d);
}

Rat stirling2_explicit(std::size_t c, std::size_t d) {
  Rat sum;
  for (std::size_t v = 0; v <= d; ++v) {
    // Rat::pow(0) is 1, so 0^0 = 1 falls out of the power.
    Rat term = binomial(static_cast<long>(d), static_cast<long>(v)) *
               Rat(d - v).pow(static_cast<long>(c));
    if (v % 2 == 1) term = -term;
    sum += term;
  }
  return sum / factorial(d);
}

}  // namespace superosc
