#pragma once

#include <cstddef>
#include <vector>

#include "superosc/poly.hpp"
#include "superosc/rational.hpp"

namespace superosc {

Rat factorial(std::size_t n);

/// n (n-1) ... (n-k+1); 1 for k = 0.
Rat falling_factorial(long n, std::size_t k);

/// C(n, k) = n (n-1) ... (n-k+1) / k! for every integer n and k >= 0, and 0
/// for k < 0. For natural n this vanishes when k > n, which is the
/// zero-extension the superoscillation coefficients rely on.
Rat binomial(long n, long k);

/// Generalized binomial C(beta, k) = (beta-k+1)^{rising k} / k! for
/// rational beta; 0 for k < 0.
Rat binomial(const Rat& beta, long k);

/// Rising factorial beta (beta+1) ... (beta+v-1); the empty product for
/// v = 0 is 1 for every beta, including beta = 1.
Rat pochhammer(const Rat& beta, std::size_t v);

/// x (x-1) ... (x-d+1) as a polynomial in x.
Poly falling_factorial_poly(std::size_t d);

/// Memoized triangle of Stirling numbers of the second kind, filled once
/// from S(c,d) = d S(c-1,d) + S(c-1,d-1). Read-only after construction.
class StirlingTable {
 public:
  explicit StirlingTable(std::size_t c_max);

  std::size_t c_max() const { return rows_.size() - 1; }
  /// S(c, d); zero for d > c. Requires c <= c_max().
  const Rat& operator()(std::size_t c, std::size_t d) const;

 private:
  std::vector<std::vector<Rat>> rows_;
};

/// S(c, d) from a shared table (grown on demand for large c).
Rat stirling2(std::size_t c, std::size_t d);

/// (1/d!) sum_v (-1)^v C(d,v) (d-v)^c with 0^0 = 1.
Rat stirling2_explicit(std::size_t c, std::size_t d);

}  // namespace superosc
