#pragma once

#include <cstddef>
#include <vector>

#include "superosc/exp_series.hpp"
#include "superosc/poly.hpp"
#include "superosc/rational.hpp"

namespace superosc {

/// Parameters (m, k, n; alpha_0..alpha_m) shared by S1, S2, b1 and b2.
struct GenFunParams {
  unsigned m = 0;
  unsigned k = 0;
  unsigned n = 1;
  std::vector<Rat> alphas{Rat(1)};

  /// alphas has m+1 entries and n >= 1; ContractViolation otherwise.
  void validate() const;
};

/// Definitional S1: (1/k!) (t(1-x)/2)^k sum_j alpha_j sum_l C(j,l) (-2k/n)^{j-l}
///   lFl[k, ..., k; k+1, ..., k+1; ((1+x)/2) t].
ExpSeries s1_series(const GenFunParams& p, std::size_t order);

/// Definitional S2: same shape with lFl[k+1, ...; k, ...]. DomainError for
/// k = 0 with m >= 1.
ExpSeries s2_series(const GenFunParams& p, std::size_t order);

/// A closed form as displayed and the corrected form that matches the
/// definitional series.
struct ClosedFormPair {
  ExpSeries printed;
  ExpSeries corrected;
};

/// sum_v ((1+x)/2)^v / (v+k)^power * t^v/v!; power = 1 is the series of
/// int_0^1 e^{((1+x)/2) t u} u^{k-1} du. Requires k >= 1.
ExpSeries kummer_tail_series(unsigned k, unsigned power, std::size_t order);

/// S1 at m = 1. The printed form carries (alpha_1/k!)(t(1-x)/2)^k I_k; the
/// corrected one restores the factor k that 1F1[k; k+1] contributes.
ClosedFormPair s1_m1_closed(const GenFunParams& p, std::size_t order);

/// S1 at m = 2. The printed form has numerator 4nk^2 alpha_2, bare
/// ((1-x)/2)t prefactors and unscaled tail sums.
ClosedFormPair s1_m2_closed(const GenFunParams& p, std::size_t order);

/// S2 at m = 1 written with 1F1[k+1; k]; the printed prefactor lacks ^k.
ClosedFormPair s2_m1_closed(const GenFunParams& p, std::size_t order);

/// S2 at m = 2 with 1F1[k+1; k] and 2F2[k+1, k+1; k, k].
ClosedFormPair s2_m2_closed(const GenFunParams& p, std::size_t order);

/// S2 rewritten through Stirling numbers:
///   (1/k!) ((1-x)t/2)^k sum_j alpha_j sum_l C(j,l) (-2k/n)^{j-l} k^{-l} e^z
///     sum_c C(l,c) k^{l-c} sum_d S(c,d) z^d,   z = ((1+x)/2) t.
ExpSeries s2_stirling_closed(const GenFunParams& p, std::size_t order);

/// The k = 1 specialisation
///   ((1-x)t/2) sum_j alpha_j sum_l C(j,l) (-2/n)^{j-l} e^z sum_c S(l+1,c+1) z^c.
ExpSeries s2_k1_corollary(const GenFunParams& p, std::size_t order);

/// b2(v) = sum_j alpha_j sum_l C(j,l) (-2k/n)^{j-l} sum_c C(l,c)
///   sum_d C(v,d) d! S(c,d) / k^c ((1+x)/2)^d c_k(v-d, x).
Poly b2_explicit(std::size_t v, const GenFunParams& p);

/// b2(v) at k = 1 without the c_k:
///   (1-x) sum_j alpha_j sum_l C(j,l) (-2/n)^{j-l}
///     sum_c C(v,c+1) (c+1)! S(l+1,c+1) (1+x)^{v-1} / 2^v.
Poly b2_k1_explicit(std::size_t v, const GenFunParams& p);

}  // namespace superosc
