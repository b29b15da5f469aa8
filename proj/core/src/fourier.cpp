#include "fourier.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include <gmp.h>
#include <mpfr.h>

#include "superosc/errors.hpp"

namespace superosc::detail {

namespace {

class Big {
 public:
  explicit Big(mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }
  Big(const Big& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Big(Big&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  Big& operator=(const Big& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Big& operator=(Big&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Big() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

 private:
  mpfr_t v_;
};

struct Term {
  Big re;
  Big im;
  Big phase;
};

long log2_ceil(double v) { return v <= 1.0 ? 0 : static_cast<long>(std::ceil(std::log2(v))); }

}  // namespace

struct FourierSum::Impl {
  mpfr_prec_t prec = 0;
  std::vector<Term> terms;
};

FourierSum::FourierSum(unsigned n, double a, std::span<const double> phase_poly,
                       std::span<const std::complex<double>> weight_poly)
    : impl_(std::make_unique<Impl>()) {
  if (n == 0) throw ContractViolation("Fourier sum needs n >= 1");
  if (!std::isfinite(a)) throw DomainError("Fourier sum: non-finite a");

  // Bound on log2 of sum_j |c_j| |w(k_j)| decides how many digits cancel.
  double weight_bound = 0.0;
  for (const auto& w : weight_poly) weight_bound += std::abs(w.real()) + std::abs(w.imag());
  const double spread = std::abs(1.0 + a) / 2.0 + std::abs(1.0 - a) / 2.0;
  const long cancel_bits = static_cast<long>(std::ceil(n * std::log2(std::max(spread, 1.0))));
  const long bits = 96 + cancel_bits + log2_ceil(weight_bound) + log2_ceil(n + 1.0);
  impl_->prec = static_cast<mpfr_prec_t>(bits);
  const mpfr_prec_t prec = impl_->prec;

  Big alpha(prec), beta(prec);
  mpfr_set_d(alpha.get(), a, MPFR_RNDN);
  mpfr_set_d(beta.get(), a, MPFR_RNDN);
  mpfr_ui_sub(beta.get(), 1, beta.get(), MPFR_RNDN);
  mpfr_add_ui(alpha.get(), alpha.get(), 1, MPFR_RNDN);
  mpfr_div_2ui(alpha.get(), alpha.get(), 1, MPFR_RNDN);
  mpfr_div_2ui(beta.get(), beta.get(), 1, MPFR_RNDN);

  std::vector<Big> pow_alpha(n + 1, Big(prec));
  std::vector<Big> pow_beta(n + 1, Big(prec));
  mpfr_set_ui(pow_alpha[0].get(), 1, MPFR_RNDN);
  mpfr_set_ui(pow_beta[0].get(), 1, MPFR_RNDN);
  for (unsigned i = 1; i <= n; ++i) {
    mpfr_mul(pow_alpha[i].get(), pow_alpha[i - 1].get(), alpha.get(), MPFR_RNDN);
    mpfr_mul(pow_beta[i].get(), pow_beta[i - 1].get(), beta.get(), MPFR_RNDN);
  }

  mpz_t binom;
  mpz_init_set_ui(binom, 1);
  Big c(prec), k(prec), w_re(prec), w_im(prec);
  impl_->terms.reserve(n + 1);
  for (unsigned j = 0; j <= n; ++j) {
    if (j > 0) {
      mpz_mul_ui(binom, binom, n - j + 1);
      mpz_divexact_ui(binom, binom, j);
    }
    mpfr_set_z(c.get(), binom, MPFR_RNDN);
    mpfr_mul(c.get(), c.get(), pow_alpha[n - j].get(), MPFR_RNDN);
    mpfr_mul(c.get(), c.get(), pow_beta[j].get(), MPFR_RNDN);
    mpfr_set_si(k.get(), static_cast<long>(n) - 2 * static_cast<long>(j), MPFR_RNDN);
    mpfr_div_ui(k.get(), k.get(), n, MPFR_RNDN);

    // Horner for the complex weight polynomial at the real point k.
    mpfr_set_zero(w_re.get(), 1);
    mpfr_set_zero(w_im.get(), 1);
    for (auto it = weight_poly.rbegin(); it != weight_poly.rend(); ++it) {
      mpfr_mul(w_re.get(), w_re.get(), k.get(), MPFR_RNDN);
      mpfr_mul(w_im.get(), w_im.get(), k.get(), MPFR_RNDN);
      mpfr_add_d(w_re.get(), w_re.get(), it->real(), MPFR_RNDN);
      mpfr_add_d(w_im.get(), w_im.get(), it->imag(), MPFR_RNDN);
    }

    Term term{Big(prec), Big(prec), Big(prec)};
    mpfr_mul(term.re.get(), c.get(), w_re.get(), MPFR_RNDN);
    mpfr_mul(term.im.get(), c.get(), w_im.get(), MPFR_RNDN);
    for (auto it = phase_poly.rbegin(); it != phase_poly.rend(); ++it) {
      mpfr_mul(term.phase.get(), term.phase.get(), k.get(), MPFR_RNDN);
      mpfr_add_d(term.phase.get(), term.phase.get(), *it, MPFR_RNDN);
    }
    impl_->terms.push_back(std::move(term));
  }
  mpz_clear(binom);
}

FourierSum::~FourierSum() = default;
FourierSum::FourierSum(FourierSum&&) noexcept = default;
FourierSum& FourierSum::operator=(FourierSum&&) noexcept = default;

std::complex<double> FourierSum::operator()(double x) const {
  const mpfr_prec_t prec = impl_->prec;
  Big sum_re(prec), sum_im(prec), theta(prec), s(prec), c(prec), tmp(prec);
  for (const auto& term : impl_->terms) {
    if (mpfr_zero_p(term.re.get()) && mpfr_zero_p(term.im.get())) continue;
    mpfr_mul_d(theta.get(), term.phase.get(), x, MPFR_RNDN);
    mpfr_sin_cos(s.get(), c.get(), theta.get(), MPFR_RNDN);
    // (re + i im)(c + i s)
    mpfr_mul(tmp.get(), term.re.get(), c.get(), MPFR_RNDN);
    mpfr_add(sum_re.get(), sum_re.get(), tmp.get(), MPFR_RNDN);
    mpfr_mul(tmp.get(), term.im.get(), s.get(), MPFR_RNDN);
    mpfr_sub(sum_re.get(), sum_re.get(), tmp.get(), MPFR_RNDN);
    mpfr_mul(tmp.get(), term.re.get(), s.get(), MPFR_RNDN);
    mpfr_add(sum_im.get(), sum_im.get(), tmp.get(), MPFR_RNDN);
    mpfr_mul(tmp.get(), term.im.get(), c.get(), MPFR_RNDN);
    mpfr_add(sum_im.get(), sum_im.get(), tmp.get(), MPFR_RNDN);
  }
  return {mpfr_get_d(sum_re.get(), MPFR_RNDN), mpfr_get_d(sum_im.get(), MPFR_RNDN)};
}

std::vector<std::complex<double>> FourierSum::weights() const {
  std::vector<std::complex<double>> out;
  out.reserve(impl_->terms.size());
  for (const auto& term : impl_->terms) {
    out.emplace_back(mpfr_get_d(term.re.get(), MPFR_RNDN), mpfr_get_d(term.im.get(), MPFR_RNDN));
  }
  return out;
}

long FourierSum::precision_bits() const { return static_cast<long>(impl_->prec); }

}  // namespace superosc::detail
