#include <array>
#include <cmath>
#include <complex>

#include <gtest/gtest.h>

#include "superosc/coefficients.hpp"
#include "superosc/errors.hpp"
#include "superosc/supershift.hpp"

using namespace superosc;

namespace {

const std::complex<double> I(0.0, 1.0);

double sup_gap(const std::function<std::complex<double>(double)>& f,
               const std::function<std::complex<double>(double)>& g, double lo, double hi) {
  double sup = 0;
  for (double x : linspace(lo, hi, 41)) sup = std::max(sup, std::abs(f(x) - g(x)));
  return sup;
}

}  // namespace

TEST(EntireFnSpec, ParseAndEvaluate) {
  const EntireFnSpec g = EntireFnSpec::parse("0,0,1");
  EXPECT_EQ(g(2.0), std::complex<double>(4.0, 0.0));
  EXPECT_EQ(g(I), std::complex<double>(-1.0, 0.0));
  EXPECT_EQ(EntireFnSpec::parse("1, -0.5").coefficients(), (std::vector<double>{1.0, -0.5}));
  EXPECT_EQ(EntireFnSpec::identity()(3.0), std::complex<double>(3.0, 0.0));
  EXPECT_EQ(EntireFnSpec::one()(3.0), std::complex<double>(1.0, 0.0));
  for (const char* bad : {"", "x", "1,,2", "1,", "nan"}) EXPECT_THROW(EntireFnSpec::parse(bad), UsageError) << bad;
}

TEST(Dpf, ReducesToF) {
  for (unsigned n : {1u, 10u, 120u}) {
    for (double x : {-2.5, 0.0, 1.3}) {
      EXPECT_LT(std::abs(dpf_eval(n, 2.5, x, 0) - f_eval(n, 2.5, x)), 1e-12);
    }
  }
}

TEST(Dpf, AOneIsExact) {
  for (unsigned p = 0; p <= 4; ++p) {
    for (double x : {-1.0, 0.4, 2.0}) {
      EXPECT_LT(std::abs(dpf_eval(50, 1.0, x, p) - std::pow(I, p) * std::exp(I * x)), 1e-12);
    }
  }
}

TEST(Dpf, ConvergesToDerivativeLimit) {
  std::array<double, 3> errors{};
  const std::array<unsigned, 3> ns{100, 200, 400};
  for (std::size_t i = 0; i < ns.size(); ++i) {
    errors[i] = sup_gap([&](double x) { return dpf_eval(ns[i], 2.0, x, 1); },
                        [](double x) { return 2.0 * I * std::exp(2.0 * I * x); }, -1.0, 1.0);
  }
  EXPECT_TRUE(strictly_decreasing(errors));
}

TEST(ZEval, Reductions) {
  for (double x : {-1.5, 0.2, 2.2}) {
    EXPECT_LT(std::abs(z_eval(40, 1.7, x, 1, 0) - f_eval(40, 1.7, x)), 1e-12);
    for (unsigned p = 0; p <= 3; ++p) EXPECT_LT(std::abs(z_eval(40, 1.7, x, 1, p) - dpf_eval(40, 1.7, x, p)), 1e-12);
  }
}

TEST(ZEval, ConvergesForSquare) {
  const SupershiftParams params{1.5, 1, 2};
  const std::array<unsigned, 3> ns{50, 100, 200};
  const GridResult r = limit_profile(LimitKind::z, params, ns, -1.0, 1.0, 101);
  EXPECT_TRUE(strictly_decreasing(r.sup_error));
  EXPECT_LT(std::abs(supershift_limit(LimitKind::z, params, 0.5) - (1.5 * I) * (1.5 * I) * std::exp(I * 2.25 * 0.5)),
            1e-15);
}

TEST(YEval, Reductions) {
  const EntireFnSpec id = EntireFnSpec::identity(), one = EntireFnSpec::one();
  for (double x : {-1.0, 0.0, 0.9}) {
    for (auto w : {WeightArgument::imaginary, WeightArgument::real}) {
      EXPECT_LT(std::abs(y_eval(30, 2.0, x, id, one, w) - f_eval(30, 2.0, x)), 1e-12);
      EXPECT_EQ(y_eval(30, 2.0, x, id, EntireFnSpec({0.0}), w), std::complex<double>(0.0, 0.0));
    }
  }
}

TEST(YEval, CoefficientsExposeWeights) {
  const EntireFnSpec h = EntireFnSpec::parse("1,1");
  const auto e = y_coefficients(4, 1.5, h);
  ASSERT_EQ(e.size(), 5u);
  for (unsigned j = 0; j <= 4; ++j) {
    const double c = c_coeff_at(j, 4, Rat(3, 2)).to_double();
    EXPECT_LT(std::abs(e[j] - c * (1.0 + I * wavenumber(j, 4))), 1e-14);
  }
  const auto r = y_coefficients(4, 1.5, h, WeightArgument::real);
  for (unsigned j = 0; j <= 4; ++j) {
    EXPECT_LT(std::abs(r[j] - c_coeff_at(j, 4, Rat(3, 2)).to_double() * (1.0 + wavenumber(j, 4))), 1e-14);
  }
}

TEST(YEval, SupershiftConvergesBothWeightConventions) {
  const std::array<unsigned, 3> ns{50, 100, 200};
  for (auto w : {WeightArgument::real, WeightArgument::imaginary}) {
    const SupershiftParams params{1.5, 0, 1, EntireFnSpec::parse("0,0,1"), EntireFnSpec::parse("1,1"), w};
    const GridResult r = limit_profile(LimitKind::y, params, ns, -0.5, 0.5, 101);
    EXPECT_TRUE(strictly_decreasing(r.sup_error));
    EXPECT_LT(r.sup_error.back(), r.sup_error.front());
  }
  const SupershiftParams real{1.5, 0, 1, EntireFnSpec::parse("0,0,1"), EntireFnSpec::parse("1,1"), WeightArgument::real};
  EXPECT_LT(std::abs(supershift_limit(LimitKind::y, real, 0.3) - 2.5 * std::exp(I * 2.25 * 0.3)), 1e-15);
  SupershiftParams imag = real;
  imag.weight = WeightArgument::imaginary;
  EXPECT_LT(std::abs(supershift_limit(LimitKind::y, imag, 0.3) - (1.0 + 1.5 * I) * std::exp(I * 2.25 * 0.3)), 1e-15);
}

TEST(LimitProfile, AOneCollapses) {
  const std::array<unsigned, 3> ns{5, 10, 20};
  for (auto kind : {LimitKind::dpf, LimitKind::z, LimitKind::y}) {
    const SupershiftParams params{1.0, 2, 3, EntireFnSpec::parse("0,1,1"), EntireFnSpec::parse("2,0,1")};
    for (double e : limit_profile(kind, params, ns, -1.0, 1.0, 21).sup_error) EXPECT_LT(e, 1e-12);
  }
}

TEST(LimitProfile, SingleN) {
  const std::array<unsigned, 1> ns{64};
  const GridResult r = limit_profile(LimitKind::dpf, SupershiftParams{}, ns, -1.0, 1.0, 11);
  EXPECT_EQ(r.sup_error.size(), 1u);
  EXPECT_EQ(r.values.size(), 1u);
  EXPECT_EQ(r.values[0].size(), 11u);
  EXPECT_THROW(limit_profile(LimitKind::dpf, SupershiftParams{}, std::span<const unsigned>{}, -1.0, 1.0, 11),
               ContractViolation);
}

TEST(LimitProfile, ReductionChain) {
  const SupershiftParams y_params{2.0, 0, 1, EntireFnSpec::identity(), EntireFnSpec::one()};
  for (unsigned n : {10u, 100u, 200u}) {
    for (double x : linspace(-1.0, 1.0, 21)) {
      const auto f = f_eval(n, 2.0, x);
      EXPECT_LT(std::abs(supershift_eval(LimitKind::y, y_params, n, x) - f), 1e-12);
      EXPECT_LT(std::abs(supershift_eval(LimitKind::z, y_params, n, x) - f), 1e-12);
      EXPECT_LT(std::abs(supershift_eval(LimitKind::dpf, y_params, n, x) - f), 1e-12);
    }
  }
}
