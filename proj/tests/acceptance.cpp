// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "superosc/coefficients.hpp"
#include "superosc/combinatorics.hpp"
#include "superosc/hypergeometric.hpp"
#include "superosc/identity.hpp"
#include "superosc/supershift.hpp"

#ifdef SUPEROSC_HAVE_CLI
#include <nlohmann/json.hpp>

#include "commands.hpp"
#endif

using namespace superosc;

namespace {

struct Verdict {
  bool pass;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

// 1. Exact identity suite.
Verdict exact_identities() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto reports = run_suite("all", SweepConfig{12, 10, 6});
  const double elapsed = seconds_since(t0);

  std::size_t mismatches = 0, flagged = 0, unflagged_printed = 0;
  for (const auto& r : reports) {
    if (r.status == IdentityStatus::mismatch) ++mismatches;
    if (r.status == IdentityStatus::printed_form_mismatch_corrected_form_verified) ++flagged;
    // Printed S1 forms must be flagged for k >= 2 (every grid alpha is nonzero).
    if (r.identity == "s1-m1" || r.identity == "s1-m2") {
      const long k = std::get<long>(r.params[1].second);
      if (k >= 2 && r.status != IdentityStatus::printed_form_mismatch_corrected_form_verified) ++unflagged_printed;
    }
  }
  std::ostringstream d;
  d << reports.size() << " checks, " << mismatches << " mismatches, " << flagged
    << " printed-form flags, " << unflagged_printed << " unflagged printed S1 forms, "
    << fmt("%.1f s", elapsed);
  return {mismatches == 0 && unflagged_printed == 0 && elapsed < 60.0, d.str()};
}

// 2. Stirling numbers three ways.
Verdict stirling_oracle() {
  const StirlingTable table(10);
  std::size_t disagreements = 0, checked = 0;
  for (unsigned c = 0; c <= 10; ++c) {
    for (unsigned d = 0; d <= c; ++d) {
      const Rat brute(static_cast<unsigned long>(oracle::count_set_partitions(c, d)));
      ++checked;
      if (table(c, d) != brute || stirling2_explicit(c, d) != brute) ++disagreements;
    }
  }
  return {disagreements == 0, std::to_string(checked) + " entries, " + std::to_string(disagreements) + " disagreements"};
}

// 3. Convergence of F_n to e^{iax}.
Verdict convergence() {
  const auto t0 = std::chrono::steady_clock::now();
  const std::array<unsigned, 4> ns{100, 200, 400, 800};
  const GridResult two = convergence_profile(ns, 2.0, -1.0, 1.0, 101);
  const GridResult one = convergence_profile(ns, 1.0, -1.0, 1.0, 101);
  const double elapsed = seconds_since(t0);
  bool ok = elapsed < 5.0;
  std::ostringstream d;
  d << "ratios";
  for (std::size_t i = 0; i + 1 < ns.size(); ++i) {
    const double ratio = two.sup_error[i] / two.sup_error[i + 1];
    ok = ok && ratio >= 1.8 && ratio <= 2.2;
    d << ' ' << fmt("%.4f", ratio);
  }
  const double worst_one = *std::max_element(one.sup_error.begin(), one.sup_error.end());
  ok = ok && worst_one < 1e-12;
  d << "; a=1 max error " << fmt("%.2e", worst_one) << "; " << fmt("%.2f s", elapsed);
  return {ok, d.str()};
}

// 4. Product form against Fourier-sum form.
Verdict dual_evaluation() {
  std::mt19937 rng(20240501);
  std::uniform_int_distribution<unsigned> n_dist(1, 200);
  std::uniform_real_distribution<double> a_dist(-4.0, 4.0), x_dist(-3.0, 3.0);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const unsigned n = n_dist(rng);
    const double a = a_dist(rng), x = x_dist(rng);
    const auto p = f_eval(n, a, x);
    const auto f = f_eval_fourier(n, a, x);
    worst = std::max(worst, std::abs(p - f) / std::abs(p));
  }
  return {worst <= 1e-10, "100 points, worst relative difference " + fmt("%.2e", worst)};
}

// 5. Kummer integral against the series.
Verdict kummer() {
  double worst = 0.0;
  for (long k = 1; k <= 5; ++k) {
    for (int u = -4; u <= 4; ++u) {
      const double q = kummer_integral(Rat(k), Rat(k + 1), u);
      const double s = pfq_eval_float(HyperSpec{{Rat(k)}, {Rat(k + 1)}}, u);
      worst = std::max(worst, std::abs(q - s));
    }
  }
  return {worst <= 1e-9, "45 points, worst absolute difference " + fmt("%.2e", worst)};
}

// 6. Supershift sweep and reduction chains.
Verdict supershift(std::string& note) {
  const std::array<unsigned, 3> ns{50, 100, 200};
  SupershiftParams params{1.5, 0, 1, EntireFnSpec::parse("0,0,1"), EntireFnSpec::parse("1,1"),
                          WeightArgument::real};
  const GridResult real = limit_profile(LimitKind::y, params, ns, -0.5, 0.5, 101);
  params.weight = WeightArgument::imaginary;
  const GridResult imag = limit_profile(LimitKind::y, params, ns, -0.5, 0.5, 101);

  const SupershiftParams plain{1.5, 0, 1, EntireFnSpec::identity(), EntireFnSpec::one()};
  double chain = 0.0;
  for (unsigned n : {10u, 50u, 100u, 200u}) {
    for (double x : linspace(-0.5, 0.5, 101)) {
      const auto f = f_eval(n, 1.5, x);
      const auto y = y_eval(n, 1.5, x, plain.g, plain.h);
      const auto z = z_eval(n, 1.5, x, 1, 0);
      const auto dp = dpf_eval(n, 1.5, x, 0);
      chain = std::max({chain, std::abs(y - z), std::abs(z - dp), std::abs(dp - f)});
    }
  }
  std::ostringstream d;
  d << "h(a)e^{ig(a)x} sup errors";
  for (double e : real.sup_error) d << ' ' << fmt("%.4e", e);
  d << "; reduction chain max gap " << fmt("%.2e", chain);

  std::ostringstream n;
  n << "h(i k_j) weights against h(ia)e^{ig(a)x}:";
  for (double e : imag.sup_error) n << ' ' << fmt("%.4e", e);
  n << (strictly_decreasing(imag.sup_error) ? " (strictly decreasing)" : " (not monotone)");
  note = n.str();
  return {strictly_decreasing(real.sup_error) && chain < 1e-12, d.str()};
}

// 7. CLI goldens, report schema and exit codes.
Verdict cli_contract() {
#ifdef SUPEROSC_HAVE_CLI
  const auto run = [](std::vector<std::string> args, std::string* out_text = nullptr) {
    std::ostringstream out, err;
    const int code = cli::run_cli(args, out, err);
    if (out_text) *out_text = out.str();
    return code;
  };
  std::vector<std::string> failures;

  std::string first, second;
  const int c1 = run({"coeffs", "--n", "2", "--a", "3"}, &first);
  run({"coeffs", "--n", "2", "--a", "3"}, &second);
  if (c1 != 0 || first != "k,c\n0,4\n1,-4\n2,1\n" || first != second) failures.push_back("coeffs golden");

  std::string reports;
  if (run({"verify", "--suite", "all"}, &reports) != 0) failures.push_back("verify all exit 0");
  std::istringstream in(reports);
  std::size_t count = 0;
  for (std::string line; std::getline(in, line); ++count) {
    const auto j = nlohmann::json::parse(line, nullptr, false);
    const bool ok = j.is_object() && j.size() == 5 && j.value("identity", nlohmann::json()).is_string() &&
                    j["params"].is_object() && j["order"].is_number_integer() && j["status"].is_string() &&
                    (j["first_divergence"].is_null() ||
                     (j["first_divergence"].is_object() && j["first_divergence"]["v"].is_number_integer() &&
                      j["first_divergence"]["lhs"].is_string() && j["first_divergence"]["rhs"].is_string())) &&
                    (j["status"] == "verified") == j["first_divergence"].is_null();
    if (!ok) {
      failures.push_back("schema: " + line);
      break;
    }
  }
  if (count == 0) failures.push_back("verify produced no reports");

  if (run({"verify", "--suite", "s1-m1", "--strict"}) != 1) failures.push_back("exit 1 on strict printed mismatch");
  if (run({"verify", "--suite", "no-such"}) != 2) failures.push_back("exit 2 on unknown suite");
  if (run({"eval", "--n", "3", "--x-min", "1", "--x-max", "0"}) != 2) failures.push_back("exit 2 on bad range");

  std::string detail = std::to_string(count) + " reports schema-checked";
  for (const auto& f : failures) detail += "; failed: " + f;
  return {failures.empty(), detail};
#else
  return {false, "CLI not built (SUPEROSC_BUILD_TOOLS=OFF)"};
#endif
}

}  // namespace

int main() {
  std::string supershift_note;
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"exact identity suite", exact_identities},
      {"Stirling three-way oracle", stirling_oracle},
      {"superoscillation convergence", convergence},
      {"product vs Fourier-sum evaluation", dual_evaluation},
      {"Kummer integral vs series", kummer},
      {"supershift sweeps", [&] { return supershift(supershift_note); }},
      {"CLI goldens, schema, exit codes", cli_contract},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v{false, ""};
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s criterion %zu (%s): %s\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                v.detail.c_str());
    if (!v.pass) ++failures;
  }
  std::printf("INFO %s\n", supershift_note.c_str());
  std::fflush(stdout);
  return failures == 0 ? 0 : 1;
}
