#include "commands.hpp"

#include <complex>
#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "superosc/classical.hpp"
#include "superosc/coefficients.hpp"
#include "superosc/combinatorics.hpp"
#include "superosc/errors.hpp"
#include "superosc/exp_series.hpp"
#include "superosc/genfun.hpp"
#include "superosc/grid.hpp"
#include "superosc/identity.hpp"
#include "superosc/supershift.hpp"

namespace superosc::cli {
namespace {

using Cell = std::variant<long, double, std::string>;

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;
};

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string cell_text(const Cell& c) {
  if (const auto* i = std::get_if<long>(&c)) return std::to_string(*i);
  if (const auto* d = std::get_if<double>(&c)) return format_double(*d);
  return std::get<std::string>(c);
}

void write_csv(const Table& t, std::ostream& os) {
  for (std::size_t i = 0; i < t.header.size(); ++i) os << (i ? "," : "") << t.header[i];
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << cell_text(row[i]);
    os << '\n';
  }
}

// One JSON object per row.
void write_json(const Table& t, std::ostream& os) {
  for (const auto& row : t.rows) {
    nlohmann::ordered_json obj;
    for (std::size_t i = 0; i < row.size(); ++i) {
      std::visit([&](const auto& v) { obj[t.header[i]] = v; }, row[i]);
    }
    os << obj.dump() << '\n';
  }
}

struct Common {
  std::string format = "csv";
  std::string out_path;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  sub->add_option("--out", c.out_path, "Write to PATH instead of standard output");
}

// Sends the output of `emit` to --out PATH or to `out`.
void with_sink(const Common& c, std::ostream& out, const std::function<void(std::ostream&)>& emit) {
  if (c.out_path.empty()) {
    emit(out);
    return;
  }
  std::ofstream file(c.out_path, std::ios::binary);
  if (!file) throw UsageError("cannot open '" + c.out_path + "' for writing");
  emit(file);
}

void emit_table(const Common& c, const Table& t, std::ostream& out) {
  with_sink(c, out, [&](std::ostream& os) {
    if (c.format == "json") write_json(t, os);
    else write_csv(t, os);
  });
}

void require_range(double lo, double hi) {
  if (!(lo < hi)) throw UsageError("--x-min must be smaller than --x-max");
}

std::vector<Rat> parse_rat_list(const std::string& text) {
  std::vector<Rat> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(Rat::parse(text.substr(start, comma - start)));
    if (comma == std::string::npos) return out;
    start = comma + 1;
  }
}

// --- coeffs ---------------------------------------------------------------

struct CoeffsOpts {
  long n = 0;
  std::optional<long> k;
  std::optional<long> k_min;
  std::optional<long> k_max;
  std::optional<std::string> a;
  Common common;
};

void add_coeffs(CLI::App& app, CoeffsOpts& o) {
  auto* sub = app.add_subcommand("coeffs", "Table of c_k(n, a), or of c_k(n, x) without --a");
  sub->add_option("--n", o.n, "Sequence index n")->required()->check(CLI::NonNegativeNumber);
  auto* k = sub->add_option("--k", o.k, "Single index k");
  auto* k_min = sub->add_option("--k-min", o.k_min, "First k (default 0)");
  auto* k_max = sub->add_option("--k-max", o.k_max, "Last k (default n)");
  k->excludes(k_min)->excludes(k_max);
  sub->add_option("--a", o.a, "Rational value of a, as p or p/q");
  add_common(sub, o.common);
}

int run_coeffs(const CoeffsOpts& o, std::ostream& out) {
  const std::optional<Rat> a = o.a ? std::optional<Rat>(Rat::parse(*o.a)) : std::nullopt;
  const long lo = o.k ? *o.k : o.k_min.value_or(0);
  const long hi = o.k ? *o.k : o.k_max.value_or(o.n);
  Table t{{"k", "c"}, {}};
  for (long k = std::max(lo, 0L); k <= std::min(hi, o.n); ++k) {
    t.rows.push_back({k, a ? c_coeff_at(k, o.n, *a).str() : c_coeff(k, o.n).str('x')});
  }
  emit_table(o.common, t, out);
  return kOk;
}

// --- eval -----------------------------------------------------------------

struct EvalOpts {
  unsigned n = 1;
  double a = 2.0;
  double x_min = -1.0;
  double x_max = 1.0;
  std::size_t samples = 101;
  Common common;
};

void add_eval(CLI::App& app, EvalOpts& o) {
  auto* sub = app.add_subcommand("eval", "F_n(x, a) against e^{iax} on a uniform grid");
  sub->add_option("--n", o.n, "Sequence index n")->required()->check(CLI::PositiveNumber);
  sub->add_option("--a", o.a, "Frequency parameter a")->capture_default_str();
  sub->add_option("--x-min", o.x_min, "Left end of the grid")->capture_default_str();
  sub->add_option("--x-max", o.x_max, "Right end of the grid")->capture_default_str();
  sub->add_option("--samples", o.samples, "Number of grid points")
      ->check(CLI::Range(std::size_t{2}, std::size_t{10'000'000}))
      ->capture_default_str();
  add_common(sub, o.common);
}

int run_eval(const EvalOpts& o, std::ostream& out) {
  require_range(o.x_min, o.x_max);
  Table t{{"x", "re_f", "im_f", "re_limit", "im_limit", "abs_error"}, {}};
  for (const double x : linspace(o.x_min, o.x_max, o.samples)) {
    const std::complex<double> f = f_eval(o.n, o.a, x);
    const std::complex<double> limit = std::polar(1.0, o.a * x);
    t.rows.push_back({x, f.real(), f.imag(), limit.real(), limit.imag(), std::abs(f - limit)});
  }
  emit_table(o.common, t, out);
  return kOk;
}

// --- genfun ---------------------------------------------------------------

struct GenfunOpts {
  std::string series = "s2";
  unsigned m = 0;
  unsigned k = 0;
  unsigned n = 1;
  std::optional<std::string> alphas;
  std::size_t order = kDefaultOrder;
  Common common;
};

void add_genfun(CLI::App& app, GenfunOpts& o) {
  auto* sub = app.add_subcommand("genfun", "Coefficients b_v of S1, S2 or G_k");
  sub->add_option("--series", o.series, "Which series")
      ->check(CLI::IsMember({"s1", "s2", "g"}))
      ->capture_default_str();
  sub->add_option("--m", o.m, "Polynomial degree m")->capture_default_str();
  sub->add_option("--k", o.k, "Index k")->capture_default_str();
  sub->add_option("--n", o.n, "Index n")->check(CLI::PositiveNumber)->capture_default_str();
  sub->add_option("--alphas", o.alphas, "Comma-separated alpha_0..alpha_m (default all 1)");
  sub->add_option("--order", o.order, "Truncation order V")->capture_default_str();
  add_common(sub, o.common);
}

int run_genfun(const GenfunOpts& o, std::ostream& out) {
  ExpSeries series(o.order);
  if (o.series == "g") {
    series = g_series(o.k, o.order);
  } else {
    GenFunParams p{o.m, o.k, o.n, o.alphas ? parse_rat_list(*o.alphas)
                                           : std::vector<Rat>(o.m + 1, Rat(1))};
    if (p.alphas.size() != o.m + 1) throw UsageError("--alphas needs m+1 values");
    series = o.series == "s1" ? s1_series(p, o.order) : s2_series(p, o.order);
  }
  Table t{{"v", "b"}, {}};
  for (std::size_t v = 0; v <= o.order; ++v) {
    t.rows.push_back({static_cast<long>(v), b_extract(series, v).str('x')});
  }
  emit_table(o.common, t, out);
  return kOk;
}

// --- verify ---------------------------------------------------------------

struct VerifyOpts {
  std::string suite = "all";
  SweepConfig sweep;
  bool list = false;
  bool strict = false;
  Common common{"json", {}};
};

void add_verify(CLI::App& app, VerifyOpts& o) {
  auto* sub = app.add_subcommand("verify", "Check identities exactly over their parameter grids");
  sub->add_option("--suite", o.suite, "Identity id, or 'all'")->capture_default_str();
  sub->add_option("--order", o.sweep.order, "Truncation order V")->capture_default_str();
  sub->add_option("--max-n", o.sweep.max_n, "Largest n in n-indexed grids")->capture_default_str();
  sub->add_option("--max-k", o.sweep.max_k, "Largest k in k-indexed grids")->capture_default_str();
  sub->add_flag("--list", o.list, "List identity ids and exit");
  sub->add_flag("--strict", o.strict, "Treat printed-form mismatches as failures");
  add_common(sub, o.common);
}

int run_verify(const VerifyOpts& o, std::ostream& out) {
  if (o.list) {
    Table t{{"identity", "description"}, {}};
    for (const auto& e : identity_catalogue()) t.rows.push_back({e.id, e.description});
    // Descriptions contain commas, so the listing is always JSON.
    with_sink(o.common, out, [&](std::ostream& os) { write_json(t, os); });
    return kOk;
  }
  const auto reports = run_suite(o.suite, o.sweep);
  with_sink(o.common, out, [&](std::ostream& os) {
    if (o.common.format == "json") {
      for (const auto& r : reports) os << to_json(r) << '\n';
      return;
    }
    Table t{{"identity", "params", "order", "status", "v", "lhs", "rhs"}, {}};
    for (const auto& r : reports) {
      std::vector<Cell> row{r.identity, params_to_string(r.params), static_cast<long>(r.order),
                            std::string(to_string(r.status))};
      if (r.first_divergence) {
        const auto& d = *r.first_divergence;
        row.insert(row.end(), {static_cast<long>(d.v), d.lhs.str(r.variable), d.rhs.str(r.variable)});
      } else {
        row.insert(row.end(), {std::string(), std::string(), std::string()});
      }
      t.rows.push_back(std::move(row));
    }
    write_csv(t, os);
  });
  if (o.strict) {
    for (const auto& r : reports) {
      if (r.status != IdentityStatus::verified) return kMismatch;
    }
    return kOk;
  }
  return all_passed(reports) ? kOk : kMismatch;
}

// --- stirling ---------------------------------------------------------------

struct StirlingOpts {
  std::size_t c_max = 10;
  Common common;
};

void add_stirling(CLI::App& app, StirlingOpts& o) {
  auto* sub = app.add_subcommand("stirling", "Triangle of Stirling numbers of the second kind");
  sub->add_option("--c-max", o.c_max, "Last row")->capture_default_str();
  add_common(sub, o.common);
}

int run_stirling(const StirlingOpts& o, std::ostream& out) {
  const StirlingTable table(o.c_max);
  Table t{{"c", "d", "s2"}, {}};
  for (std::size_t c = 0; c <= o.c_max; ++c) {
    for (std::size_t d = 0; d <= c; ++d) {
      t.rows.push_back({static_cast<long>(c), static_cast<long>(d), table(c, d).str()});
    }
  }
  emit_table(o.common, t, out);
  return kOk;
}

// --- hermite ----------------------------------------------------------------

struct HermiteOpts {
  std::optional<unsigned> n;
  unsigned n_max = 8;
  Common common;
};

void add_hermite(CLI::App& app, HermiteOpts& o) {
  auto* sub = app.add_subcommand("hermite", "Hermite polynomials H_n(z)");
  auto* n = sub->add_option("--n", o.n, "Single degree");
  auto* n_max = sub->add_option("--n-max", o.n_max, "Degrees 0..n-max")->capture_default_str();
  n->excludes(n_max);
  add_common(sub, o.common);
}

int run_hermite(const HermiteOpts& o, std::ostream& out) {
  const unsigned lo = o.n.value_or(0);
  const unsigned hi = o.n.value_or(o.n_max);
  Table t{{"n", "h"}, {}};
  for (unsigned n = lo; n <= hi; ++n) t.rows.push_back({static_cast<long>(n), hermite(n).str('z')});
  emit_table(o.common, t, out);
  return kOk;
}

// --- bernstein ------------------------------------------------------------

struct BernsteinOpts {
  unsigned v = 0;
  std::optional<std::string> y;
  Common common;
};

void add_bernstein(CLI::App& app, BernsteinOpts& o) {
  auto* sub = app.add_subcommand("bernstein", "Bernstein basis B_k^v(y), k = 0..v");
  sub->add_option("--v", o.v, "Degree v")->required();
  sub->add_option("--y", o.y, "Rational point, as p or p/q");
  add_common(sub, o.common);
}

int run_bernstein(const BernsteinOpts& o, std::ostream& out) {
  const std::optional<Rat> y = o.y ? std::optional<Rat>(Rat::parse(*o.y)) : std::nullopt;
  Table t{{"k", "b"}, {}};
  for (unsigned k = 0; k <= o.v; ++k) {
    const Poly b = bernstein(k, o.v);
    t.rows.push_back({static_cast<long>(k), y ? b(*y).str() : b.str('y')});
  }
  emit_table(o.common, t, out);
  return kOk;
}

// --- supershift -------------------------------------------------------------

struct SupershiftOpts {
  std::string kind = "dpf";
  double a = 2.0;
  unsigned p = 0;
  unsigned m = 1;
  std::string g = "0,1";
  std::string h = "1";
  std::string weight_arg = "imaginary";
  std::vector<unsigned> n_list{50, 100, 200};
  double x_min = -1.0;
  double x_max = 1.0;
  std::size_t samples = 101;
  bool values = false;
  Common common;
};

void add_supershift(CLI::App& app, SupershiftOpts& o) {
  auto* sub = app.add_subcommand("supershift", "Sup errors of derivative, Z_n and Y_n sequences");
  // --h names the weight function, so help is long-form only here.
  sub->set_help_flag("--help", "Print this help message and exit");
  sub->add_option("--kind", o.kind, "Sequence kind")
      ->check(CLI::IsMember({"dpf", "z", "y"}))
      ->capture_default_str();
  sub->add_option("--a", o.a, "Frequency parameter a")->capture_default_str();
  sub->add_option("--p", o.p, "Derivative order p")->capture_default_str();
  sub->add_option("--m", o.m, "Power m for Z_n")->check(CLI::PositiveNumber)->capture_default_str();
  sub->add_option("--g", o.g, "Ascending coefficients of g")->capture_default_str();
  sub->add_option("--h", o.h, "Ascending coefficients of h")->capture_default_str();
  sub->add_option("--weight-arg", o.weight_arg, "Evaluate h at i*k_j or at k_j")
      ->check(CLI::IsMember({"imaginary", "real"}))
      ->capture_default_str();
  sub->add_option("--n-list", o.n_list, "Comma-separated n values")
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  sub->add_option("--x-min", o.x_min, "Left end of the grid")->capture_default_str();
  sub->add_option("--x-max", o.x_max, "Right end of the grid")->capture_default_str();
  sub->add_option("--samples", o.samples, "Number of grid points")
      ->check(CLI::Range(std::size_t{2}, std::size_t{10'000'000}))
      ->capture_default_str();
  sub->add_flag("--values", o.values, "Emit every sample instead of sup errors");
  add_common(sub, o.common);
}

int run_supershift(const SupershiftOpts& o, std::ostream& out) {
  require_range(o.x_min, o.x_max);
  if (o.n_list.empty()) throw UsageError("--n-list is empty");
  const LimitKind kind = o.kind == "dpf" ? LimitKind::dpf : o.kind == "z" ? LimitKind::z : LimitKind::y;
  SupershiftParams params;
  params.a = o.a;
  params.p = o.p;
  params.m = o.m;
  params.g = EntireFnSpec::parse(o.g);
  params.h = EntireFnSpec::parse(o.h);
  params.weight = o.weight_arg == "real" ? WeightArgument::real : WeightArgument::imaginary;
  const GridResult r = limit_profile(kind, params, o.n_list, o.x_min, o.x_max, o.samples);

  Table t;
  if (o.values) {
    t.header = {"n", "x", "re_value", "im_value", "re_limit", "im_limit", "abs_error"};
    for (std::size_t i = 0; i < r.n_values.size(); ++i) {
      for (std::size_t s = 0; s < r.xs.size(); ++s) {
        const auto v = r.values[i][s];
        const auto l = r.limit[s];
        t.rows.push_back({static_cast<long>(r.n_values[i]), r.xs[s], v.real(), v.imag(), l.real(),
                          l.imag(), std::abs(v - l)});
      }
    }
  } else {
    t.header = {"n", "sup_error"};
    for (std::size_t i = 0; i < r.n_values.size(); ++i) {
      t.rows.push_back({static_cast<long>(r.n_values[i]), r.sup_error[i]});
    }
  }
  emit_table(o.common, t, out);
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Superoscillation coefficients, generating functions and identity checks",
               "superosc"};
  app.require_subcommand(1);

  CoeffsOpts coeffs;
  EvalOpts eval;
  GenfunOpts genfun;
  VerifyOpts verify;
  StirlingOpts stirling;
  HermiteOpts hermite_opts;
  BernsteinOpts bernstein_opts;
  SupershiftOpts supershift;
  add_coeffs(app, coeffs);
  add_eval(app, eval);
  add_genfun(app, genfun);
  add_verify(app, verify);
  add_stirling(app, stirling);
  add_hermite(app, hermite_opts);
  add_bernstein(app, bernstein_opts);
  add_supershift(app, supershift);

  // CLI11 consumes a vector argument list from the back.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return e.get_exit_code() == 0 ? kOk : kUsage;
  }

  try {
    if (app.got_subcommand("coeffs")) return run_coeffs(coeffs, out);
    if (app.got_subcommand("eval")) return run_eval(eval, out);
    if (app.got_subcommand("genfun")) return run_genfun(genfun, out);
    if (app.got_subcommand("verify")) return run_verify(verify, out);
    if (app.got_subcommand("stirling")) return run_stirling(stirling, out);
    if (app.got_subcommand("hermite")) return run_hermite(hermite_opts, out);
    if (app.got_subcommand("bernstein")) return run_bernstein(bernstein_opts, out);
    if (app.got_subcommand("supershift")) return run_supershift(supershift, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ContractViolation& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace superosc::cli
