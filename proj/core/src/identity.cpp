#include "superosc/identity.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "superosc/classical.hpp"
#include "superosc/coefficients.hpp"
#include "superosc/combinatorics.hpp"
#include "superosc/errors.hpp"
#include "superosc/genfun.hpp"
#include "superosc/hypergeometric.hpp"

namespace superosc {
namespace {

// Grid limits fixed by the identities themselves rather than by SweepConfig.
constexpr unsigned kBernsteinMax = 8;
constexpr unsigned kHeatMax = 8;
constexpr unsigned kHermiteTripleMax = 12;
constexpr unsigned kHermiteKummerMax = 5;
constexpr unsigned kMillerParisMaxA = 3;
constexpr unsigned kMillerParisMaxC = 4;
constexpr unsigned kStirlingMax = 10;
constexpr unsigned kFallingMax = 8;
constexpr unsigned kGenFunMaxM = 3;
constexpr long kGenFunMaxN = 3;

const std::vector<Rat>& alpha_values() {
  static const std::vector<Rat> values{Rat(-1), Rat(1, 2), Rat(1)};
  return values;
}

IdentityReport make_report(std::string_view id, ParamList params, std::size_t order,
                           char variable = 'x') {
  return IdentityReport{std::string(id), std::move(params), order, IdentityStatus::verified,
                        std::nullopt, variable};
}

void mark_mismatch(IdentityReport& r, std::size_t v, Poly lhs, Poly rhs) {
  r.status = IdentityStatus::mismatch;
  r.first_divergence = Divergence{v, std::move(lhs), std::move(rhs)};
}

IdentityReport compare_series(std::string_view id, ParamList params, std::size_t order,
                              const ExpSeries& lhs, const ExpSeries& rhs, char variable = 'x') {
  IdentityReport r = make_report(id, std::move(params), order, variable);
  if (const auto v = first_difference(lhs, rhs)) mark_mismatch(r, *v, lhs.coeff(*v), rhs.coeff(*v));
  return r;
}

IdentityReport compare_pair(std::string_view id, ParamList params, std::size_t order,
                            const ClosedFormPair& forms, const ExpSeries& truth) {
  IdentityReport r = make_report(id, std::move(params), order);
  const auto printed = first_difference(forms.printed, truth);
  if (!printed) return r;
  if (const auto corrected = first_difference(forms.corrected, truth)) {
    mark_mismatch(r, *corrected, forms.corrected.coeff(*corrected), truth.coeff(*corrected));
    return r;
  }
  r.status = IdentityStatus::printed_form_mismatch_corrected_form_verified;
  r.first_divergence = Divergence{*printed, forms.printed.coeff(*printed), truth.coeff(*printed)};
  return r;
}

// Walks a family of polynomial comparisons indexed by i and keeps the first
// disagreement.
IdentityReport compare_family(std::string_view id, ParamList params, std::size_t order,
                              std::size_t first, std::size_t last,
                              const std::function<std::pair<Poly, Poly>(std::size_t)>& sides,
                              char variable = 'x') {
  IdentityReport r = make_report(id, std::move(params), order, variable);
  for (std::size_t i = first; i <= last; ++i) {
    auto [lhs, rhs] = sides(i);
    if (lhs != rhs) {
      mark_mismatch(r, i, std::move(lhs), std::move(rhs));
      break;
    }
  }
  return r;
}

unsigned as_unsigned(long value, const char* name) {
  if (value < 0) throw UsageError(std::string(name) + " must be nonnegative");
  return static_cast<unsigned>(value);
}

GenFunParams genfun_params(const IdentityParams& p, std::optional<unsigned> fixed_m = {}) {
  const unsigned m = fixed_m.value_or(p.m);
  if (p.alphas.size() != m + 1) {
    throw UsageError("expected " + std::to_string(m + 1) + " alpha values, got " +
                     std::to_string(p.alphas.size()));
  }
  if (p.n < 1) throw UsageError("n must be at least 1");
  GenFunParams g{m, as_unsigned(p.k, "k"), static_cast<unsigned>(p.n), p.alphas};
  g.validate();
  return g;
}

ParamList genfun_list(const GenFunParams& g) {
  return {{"m", static_cast<long>(g.m)},
          {"k", static_cast<long>(g.k)},
          {"n", static_cast<long>(g.n)},
          {"alphas", g.alphas}};
}

Poly bipoly_at_unit_y(const BiPoly& p) { return p.substitute(Poly::x(), Poly::constant(Rat(1))); }

using Checker = std::function<IdentityReport(const IdentityParams&, std::size_t)>;
using Sweeper = std::function<void(const SweepConfig&, std::vector<IdentityReport>&)>;

struct Entry {
  std::string description;
  Checker check;
  Sweeper sweep;
};

// Calls check on every alpha tuple of length m+1 drawn from alpha_values().
void for_each_alpha_tuple(unsigned m, const std::function<void(const std::vector<Rat>&)>& body) {
  const auto& values = alpha_values();
  std::vector<std::size_t> idx(m + 1, 0);
  std::vector<Rat> tuple(m + 1);
  while (true) {
    for (std::size_t i = 0; i <= m; ++i) tuple[i] = values[idx[i]];
    body(tuple);
    std::size_t pos = 0;
    while (pos <= m && ++idx[pos] == values.size()) idx[pos++] = 0;
    if (pos > m) return;
  }
}

Sweeper genfun_sweep(unsigned m_lo, unsigned m_hi, unsigned k_lo,
                     std::optional<unsigned> k_hi_fixed, const Checker& check) {
  return [=](const SweepConfig& cfg, std::vector<IdentityReport>& out) {
    const unsigned k_hi = k_hi_fixed.value_or(cfg.max_k);
    for (unsigned m = m_lo; m <= m_hi; ++m) {
      for (unsigned k = k_lo; k <= k_hi; ++k) {
        if (k > cfg.order) continue;
        for (long n = 1; n <= kGenFunMaxN; ++n) {
          for_each_alpha_tuple(m, [&](const std::vector<Rat>& alphas) {
            IdentityParams p;
            p.m = m;
            p.k = k;
            p.n = n;
            p.alphas = alphas;
            out.push_back(check(p, cfg.order));
          });
        }
      }
    }
  };
}

const std::map<std::string, Entry>& registry();

std::vector<std::string> ordered_ids() {
  return {"recurrence",    "derivative",     "g-closed-form",        "m0-reduction",
          "s1-m1",         "s1-m2",          "s2-m1",                "s2-m2",
          "s2-stirling",   "s2-k1",          "ay-2",                 "b2-k1",
          "bernstein-map", "bernstein-unity", "bernstein-half-shift", "miller-paris",
          "16a",           "hermite-conv",   "heat-equation",        "hermite-triple",
          "hermite-kummer", "stirling-explicit", "c-sum",            "falling-factorial"};
}

const std::map<std::string, Entry>& registry() {
  static const std::map<std::string, Entry> entries = [] {
    std::map<std::string, Entry> e;

    e["recurrence"] = {
        "((1-x)/2) c_{k-1}(n,x) + ((1+x)/2) c_k(n,x) = c_k(n+1,x); params k, n",
        [](const IdentityParams& p, std::size_t order) {
          return compare_polys("recurrence", {{"k", p.k}, {"n", p.n}}, order,
                               static_cast<std::size_t>(as_unsigned(p.n, "n") + 1),
                               c_recurrence_rhs(p.k, p.n), c_coeff(p.k, p.n + 1));
        },
        [](const SweepConfig& cfg, std::vector<IdentityReport>& out) {
          for (long n = 0; n + 1 <= static_cast<long>(cfg.max_n); ++n) {
            for (long k = 0; k <= n + 1; ++k) {
              out.push_back(registry().at("recurrence").check({.k = k, .n = n}, cfg.order));
            }
          }
        }};

    e["derivative"] = {
        "d/dx c_k(n,x) = (n/2)(c_k(n-1,x) - c_{k-1}(n-1,x)); params k, n",
        [](const IdentityParams& p, std::size_t order) {
          return compare_polys("derivative", {{"k", p.k}, {"n", p.n}}, order,
                               as_unsigned(p.n, "n"), c_derivative(p.k, p.n),
                               c_derivative_rhs(p.k, p.n));
        },
        [](const SweepConfig& cfg, std::vector<IdentityReport>& out) {
          for (long n = 1; n <= static_cast<long>(cfg.max_n); ++n) {
            for (long k = 0; k <= n; ++k) {
              out.push_back(registry().at("derivative").check({.k = k, .n = n}, cfg.order));
            }
          }
        }};

    e["g-closed-form"] = {
        "(1/k!)(t(1-x)/2)^k e^{t(x+1)/2} has coefficients c_k(v,x); param k",
        [](const IdentityParams& p, std::size_t order) {
          const unsigned k = as_unsigned(p.k, "k");
          std::vector<Poly> family(order + 1);
          for (std::size_t v = 0; v <= order; ++v) family[v] = c_coeff(k, static_cast<long>(v));
          return compare_series("g-closed-form", {{"k", p.k}}, order, g_series(k, order),
                                ExpSeries(std::move(family)));
        },
        [](const SweepConfig& cfg, std::vector<IdentityReport>& out) {
          for (long k = 0; k <= static_cast<long>(cfg.max_k) && k <= static_cast<long>(cfg.order);
               ++k) {
            out.push_back(registry().at("g-closed-form").check({.k = k}, cfg.order));
          }
        }};

    e["m0-reduction"] = {
        "S1 = S2 = alpha_0 G_k at m = 0; params k, n, alphas (one value)",
        [](const IdentityParams& p, std::size_t order) {
          const GenFunParams g = genfun_params(p, 0);
          const ExpSeries target = g_series(g.k, order) * g.alphas[0];
          IdentityReport r =
              compare_series("m0-reduction", genfun_list(g), order, s1_series(g, order), target);
          if (r.status != IdentityStatus::verified) return r;
          return compare_series("m0-reduction", genfun_list(g), order, s2_series(g, order), target);
        },
        genfun_sweep(0, 0, 0, std::nullopt, [](const IdentityParams& p, std::size_t o) {
          return registry().at("m0-reduction").check(p, o);
        })};

    const auto pair_entry = [](std::string id, std::string description, unsigned m,
                               ClosedFormPair (*closed)(const GenFunParams&, std::size_t),
                               ExpSeries (*truth)(const GenFunParams&, std::size_t)) {
      Checker check = [id, m, closed, truth](const IdentityParams& p, std::size_t order) {
        const GenFunParams g = genfun_params(p, m);
        return compare_pair(id, genfun_list(g), order, closed(g, order), truth(g, order));
      };
      return Entry{std::move(description), check, genfun_sweep(m, m, 1, std::nullopt, check)};
    };
    e["s1-m1"] = pair_entry("s1-m1", "S1 closed form at m = 1 (printed and corrected); params k, n, alphas",
                            1, s1_m1_closed, s1_series);
    e["s1-m2"] = pair_entry("s1-m2", "S1 closed form at m = 2 (printed and corrected); params k, n, alphas",
                            2, s1_m2_closed, s1_series);
    e["s2-m1"] = pair_entry("s2-m1", "S2 closed form at m = 1 (printed and corrected); params k, n, alphas",
                            1, s2_m1_closed, s2_series);
    e["s2-m2"] = pair_entry("s2-m2", "S2 closed form at m = 2 (printed and corrected); params k, n, alphas",
                            2, s2_m2_closed, s2_series);

    {
      Checker check = [](const IdentityParams& p, std::size_t order) {
        const GenFunParams g = genfun_params(p);
        return compare_series("s2-stirling", genfun_list(g), order, s2_stirling_closed(g, order),
                              s2_series(g, order));
      };
      e["s2-stirling"] = {"S2 through Stirling numbers equals the definitional S2; params m, k, n, alphas",
                          check, genfun_sweep(0, kGenFunMaxM, 1, std::nullopt, check)};
    }
    {
      Checker check = [](const IdentityParams& p, std::size_t order) {
        IdentityParams q = p;
        q.k = 1;
        const GenFunParams g = genfun_params(q);
        return compare_series("s2-k1", genfun_list(g), order, s2_k1_corollary(g, order),
                              s2_series(g, order));
      };
      e["s2-k1"] = {"S2 at k = 1 via S(l+1,c+1); params m, n, alphas", check,
                              genfun_sweep(0, kGenFunMaxM, 1, 1u, check)};
    }
    {
      Checker check = [](const IdentityParams& p, std::size_t order) {
        const GenFunParams g = genfun_params(p);
        const ExpSeries s2 = s2_series(g, order);
        return compare_family("ay-2", genfun_list(g), order, 0, order, [&](std::size_t v) {
          return std::pair{b2_explicit(v, g), b_extract(s2, v)};
        });
      };
      e["ay-2"] = {"explicit b2(v) equals the coefficients of S2, v <= V; params m, k, n, alphas",
                   check, genfun_sweep(0, kGenFunMaxM, 1, std::nullopt, check)};
    }
    {
      Checker check = [](const IdentityParams& p, std::size_t order) {
        IdentityParams q = p;
        q.k = 1;
        const GenFunParams g = genfun_params(q);
        const ExpSeries s2 = s2_series(g, order);
        return compare_family("b2-k1", genfun_list(g), order, 0, order, [&](std::size_t v) {
          return std::pair{b2_k1_explicit(v, g), b_extract(s2, v)};
        });
      };
      e["b2-k1"] = {"explicit b2(v) at k = 1 without c_k equals the coefficients of S2; params m, n, alphas",
                    check, genfun_sweep(0, kGenFunMaxM, 1, 1u, check)};
    }

    e["bernstein-map"] = {
        "c_k(v, 1-2y) = B_k^v(y); params k, v",
        [](const IdentityParams& p, std::size_t order) {
          const unsigned k = as_unsigned(p.k, "k");
          return compare_polys("bernstein-map", {{"k", p.k}, {"v", static_cast<long>(p.v)}}, order,
                               p.v, c_coeff(k, p.v).compose(Poly::linear(Rat(1), Rat(-2))),
                               bernstein(k, p.v), 'y');
        },
        [](const SweepConfig& cfg, std::vector<IdentityReport>& out) {
          for (unsigned v = 0; v <= kBernsteinMax; ++v) {
            for (long k = 0; k <= static_cast<long>(v); ++k) {
              out.push_back(registry().at("bernstein-map").check({.k = k, .v = v}, cfg.order));
            }
          }
        }};

    e["bernstein-unity"] = {
        "sum_k B_k^v(y) = 1; param v",
        [](const IdentityParams& p, std::size_t order) {
          Poly sum;
          for (unsigned k = 0; k <= p.v; ++k) sum += bernstein(k, p.v);
          return compare_polys("bernstein-unity", {{"v", static_cast<long>(p.v)}}, order, p.v, sum,
                               Poly::constant(Rat(1)), 'y');
        },
        [](const SweepConfig& cfg, std::vector<IdentityReport>& out) {
          for (unsigned v = 0; v <= kBernsteinMax; ++v) {
            out.push_back(registry().at("bernstein-unity").check({.v = v}, cfg.order));
          }
        }};

    e["bernstein-half-shift"] = {
        "c_k(n,y) = B_k^n((1-y)/2); params k, n",
        [](const IdentityParams& p, std::size_t order) {
          const unsigned k = as_unsigned(p.k, "k");
          const unsigned n = as_unsigned(p.n, "n");
          return compare_polys("bernstein-half-shift", {{"k", p.k}, {"n", p.n}}, order, n,
                               c_coeff(k, n),
                               bernstein(k, n).compose(Poly::linear(Rat(1, 2), Rat(-1, 2))), 'y');
        },
        [](const SweepConfig& cfg, std::vector<IdentityReport>& out) {
          for (long n = 0; n <= static_cast<long>(kBernsteinMax); ++n) {
            for (long k = 0; k <= n; ++k) {
              out.push_back(registry().at("bernstein-half-shift").check({.k = k, .n = n}, cfg.order));
            }
          }
        }};

    e["miller-paris"] = {
        "aFa[c+1,...; c,...; z] through Stirling numbers; params a, c",
        [](const IdentityParams& p, std::size_t order) {
          if (p.c == 0) throw UsageError("c must be at least 1");
          const HyperSpec spec = HyperSpec::repeated(p.a, Rat(p.c + 1), Rat(p.c));
          return compare_series("miller-paris",
                                {{"a", static_cast<long>(p.a)}, {"c", static_cast<long>(p.c)}},
                                order, miller_paris_rhs(p.a, p.c, MillerParisVariant::general, order),
                                pfq_series(spec, Poly::constant(Rat(1)), order));
        },
        [](const SweepConfig& cfg, std::vector<IdentityReport>& out) {
          for (unsigned a = 0; a <= kMillerParisMaxA; ++a) {
            for (unsigned c = 1; c <= kMillerParisMaxC; ++c) {
              out.push_back(registry().at("miller-paris").check({.a = a, .c = c}, cfg.order));
            }
          }
        }};

    e["16a"] = {
        "aFa[2,...; 1,...; z] = e^z sum_v S(a+1,v+1) z^v; param a",
        [](const IdentityParams& p, std::size_t order) {
          const HyperSpec spec = HyperSpec::repeated(p.a, Rat(2), Rat(1));
          return compare_series("16a", {{"a", static_cast<long>(p.a)}}, order,
                                miller_paris_rhs(p.a, 1, MillerParisVariant::c_equals_1, order),
                                pfq_series(spec, Poly::constant(Rat(1)), order));
        },
        [](const SweepConfig& cfg, std::vector<IdentityReport>& out) {
          for (unsigned a = 0; a <= kMillerParisMaxA; ++a) {
            out.push_back(registry().at("16a").check({.a = a}, cfg.order));
          }
        }};

    e["hermite-conv"] = {
        "((1-x)/2)^k H_{n-k}((1+x)/4) through c_k(n-2j,x); params k, n",
        [](const IdentityParams& p, std::size_t order) {
          const unsigned k = as_unsigned(p.k, "k");
          const unsigned n = as_unsigned(p.n, "n");
          if (k > n) throw UsageError("hermite-conv requires k <= n");
          IdentityReport r = hermite_conv_theorem(k, n);
          r.order = order;
          return r;
        },
        [](const SweepConfig& cfg, std::vector<IdentityReport>& out) {
          for (long n = 0; n <= static_cast<long>(cfg.max_n); ++n) {
            for (long k = 0; k <= n; ++k) {
              out.push_back(registry().at("hermite-conv").check({.k = k, .n = n}, cfg.order));
            }
          }
        }};

    // The divergence of a bivariate identity is shown at y = 1; the verdict
    // itself compares every (x, y) coefficient.
    e["heat-equation"] = {
        "d/dy H_n^(2)(x,y) = d^2/dx^2 H_n^(2)(x,y); param n",
        [](const IdentityParams& p, std::size_t order) {
          const unsigned n = as_unsigned(p.n, "n");
          const BiPoly h = gould_hopper(n, 2);
          const BiPoly lhs = h.partial_y();
          const BiPoly rhs = h.partial_x().partial_x();
          IdentityReport r = make_report("heat-equation", {{"n", p.n}}, order);
          if (lhs != rhs) mark_mismatch(r, n, bipoly_at_unit_y(lhs), bipoly_at_unit_y(rhs));
          return r;
        },
        [](const SweepConfig& cfg, std::vector<IdentityReport>& out) {
          for (long n = 0; n <= static_cast<long>(kHeatMax); ++n) {
            out.push_back(registry().at("heat-equation").check({.n = n}, cfg.order));
          }
        }};

    e["hermite-triple"] = {
        "explicit sum = H_n^(2)(2z,-1) = coefficient of exp(2zt - t^2); param n",
        [](const IdentityParams& p, std::size_t order) {
          const unsigned n = as_unsigned(p.n, "n");
          const Poly explicit_sum = hermite(n);
          IdentityReport r = compare_polys("hermite-triple", {{"n", p.n}}, order, n, explicit_sum,
                                           hermite_via_gould_hopper(n), 'z');
          if (r.status != IdentityStatus::verified) return r;
          return compare_polys("hermite-triple", {{"n", p.n}}, order, n, explicit_sum,
                               hermite_via_series(n), 'z');
        },
        [](const SweepConfig& cfg, std::vector<IdentityReport>& out) {
          for (long n = 0; n <= static_cast<long>(kHermiteTripleMax); ++n) {
            out.push_back(registry().at("hermite-triple").check({.n = n}, cfg.order));
          }
        }};

    e["hermite-kummer"] = {
        "H_{2m} and H_{2m+1} through terminating 1F1 in z^2; param m",
        [](const IdentityParams& p, std::size_t order) {
          return compare_family("hermite-kummer", {{"m", static_cast<long>(p.m)}}, order, 2 * p.m,
                                2 * p.m + 1,
                                [](std::size_t n) {
                                  const auto u = static_cast<unsigned>(n);
                                  return std::pair{hermite(u), hermite_via_kummer(u)};
                                },
                                'z');
        },
        [](const SweepConfig& cfg, std::vector<IdentityReport>& out) {
          for (unsigned m = 0; m <= kHermiteKummerMax; ++m) {
            out.push_back(registry().at("hermite-kummer").check({.m = m}, cfg.order));
          }
        }};

    e["stirling-explicit"] = {
        "recurrence S(c,d) equals the alternating sum for all d <= c; param c",
        [](const IdentityParams& p, std::size_t order) {
          return compare_family("stirling-explicit", {{"c", static_cast<long>(p.c)}}, order, 0, p.c,
                                [&](std::size_t d) {
                                  return std::pair{Poly::constant(stirling2(p.c, d)),
                                                   Poly::constant(stirling2_explicit(p.c, d))};
                                });
        },
        [](const SweepConfig& cfg, std::vector<IdentityReport>& out) {
          for (unsigned c = 0; c <= kStirlingMax; ++c) {
            out.push_back(registry().at("stirling-explicit").check({.c = c}, cfg.order));
          }
        }};

    e["c-sum"] = {
        "sum_k c_k(n,x) = 1; param n",
        [](const IdentityParams& p, std::size_t order) {
          const unsigned n = as_unsigned(p.n, "n");
          Poly sum;
          for (unsigned k = 0; k <= n; ++k) sum += c_coeff(k, n);
          return compare_polys("c-sum", {{"n", p.n}}, order, n, sum, Poly::constant(Rat(1)));
        },
        [](const SweepConfig& cfg, std::vector<IdentityReport>& out) {
          for (long n = 0; n <= static_cast<long>(cfg.max_n); ++n) {
            out.push_back(registry().at("c-sum").check({.n = n}, cfg.order));
          }
        }};

    e["falling-factorial"] = {
        "sum_d S(c,d) x(x-1)...(x-d+1) = x^c; param c",
        [](const IdentityParams& p, std::size_t order) {
          Poly sum;
          for (unsigned d = 0; d <= p.c; ++d) sum += falling_factorial_poly(d) * stirling2(p.c, d);
          return compare_polys("falling-factorial", {{"c", static_cast<long>(p.c)}}, order, p.c, sum,
                               Poly::monomial(Rat(1), p.c));
        },
        [](const SweepConfig& cfg, std::vector<IdentityReport>& out) {
          for (unsigned c = 0; c <= kFallingMax; ++c) {
            out.push_back(registry().at("falling-factorial").check({.c = c}, cfg.order));
          }
        }};

    return e;
  }();
  return entries;
}

const Entry& lookup(std::string_view id) {
  const auto& reg = registry();
  const auto it = reg.find(std::string(id));
  if (it == reg.end()) throw UsageError("unknown identity '" + std::string(id) + "'");
  return it->second;
}

}  // namespace

const std::vector<CatalogueEntry>& identity_catalogue() {
  static const std::vector<CatalogueEntry> catalogue = [] {
    std::vector<CatalogueEntry> out;
    for (const auto& id : ordered_ids()) out.push_back({id, registry().at(id).description});
    return out;
  }();
  return catalogue;
}

IdentityReport verify_identity(std::string_view id, const IdentityParams& params,
                               std::size_t order) {
  return lookup(id).check(params, order);
}

std::vector<IdentityReport> run_suite(std::string_view suite, const SweepConfig& config) {
  std::vector<IdentityReport> out;
  if (suite == "all") {
    for (const auto& entry : identity_catalogue()) registry().at(entry.id).sweep(config, out);
    return out;
  }
  lookup(suite).sweep(config, out);
  return out;
}

bool all_passed(const std::vector<IdentityReport>& reports) {
  for (const auto& r : reports) {
    if (r.status == IdentityStatus::mismatch) return false;
  }
  return true;
}

}  // namespace superosc
