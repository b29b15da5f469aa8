#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "superosc/exp_series.hpp"
#include "superosc/rational.hpp"
#include "superosc/report.hpp"

namespace superosc {

/// Parameter bundle for verify_identity. Each identity reads only the
/// fields it needs; see identity_catalogue() for the meaning per id.
struct IdentityParams {
  long k = 0;
  long n = 1;
  unsigned m = 0;
  unsigned v = 0;
  unsigned a = 0;
  unsigned c = 1;
  std::vector<Rat> alphas{Rat(1)};
};

struct CatalogueEntry {
  std::string id;
  std::string description;
};

/// Every identity id accepted by verify_identity, in suite order.
const std::vector<CatalogueEntry>& identity_catalogue();

/// Checks one identity at one parameter point up to order V. A mismatch is
/// reported, never thrown. Unknown ids raise UsageError; parameters outside
/// an identity's domain raise the underlying ContractViolation/DomainError.
///
/// Identities with a printed and a corrected closed form (s1-m1, s1-m2,
/// s2-m1, s2-m2) report verified when the printed form already matches the
/// definitional series, printed_form_mismatch_corrected_form_verified with
/// the printed divergence when only the corrected one does, and mismatch
/// with the corrected divergence otherwise.
IdentityReport verify_identity(std::string_view id, const IdentityParams& params,
                               std::size_t order = kDefaultOrder);

struct SweepConfig {
  std::size_t order = kDefaultOrder;
  unsigned max_n = 10;
  unsigned max_k = 6;
};

/// Runs the parameter grid of one identity, or of every identity for
/// "all". Reports come out in a deterministic order. UsageError for an
/// unknown suite.
std::vector<IdentityReport> run_suite(std::string_view suite, const SweepConfig& config = {});

/// True when no report has status mismatch.
bool all_passed(const std::vector<IdentityReport>& reports);

}  // namespace superosc
