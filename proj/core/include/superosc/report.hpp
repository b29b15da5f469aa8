#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "superosc/poly.hpp"
#include "superosc/rational.hpp"

namespace superosc {

enum class IdentityStatus { verified, mismatch, printed_form_mismatch_corrected_form_verified };

std::string_view to_string(IdentityStatus status);

/// First index at which the two sides disagree. For series identities v is
/// the power of t; for single-polynomial identities it is the identity's
/// own running index (n, v or c).
struct Divergence {
  std::size_t v = 0;
  Poly lhs;
  Poly rhs;
};

using ParamValue = std::variant<long, Rat, std::vector<Rat>>;
using ParamList = std::vector<std::pair<std::string, ParamValue>>;

/// Verdict for one identity at one parameter point. status is verified
/// exactly when first_divergence is empty.
struct IdentityReport {
  std::string identity;
  ParamList params;
  std::size_t order = 0;
  IdentityStatus status = IdentityStatus::verified;
  std::optional<Divergence> first_divergence;
  /// Name of the polynomial variable used when printing lhs/rhs.
  char variable = 'x';
};

/// Builds a report from one comparison: verified when equal, mismatch with
/// the divergence otherwise.
IdentityReport compare_polys(std::string identity, ParamList params, std::size_t order,
                             std::size_t index, const Poly& lhs, const Poly& rhs,
                             char variable = 'x');

/// Single-line JSON object:
/// {"identity": str, "params": {...}, "order": int, "status": str,
///  "first_divergence": {"v": int, "lhs": str, "rhs": str} | null}
std::string to_json(const IdentityReport& report);

/// "k=2;n=3;alphas=1|1/2" style rendering for CSV cells.
std::string params_to_string(const ParamList& params);

}  // namespace superosc
