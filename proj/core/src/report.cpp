#include "superosc/report.hpp"

#include <nlohmann/json.hpp>

namespace superosc {

std::string_view to_string(IdentityStatus status) {
  switch (status) {
    case IdentityStatus::verified: return "verified";
    case IdentityStatus::mismatch: return "mismatch";
    case IdentityStatus::printed_form_mismatch_corrected_form_verified:
      return "printed_form_mismatch_corrected_form_verified";
  }
  return "mismatch";
}

IdentityReport compare_polys(std::string identity, ParamList params, std::size_t order,
                             std::size_t index, const Poly& lhs, const Poly& rhs, char variable) {
  IdentityReport r{std::move(identity), std::move(params), order, IdentityStatus::verified,
                   std::nullopt, variable};
  if (lhs != rhs) {
    r.status = IdentityStatus::mismatch;
    r.first_divergence = Divergence{index, lhs, rhs};
  }
  return r;
}

namespace {

nlohmann::ordered_json param_json(const ParamValue& v) {
  if (const auto* i = std::get_if<long>(&v)) return *i;
  if (const auto* r = std::get_if<Rat>(&v)) return r->str();
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : std::get<std::vector<Rat>>(v)) arr.push_back(r.str());
  return arr;
}

std::string param_text(const ParamValue& v) {
  if (const auto* i = std::get_if<long>(&v)) return std::to_string(*i);
  if (const auto* r = std::get_if<Rat>(&v)) return r->str();
  std::string out;
  for (const auto& r : std::get<std::vector<Rat>>(v)) {
    if (!out.empty()) out += '|';
    out += r.str();
  }
  return out;
}

}  // namespace

std::string to_json(const IdentityReport& report) {
  nlohmann::ordered_json j;
  j["identity"] = report.identity;
  auto params = nlohmann::ordered_json::object();
  for (const auto& [name, value] : report.params) params[name] = param_json(value);
  j["params"] = std::move(params);
  j["order"] = report.order;
  j["status"] = std::string(to_string(report.status));
  if (report.first_divergence) {
    const auto& d = *report.first_divergence;
    j["first_divergence"] = {{"v", d.v},
                             {"lhs", d.lhs.str(report.variable)},
                             {"rhs", d.rhs.str(report.variable)}};
  } else {
    j["first_divergence"] = nullptr;
  }
  return j.dump();
}

std::string params_to_string(const ParamList& params) {
  std::string out;
  for (const auto& [name, value] : params) {
    if (!out.empty()) out += ';';
    out += name + "=" + param_text(value);
  }
  return out;
}

}  // namespace superosc
