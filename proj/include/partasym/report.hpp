#pragma once

// Text and JSON renderings of results. Anything that does not fit a double
// exactly is emitted as a string.

#include "partasym/exact.hpp"
#include "partasym/expansion.hpp"
#include "partasym/saddle.hpp"

#include <json.hpp>

#include <ios>
#include <string>

namespace partasym {

/// numerator/denominator as a fixed-point decimal with `fraction_digits`
/// digits, rounded half to even. Exact: uses integer arithmetic only.
inline std::string format_ratio(const BigInt& numerator, const BigInt& denominator,
                                unsigned fraction_digits = 19) {
  if (denominator <= 0 || numerator < 0) throw DomainError("format_ratio: expects non-negative / positive");
  BigInt scale = 1;
  for (unsigned i = 0; i < fraction_digits; ++i) scale *= 10;
  const BigInt scaled = numerator * scale;
  BigInt q = scaled / denominator;
  const BigInt twice_rem = 2 * (scaled - q * denominator);
  if (twice_rem > denominator || (twice_rem == denominator && mp::bit_test(q, 0))) q += 1;

  std::string whole = BigInt(q / scale).str();
  if (fraction_digits == 0) return whole;
  std::string frac = BigInt(q % scale).str();
  frac.insert(0, fraction_digits - frac.size(), '0');
  return whole + "." + frac;
}

inline std::string format_ratio(const BigCount& numerator, const BigCount& denominator,
                                unsigned fraction_digits = 19) {
  return format_ratio(numerator.value(), denominator.value(), fraction_digits);
}

inline std::string fixed_string(const HPReal& x, unsigned fraction_digits = 20) {
  return x.str(fraction_digits, std::ios_base::fixed);
}

inline std::string sci_string(const HPReal& x, unsigned significant = 20) {
  return x.str(significant, std::ios_base::scientific);
}

inline nlohmann::json to_json(const ExpansionResult& r) {
  nlohmann::json j;
  j["n"] = r.n;
  j["N"] = r.order;
  j["kind"] = to_string(r.kind);
  j["value"] = fixed_string(r.value);
  j["rounded"] = r.rounded.to_string();
  j["ratio"] = r.ratio_to_exact ? nlohmann::json(fixed_string(*r.ratio_to_exact, 19)) : nlohmann::json();
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : r.terms) terms.push_back(sci_string(t));
  j["terms"] = std::move(terms);
  return j;
}

inline nlohmann::json to_json(const BoundReport& rep) {
  nlohmann::json residuals, envelopes, ratios, within;
  for (std::size_t i = 0; i < BoundReport::kCount; ++i) {
    const char* name = BoundReport::kNames[i];
    residuals[name] = sci_string(rep.residuals[i]);
    envelopes[name] = sci_string(rep.envelopes[i]);
    ratios[name] = sci_string(rep.ratios[i]);
    within[name] = rep.within(i);
  }
  return {{"n", rep.n},
          {"residuals", residuals},
          {"envelopes", envelopes},
          {"ratios", ratios},
          {"within", within}};
}

}  // namespace partasym
