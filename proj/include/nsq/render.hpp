#pragma once

// Text and JSON forms shared by the command-line tool and the bindings.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "nsq/ctengine.hpp"
#include "nsq/quotient.hpp"
#include "nsq/rgf.hpp"

namespace nsq {

using Json = nlohmann::ordered_json;

/// "2 5"
std::string join_ints(const std::vector<std::int64_t>& values, const std::string& sep = " ");

/// One row per tuple: "(1,1) -> 5".
std::string render_tp_rows(const TpSet& tp);

/// Sparse coefficient map keyed by exponent, ascending: {"0": 1, "4": 1}.
/// Integral coefficients become JSON integers, others "p/q" strings.
Json poly_to_json(const Poly& p);
Poly poly_from_json(const Json& j);

/// {"num": {...}, "den": [b...], "certified_to": N}
Json to_json(const RGFRational& r);
RGFRational rgf_from_json(const Json& j);

/// {"num": {...}, "den": {...}, "text": "..."}
Json to_json(const RationalFunction& f);
RationalFunction rational_function_from_json(const Json& j);

/// Expresses f as numerator / prod (1 - x^b) for the given exponents when
/// that numerator is a polynomial.
std::optional<Poly> numerator_over(const RationalFunction& f, const std::vector<std::int64_t>& denom_factors);

}  // namespace nsq
