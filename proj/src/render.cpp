#include "nsq/render.hpp"

#include <sstream>

namespace nsq {

std::string join_ints(const std::vector<std::int64_t>& values, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? sep : "") + std::to_string(values[i]);
  return out;
}

std::string render_tp_rows(const TpSet& tp) {
  std::ostringstream out;
  for (std::size_t i = 0; i < tp.tuples.size(); ++i)
    out << '(' << join_ints(tp.tuples[i], ",") << ") -> " << tp.values[i] << '\n';
  return out.str();
}

namespace {

Json coefficient_to_json(const BigRational& v) {
  if (v.get_den() == 1 && v.get_num().fits_slong_p()) return v.get_num().get_si();
  return v.get_str();
}

BigRational coefficient_from_json(const Json& j) {
  if (j.is_number_integer()) return BigRational(BigInt(std::to_string(j.get<long long>())));
  if (j.is_string()) {
    BigRational v(j.get<std::string>());
    v.canonicalize();
    return v;
  }
  throw Error(ErrorKind::Parse, "coefficient must be an integer or a \"p/q\" string");
}

}  // namespace

Json poly_to_json(const Poly& p) {
  Json out = Json::object();
  const auto& c = p.coefficients();
  for (std::size_t e = 0; e < c.size(); ++e)
    if (c[e] != 0) out[std::to_string(e)] = coefficient_to_json(c[e]);
  return out;
}

Poly poly_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorKind::Parse, "polynomial must be an exponent -> coefficient object");
  std::vector<BigRational> c;
  for (const auto& [key, value] : j.items()) {
    std::size_t used = 0;
    const long e = std::stol(key, &used);
    if (used != key.size() || e < 0) throw Error(ErrorKind::Parse, "bad exponent \"" + key + "\"");
    if (c.size() <= static_cast<std::size_t>(e)) c.resize(static_cast<std::size_t>(e) + 1);
    c[static_cast<std::size_t>(e)] = coefficient_from_json(value);
  }
  return Poly(std::move(c));
}

Json to_json(const RGFRational& r) {
  Json out;
  out["num"] = poly_to_json(r.numerator);
  out["den"] = r.denom_factors;
  out["certified_to"] = r.certified_to;
  return out;
}

RGFRational rgf_from_json(const Json& j) {
  try {
    return RGFRational{poly_from_json(j.at("num")), j.at("den").get<std::vector<std::int64_t>>(),
                       j.at("certified_to").get<std::int64_t>()};
  } catch (const nlohmann::json::exception& err) {
    throw Error(ErrorKind::Parse, err.what());
  }
}

Json to_json(const RationalFunction& f) {
  Json out;
  out["num"] = poly_to_json(f.num());
  out["den"] = poly_to_json(f.den());
  out["text"] = to_string(f);
  return out;
}

RationalFunction rational_function_from_json(const Json& j) {
  try {
    return RationalFunction(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
  } catch (const nlohmann::json::exception& err) {
    throw Error(ErrorKind::Parse, err.what());
  }
}

std::optional<Poly> numerator_over(const RationalFunction& f, const std::vector<std::int64_t>& denom_factors) {
  auto [q, r] = divmod(f.num() * binomial_product(denom_factors), f.den());
  if (!r.is_zero()) return std::nullopt;
  return q;
}

}  // namespace nsq
