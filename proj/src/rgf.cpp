#include "nsq/rgf.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace nsq {

RGFSeries rgf_series(const GeneratorList& gens, std::int64_t p, std::int64_t n) {
  if (p < 1) throw Error(ErrorKind::InvalidArgument, "p must be a positive integer");
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "series order must be nonnegative");
  const CountingSeries full = denumerant_series(gens, p * n);
  std::vector<BigInt> c;
  c.reserve(static_cast<std::size_t>(n + 1));
  for (std::int64_t k = 0; k <= n; ++k) c.push_back(full[static_cast<std::size_t>(k * p)]);
  return RGFSeries{p, CountingSeries(std::move(c))};
}

RationalFunction RGFRational::to_rational_function() const {
  return RationalFunction(numerator, binomial_product(denom_factors));
}

std::string RGFRational::to_text() const {
  std::string num = to_string(numerator);
  if (numerator.coefficients().size() > 1 &&
      std::count_if(numerator.coefficients().begin(), numerator.coefficients().end(),
                    [](const BigRational& v) { return v != 0; }) > 1)
    num = "(" + num + ")";
  std::string den;
  for (std::size_t i = 0; i < denom_factors.size(); ++i) {
    if (i) den += "*";
    den += denom_factors[i] == 1 ? "(1-x)" : "(1-x^" + std::to_string(denom_factors[i]) + ")";
  }
  if (denom_factors.size() > 1) den = "(" + den + ")";
  return num + "/" + den;
}

namespace {

std::int64_t checked_lcm(std::int64_t a, std::int64_t b) {
  const std::int64_t g = std::gcd(a, b);
  const std::int64_t q = a / g;
  if (q > INT64_MAX / b) throw Error(ErrorKind::CapExceeded, "lcm of generators overflows");
  return q * b;
}

std::int64_t period_bound(const GeneratorList& gens, std::int64_t p) {
  std::int64_t l = 1;
  for (auto a : gens.sorted()) l = checked_lcm(l, a);
  return l / std::gcd(l, p);
}

}  // namespace

std::int64_t rgf_horizon(const GeneratorList& gens, std::int64_t p, const std::vector<std::int64_t>& denom_factors,
                         const Limits& limits) {
  const std::int64_t degree = std::accumulate(denom_factors.begin(), denom_factors.end(), std::int64_t{0});
  const std::int64_t period = period_bound(gens, p);
  const std::int64_t transient = (frobenius(gens, limits).value_or(0) + p - 1) / p;
  return degree + period + transient + 1;
}

std::optional<RGFRational> fit_rgf(const GeneratorList& gens, std::int64_t p, std::vector<std::int64_t> denom_factors,
                                   std::int64_t horizon) {
  const std::int64_t degree = std::accumulate(denom_factors.begin(), denom_factors.end(), std::int64_t{0});
  horizon = std::max(horizon, degree);
  std::vector<BigInt> c = rgf_series(gens, p, horizon).coefficients.coefficients();
  // Multiply by each (1 - x^b) in place, highest index first.
  for (auto b : denom_factors) {
    const auto ub = static_cast<std::size_t>(b);
    for (std::size_t k = c.size(); k-- > ub;) c[k] -= c[k - ub];
  }
  for (std::size_t k = static_cast<std::size_t>(degree) + 1; k < c.size(); ++k)
    if (c[k] != 0) return std::nullopt;
  std::vector<BigRational> num;
  num.reserve(static_cast<std::size_t>(degree) + 1);
  for (std::size_t k = 0; k <= static_cast<std::size_t>(degree); ++k) num.emplace_back(c[k]);
  return RGFRational{Poly(std::move(num)), std::move(denom_factors), horizon};
}

RGFRational rgf_rational(const GeneratorList& gens, std::int64_t p, const Limits& limits) {
  if (p < 1) throw Error(ErrorKind::InvalidArgument, "p must be a positive integer");
  gens.require_gcd_one();
  std::vector<std::int64_t> guess;
  for (auto a : gens.input()) guess.push_back(a / std::gcd(a, p));
  const std::int64_t horizon = rgf_horizon(gens, p, guess, limits);
  if (p * horizon + 1 > limits.sieve_cap)
    throw Error(ErrorKind::CapExceeded, "certification horizon " + std::to_string(horizon) + " exceeds cap");
  if (auto r = fit_rgf(gens, p, guess, horizon)) return *std::move(r);

  const std::int64_t period = period_bound(gens, p);
  std::vector<std::int64_t> fallback(gens.input().size(), period);
  const std::int64_t fallback_horizon = rgf_horizon(gens, p, fallback, limits);
  if (p * fallback_horizon + 1 > limits.sieve_cap)
    throw Error(ErrorKind::CapExceeded, "fallback horizon " + std::to_string(fallback_horizon) + " exceeds cap");
  if (auto r = fit_rgf(gens, p, fallback, fallback_horizon)) return *std::move(r);
  throw Error(ErrorKind::CertificationFailed,
              "no candidate denominator certified up to horizon " + std::to_string(fallback_horizon));
}

std::optional<std::int64_t> frobenius_from_rgf(const GeneratorList& gens, std::int64_t p, const Limits& limits) {
  if (p < 1) throw Error(ErrorKind::InvalidArgument, "p must be a positive integer");
  gens.require_gcd_one();
  std::int64_t n = 2 * gens.max();
  for (;;) {
    if (p * n + 1 > limits.sieve_cap)
      throw Error(ErrorKind::CapExceeded, "RGF series to order " + std::to_string(n) + " exceeds cap");
    const auto series = rgf_series(gens, p, n).coefficients;
    std::int64_t smallest = 0;
    for (std::int64_t k = 1; k <= n && smallest == 0; ++k)
      if (series[static_cast<std::size_t>(k)] > 0) smallest = k;
    if (smallest > 0) {
      std::int64_t run = 0;
      for (std::int64_t k = 0; k <= n; ++k) {
        run = series[static_cast<std::size_t>(k)] > 0 ? run + 1 : 0;
        if (run == smallest) {
          const std::int64_t start = k - smallest + 1;
          if (start == 0) return std::nullopt;
          return start - 1;
        }
      }
    }
    n *= 2;
  }
}

std::vector<std::int64_t> gens_from_rgf(const RGFRational& r) {
  std::vector<std::int64_t> out(r.denom_factors.begin(), r.denom_factors.end());
  const auto& c = r.numerator.coefficients();
  for (std::size_t e = 0; e < c.size(); ++e) {
    if (c[e] < 0)
      throw Error(ErrorKind::NegativeNumerator, "numerator coefficient at x^" + std::to_string(e) + " is negative");
    if (e > 0 && c[e] != 0) out.push_back(static_cast<std::int64_t>(e));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace nsq
