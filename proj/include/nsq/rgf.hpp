#pragma once

// Representation generating functions RGF_p(x) = sum_n d(p*n; A) x^n.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nsq/semigroup.hpp"

namespace nsq {

struct RGFSeries {
  std::int64_t p = 1;
  CountingSeries coefficients;  // c_n = d(p*n; A)
};

/// One denumerant pass to order p*N, then every p-th coefficient.
RGFSeries rgf_series(const GeneratorList& gens, std::int64_t p, std::int64_t n);

/// numerator / prod (1 - x^b) for b in denom_factors. The expansion has been
/// checked against the series through certified_to; that is a numeric
/// certificate, not a proof.
struct RGFRational {
  Poly numerator;  // integer coefficients
  std::vector<std::int64_t> denom_factors;
  std::int64_t certified_to = 0;

  RationalFunction to_rational_function() const;
  /// "(1 + x^4)/((1-x^3)*(1-x^5))"
  std::string to_text() const;
};

/// Guess b_i = a_i / gcd(a_i, p), read the numerator off the series times the
/// denominator, and check the remaining coefficients vanish up to the
/// horizon. Falls back to (1 - x^Q)^k, Q = lcm(A) / gcd(lcm(A), p).
RGFRational rgf_rational(const GeneratorList& gens, std::int64_t p, const Limits& limits = {});

/// Try one specific denominator; nullopt when the remainder is nonzero
/// before the horizon.
std::optional<RGFRational> fit_rgf(const GeneratorList& gens, std::int64_t p,
                                   std::vector<std::int64_t> denom_factors, std::int64_t horizon);

/// Certification horizon used by rgf_rational for a given denominator.
std::int64_t rgf_horizon(const GeneratorList& gens, std::int64_t p, const std::vector<std::int64_t>& denom_factors,
                         const Limits& limits = {});

/// Largest n with d(p*n; A) == 0, read from the series; certified by a run of
/// positive coefficients as long as the smallest positive index.
std::optional<std::int64_t> frobenius_from_rgf(const GeneratorList& gens, std::int64_t p, const Limits& limits = {});

/// Denominator exponents together with the nonzero exponents of the
/// numerator support. Needs a nonnegative numerator.
std::vector<std::int64_t> gens_from_rgf(const RGFRational& r);

}  // namespace nsq
