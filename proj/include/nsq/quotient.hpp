#pragma once

// Quotients <A>/p = { n : p*n in <A> } and their generator systems.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "nsq/semigroup.hpp"

namespace nsq {

/// A generator list with gcd 1 together with the divisor p. The sorted
/// generators split into those divisible by p and the rest.
class QuotientSpec {
 public:
  QuotientSpec(GeneratorList gens, std::int64_t p);

  const GeneratorList& gens() const { return gens_; }
  std::int64_t p() const { return p_; }
  /// Generators with p | a_i, in sorted order.
  const std::vector<std::int64_t>& divisible() const { return divisible_; }
  /// Generators with p not dividing a_i, in sorted order.
  const std::vector<std::int64_t>& coprime_part() const { return coprime_; }

 private:
  GeneratorList gens_;
  std::int64_t p_;
  std::vector<std::int64_t> divisible_;
  std::vector<std::int64_t> coprime_;
};

/// Residue tuples x in [0, p-1]^n with sum x_i t_i > 0 and divisible by p,
/// each paired with (sum x_i a_i) / p. Sorted lexicographically by tuple.
struct TpSet {
  std::int64_t p = 1;
  std::vector<std::int64_t> gens;
  std::vector<std::vector<std::int64_t>> tuples;
  std::vector<std::int64_t> values;
};

TpSet enumerate_tp(std::span<const std::int64_t> gens, std::int64_t p, const Limits& limits = {});
TpSet enumerate_tp(const QuotientSpec& q, const Limits& limits = {});

/// Flags of <A>/p on 0..bound. Without a bound the table extends to
/// 2*conductor + 1, enough for minimal generator extraction.
MembershipTable quotient_membership(const QuotientSpec& q, std::optional<std::int64_t> bound = std::nullopt,
                                    const Limits& limits = {});

/// {a/p : p | a} together with the generators not divisible by p and the
/// T_p values computed on them; sorted and deduplicated.
std::vector<std::int64_t> generators_thm(const QuotientSpec& q, const Limits& limits = {});

std::vector<std::int64_t> minimal_quotient_generators(const QuotientSpec& q, const Limits& limits = {});

std::optional<std::int64_t> frobenius_quotient(const QuotientSpec& q, const Limits& limits = {});

struct VerificationReport {
  bool pass = false;
  std::int64_t bound = 0;
  std::vector<std::int64_t> generators;
  std::optional<std::int64_t> first_mismatch;
};

/// Compares the semigroup spanned by generators_thm with the quotient sieve
/// up to a bound past both conductors.
VerificationReport verify_generators(const QuotientSpec& q, const Limits& limits = {});

/// Closed-form generator systems for three generators and p in {2, 3}, one
/// per residue pattern (after sorting the generators by residue).
std::vector<std::int64_t> table1_generators(const QuotientSpec& q);

}  // namespace nsq
