#pragma once

// Classical numerical-semigroup computations: membership sieves, Frobenius
// numbers, gaps, Apery sets, minimal generators and Sylvester denumerants.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "nsq/exactalg.hpp"

namespace nsq {

/// Resource caps for sieves and tuple enumeration.
struct Limits {
  std::int64_t sieve_cap = 100'000'000;  // membership cells
  std::int64_t tp_cap = 10'000'000;      // residue tuples
};

/// Generators of a semigroup. The input order (duplicates included) is kept
/// for tuple-oriented computations such as denumerants; the sorted,
/// deduplicated view is what membership questions use.
class GeneratorList {
 public:
  explicit GeneratorList(std::vector<std::int64_t> input);

  std::span<const std::int64_t> input() const { return input_; }
  std::span<const std::int64_t> sorted() const { return sorted_; }
  std::size_t size() const { return sorted_.size(); }
  std::int64_t gcd() const { return gcd_; }
  std::int64_t min() const { return sorted_.front(); }
  std::int64_t max() const { return sorted_.back(); }

  /// a_i = p*k_i + t_i over the sorted view.
  std::vector<std::int64_t> residues(std::int64_t p) const;
  std::vector<std::int64_t> quotients(std::int64_t p) const;

  void require_gcd_one() const;

 private:
  std::vector<std::int64_t> input_;
  std::vector<std::int64_t> sorted_;
  std::int64_t gcd_ = 0;
};

/// Representability flags for 0..bound.
///
/// A table is certified once it knows its conductor c: every n >= c is a
/// member. For a semigroup table the conductor is proved by the first run of
/// min(gens) consecutive members inside the table (adding min(gens) to that
/// run covers everything after it).
class MembershipTable {
 public:
  MembershipTable(std::vector<std::uint8_t> flags, std::optional<std::int64_t> conductor);

  std::int64_t bound() const { return static_cast<std::int64_t>(flags_.size()) - 1; }
  bool certified() const { return conductor_.has_value(); }
  std::optional<std::int64_t> conductor() const { return conductor_; }
  const std::vector<std::uint8_t>& flags() const { return flags_; }

  /// Membership of any n >= 0; beyond the bound this needs a certificate.
  bool contains(std::int64_t n) const;

  /// Sorted members in [0, bound].
  std::vector<std::int64_t> members() const;

 private:
  std::vector<std::uint8_t> flags_;
  std::optional<std::int64_t> conductor_;
};

/// Sieve of <A> on 0..bound. Without a bound the table is grown by doubling
/// (from max(gens)^2) until certified, which needs gcd(A) == 1.
MembershipTable build_membership(const GeneratorList& gens, std::optional<std::int64_t> bound = std::nullopt,
                                 const Limits& limits = {});

/// Same semigroup, larger bound; the old flags are reused.
MembershipTable extend_membership(const MembershipTable& table, const GeneratorList& gens, std::int64_t new_bound,
                                  const Limits& limits = {});

/// Largest gap; nullopt when the semigroup is N.
std::optional<std::int64_t> frobenius(const GeneratorList& gens, const Limits& limits = {});
std::vector<std::int64_t> gaps(const GeneratorList& gens, const Limits& limits = {});

/// Least member in each residue class modulo m (m must be a member).
std::vector<std::int64_t> apery(const GeneratorList& gens, std::int64_t m, const Limits& limits = {});

std::vector<std::int64_t> minimal_generators(const GeneratorList& gens, const Limits& limits = {});

/// Minimal generators of whatever semigroup a certified table describes:
/// nonzero members that are not a sum of two nonzero members. The table must
/// reach at least F + multiplicity.
std::vector<std::int64_t> minimal_generators_of(const MembershipTable& table);

bool semigroup_equal(const GeneratorList& a, const GeneratorList& b, const Limits& limits = {});

/// Number of x in N^k with sum x_i a_i == a0, over the input tuple.
BigInt denumerant(std::int64_t a0, const GeneratorList& gens);

/// d(0..N; A) by the unbounded-knapsack prefix recurrence.
CountingSeries denumerant_series(const GeneratorList& gens, std::int64_t n);

std::int64_t gcd_of(std::span<const std::int64_t> values);

}  // namespace nsq
