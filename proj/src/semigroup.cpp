#include "nsq/semigroup.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

namespace nsq {

std::int64_t gcd_of(std::span<const std::int64_t> values) {
  std::int64_t g = 0;
  for (auto v : values) g = std::gcd(g, v);
  return g;
}

GeneratorList::GeneratorList(std::vector<std::int64_t> input) : input_(std::move(input)) {
  if (input_.empty()) throw Error(ErrorKind::InvalidArgument, "generator list is empty");
  for (auto v : input_)
    if (v < 1) throw Error(ErrorKind::InvalidArgument, "generators must be positive, got " + std::to_string(v));
  sorted_ = input_;
  std::sort(sorted_.begin(), sorted_.end());
  sorted_.erase(std::unique(sorted_.begin(), sorted_.end()), sorted_.end());
  gcd_ = gcd_of(sorted_);
}

std::vector<std::int64_t> GeneratorList::residues(std::int64_t p) const {
  std::vector<std::int64_t> out;
  for (auto a : sorted_) out.push_back(a % p);
  return out;
}

std::vector<std::int64_t> GeneratorList::quotients(std::int64_t p) const {
  std::vector<std::int64_t> out;
  for (auto a : sorted_) out.push_back(a / p);
  return out;
}

void GeneratorList::require_gcd_one() const {
  if (gcd_ != 1) throw Error(ErrorKind::GcdNotOne, "gcd of generators is " + std::to_string(gcd_));
}

MembershipTable::MembershipTable(std::vector<std::uint8_t> flags, std::optional<std::int64_t> conductor)
    : flags_(std::move(flags)), conductor_(conductor) {
  if (flags_.empty()) throw Error(ErrorKind::InvalidArgument, "membership table needs bound >= 0");
}

bool MembershipTable::contains(std::int64_t n) const {
  if (n < 0) return false;
  if (n <= bound()) return flags_[static_cast<std::size_t>(n)] != 0;
  if (conductor_) return true;
  throw Error(ErrorKind::InvalidArgument, "query " + std::to_string(n) + " beyond uncertified bound");
}

std::vector<std::int64_t> MembershipTable::members() const {
  std::vector<std::int64_t> out;
  for (std::size_t n = 0; n < flags_.size(); ++n)
    if (flags_[n]) out.push_back(static_cast<std::int64_t>(n));
  return out;
}

namespace {

void check_cap(std::int64_t bound, const Limits& limits) {
  if (bound + 1 > limits.sieve_cap)
    throw Error(ErrorKind::CapExceeded, "sieve of " + std::to_string(bound + 1) + " cells exceeds cap " +
                                            std::to_string(limits.sieve_cap));
}

// Start of the first run of `run` consecutive members, if the run fits.
std::optional<std::int64_t> find_run(const std::vector<std::uint8_t>& flags, std::int64_t run) {
  std::int64_t len = 0;
  for (std::size_t n = 0; n < flags.size(); ++n) {
    len = flags[n] ? len + 1 : 0;
    if (len == run) return static_cast<std::int64_t>(n) - run + 1;
  }
  return std::nullopt;
}

void sieve_from(std::vector<std::uint8_t>& flags, std::size_t start, std::span<const std::int64_t> gens) {
  for (std::size_t n = start; n < flags.size(); ++n) {
    std::uint8_t hit = 0;
    for (auto a : gens) {
      const auto ua = static_cast<std::size_t>(a);
      if (ua > n) break;
      if (flags[n - ua]) {
        hit = 1;
        break;
      }
    }
    flags[n] = hit;
  }
}

}  // namespace

MembershipTable build_membership(const GeneratorList& gens, std::optional<std::int64_t> bound,
                                 const Limits& limits) {
  if (bound) {
    if (*bound < 0) throw Error(ErrorKind::InvalidArgument, "bound must be nonnegative");
    check_cap(*bound, limits);
    std::vector<std::uint8_t> flags(static_cast<std::size_t>(*bound + 1));
    flags[0] = 1;
    sieve_from(flags, 1, gens.sorted());
    auto conductor = find_run(flags, gens.min());
    return MembershipTable(std::move(flags), conductor);
  }
  gens.require_gcd_one();
  std::int64_t b = std::max(gens.max() * gens.max(), gens.min());
  MembershipTable table = build_membership(gens, std::min(b, limits.sieve_cap - 1), limits);
  while (!table.certified()) {
    if (table.bound() + 1 >= limits.sieve_cap) check_cap(2 * table.bound(), limits);
    table = extend_membership(table, gens, std::min(2 * table.bound(), limits.sieve_cap - 1), limits);
  }
  return table;
}

MembershipTable extend_membership(const MembershipTable& table, const GeneratorList& gens, std::int64_t new_bound,
                                  const Limits& limits) {
  if (new_bound <= table.bound()) return table;
  check_cap(new_bound, limits);
  std::vector<std::uint8_t> flags = table.flags();
  const std::size_t start = flags.size();
  flags.resize(static_cast<std::size_t>(new_bound + 1));
  if (table.certified()) {
    std::fill(flags.begin() + static_cast<std::ptrdiff_t>(start), flags.end(), 1);
    return MembershipTable(std::move(flags), table.conductor());
  }
  sieve_from(flags, start, gens.sorted());
  auto conductor = find_run(flags, gens.min());
  return MembershipTable(std::move(flags), conductor);
}

std::optional<std::int64_t> frobenius(const GeneratorList& gens, const Limits& limits) {
  const auto table = build_membership(gens, std::nullopt, limits);
  const std::int64_t c = *table.conductor();
  if (c == 0) return std::nullopt;
  return c - 1;
}

std::vector<std::int64_t> gaps(const GeneratorList& gens, const Limits& limits) {
  const auto table = build_membership(gens, std::nullopt, limits);
  std::vector<std::int64_t> out;
  for (std::int64_t n = 0; n < *table.conductor(); ++n)
    if (!table.contains(n)) out.push_back(n);
  return out;
}

std::vector<std::int64_t> apery(const GeneratorList& gens, std::int64_t m, const Limits& limits) {
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "Apery modulus must be positive");
  auto table = build_membership(gens, std::nullopt, limits);
  if (!table.contains(m)) throw Error(ErrorKind::NotAMember, std::to_string(m) + " is not in the semigroup");
  const std::int64_t top = *table.conductor() + m - 1;
  table = extend_membership(table, gens, top, limits);
  std::vector<std::int64_t> out(static_cast<std::size_t>(m), -1);
  std::int64_t found = 0;
  for (std::int64_t n = 0; n <= top && found < m; ++n) {
    auto& slot = out[static_cast<std::size_t>(n % m)];
    if (slot < 0 && table.contains(n)) {
      slot = n;
      ++found;
    }
  }
  return out;
}

std::vector<std::int64_t> minimal_generators_of(const MembershipTable& table) {
  if (!table.certified()) throw Error(ErrorKind::InvalidArgument, "minimal generators need a certified table");
  const std::int64_t c = *table.conductor();
  std::int64_t mult = c == 0 ? 1 : c;
  for (std::int64_t n = 1; n < c; ++n)
    if (table.contains(n)) {
      mult = n;
      break;
    }
  const std::int64_t top = std::max<std::int64_t>(c - 1 + mult, mult);
  if (table.bound() < top)
    throw Error(ErrorKind::InvalidArgument, "table bound " + std::to_string(table.bound()) + " is below F + m = " +
                                                std::to_string(top));
  std::vector<std::int64_t> nonzero;
  std::vector<std::int64_t> out;
  for (std::int64_t n = mult; n <= top; ++n) {
    if (!table.contains(n)) continue;
    bool decomposable = false;
    for (auto s : nonzero) {
      if (2 * s > n) break;
      if (table.contains(n - s)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) out.push_back(n);
    nonzero.push_back(n);
  }
  return out;
}

std::vector<std::int64_t> minimal_generators(const GeneratorList& gens, const Limits& limits) {
  auto table = build_membership(gens, std::nullopt, limits);
  return minimal_generators_of(table);
}

bool semigroup_equal(const GeneratorList& a, const GeneratorList& b, const Limits& limits) {
  a.require_gcd_one();
  b.require_gcd_one();
  const std::int64_t fa = frobenius(a, limits).value_or(0);
  const std::int64_t fb = frobenius(b, limits).value_or(0);
  const std::int64_t bound = std::max(fa, fb) + std::max(a.max(), b.max()) + 1;
  return build_membership(a, bound, limits).flags() == build_membership(b, bound, limits).flags();
}

BigInt denumerant(std::int64_t a0, const GeneratorList& gens) {
  if (a0 < 0) throw Error(ErrorKind::InvalidArgument, "denumerant target must be nonnegative");
  if (a0 <= 10'000'000) return denumerant_series(gens, a0)[static_cast<std::size_t>(a0)];
  // Recursion over the tuple, largest parts outermost; the last part is a
  // divisibility test.
  std::vector<std::int64_t> parts(gens.input().begin(), gens.input().end());
  std::sort(parts.begin(), parts.end());
  std::function<BigInt(std::int64_t, std::size_t)> count = [&](std::int64_t n, std::size_t k) -> BigInt {
    const std::int64_t a = parts[k - 1];
    if (k == 1) return BigInt(n % a == 0 ? 1 : 0);
    BigInt total = 0;
    for (std::int64_t rest = n; rest >= 0; rest -= a) total += count(rest, k - 1);
    return total;
  };
  return count(a0, parts.size());
}

CountingSeries denumerant_series(const GeneratorList& gens, std::int64_t n) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "series order must be nonnegative");
  std::vector<BigInt> c(static_cast<std::size_t>(n + 1));
  c[0] = 1;
  for (auto a : gens.input()) {
    const auto ua = static_cast<std::size_t>(a);
    for (std::size_t k = ua; k < c.size(); ++k) c[k] += c[k - ua];
  }
  return CountingSeries(std::move(c));
}

}  // namespace nsq
