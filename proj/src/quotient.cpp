#include "nsq/quotient.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace nsq {

QuotientSpec::QuotientSpec(GeneratorList gens, std::int64_t p) : gens_(std::move(gens)), p_(p) {
  if (p_ < 1) throw Error(ErrorKind::InvalidArgument, "p must be a positive integer");
  gens_.require_gcd_one();
  for (auto a : gens_.sorted()) (a % p_ == 0 ? divisible_ : coprime_).push_back(a);
}

TpSet enumerate_tp(std::span<const std::int64_t> gens, std::int64_t p, const Limits& limits) {
  if (p < 1) throw Error(ErrorKind::InvalidArgument, "p must be a positive integer");
  TpSet out;
  out.p = p;
  out.gens.assign(gens.begin(), gens.end());
  if (p == 1 || gens.empty()) return out;
  for (auto a : gens)
    if (a % p == 0)
      throw Error(ErrorKind::NotCoprimePart, std::to_string(a) + " is divisible by p = " + std::to_string(p));

  std::int64_t total = 1;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (total > limits.tp_cap / p)
      throw Error(ErrorKind::CapExceeded, "p^n tuples exceed cap " + std::to_string(limits.tp_cap));
    total *= p;
  }

  const std::size_t n = gens.size();
  std::vector<std::int64_t> x(n, 0);
  std::int64_t residue_sum = 0;  // sum x_i t_i
  std::int64_t value_sum = 0;    // sum x_i a_i
  for (std::int64_t step = 1; step < total; ++step) {
    // Odometer increment, last coordinate fastest.
    for (std::size_t i = n; i-- > 0;) {
      const std::int64_t t = gens[i] % p;
      if (x[i] + 1 < p) {
        ++x[i];
        residue_sum += t;
        value_sum += gens[i];
        break;
      }
      residue_sum -= t * x[i];
      value_sum -= gens[i] * x[i];
      x[i] = 0;
    }
    if (residue_sum > 0 && residue_sum % p == 0) {
      out.tuples.push_back(x);
      out.values.push_back(value_sum / p);
    }
  }
  return out;
}

TpSet enumerate_tp(const QuotientSpec& q, const Limits& limits) {
  return enumerate_tp(q.coprime_part(), q.p(), limits);
}

MembershipTable quotient_membership(const QuotientSpec& q, std::optional<std::int64_t> bound, const Limits& limits) {
  if (bound && *bound < 0) throw Error(ErrorKind::InvalidArgument, "bound must be nonnegative");
  const std::int64_t p = q.p();
  MembershipTable base = build_membership(q.gens(), std::nullopt, limits);
  const std::int64_t base_conductor = *base.conductor();
  // Every n with p*n past the base conductor is a member; walk down from
  // there to the exact conductor of the quotient.
  std::int64_t c = (base_conductor + p - 1) / p;
  while (c > 0 && base.contains(p * (c - 1))) --c;
  const std::int64_t b = bound.value_or(2 * c + 1);
  if (b + 1 > limits.sieve_cap)
    throw Error(ErrorKind::CapExceeded, "quotient sieve to " + std::to_string(b) + " exceeds cap");
  std::vector<std::uint8_t> flags(static_cast<std::size_t>(b + 1));
  for (std::int64_t n = 0; n <= b; ++n) flags[static_cast<std::size_t>(n)] = base.contains(p * n) ? 1 : 0;
  std::optional<std::int64_t> conductor;
  if (c <= b) conductor = c;
  return MembershipTable(std::move(flags), conductor);
}

std::vector<std::int64_t> generators_thm(const QuotientSpec& q, const Limits& limits) {
  std::vector<std::int64_t> out;
  for (auto a : q.divisible()) out.push_back(a / q.p());
  out.insert(out.end(), q.coprime_part().begin(), q.coprime_part().end());
  const TpSet tp = enumerate_tp(q, limits);
  out.insert(out.end(), tp.values.begin(), tp.values.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::int64_t> minimal_quotient_generators(const QuotientSpec& q, const Limits& limits) {
  return minimal_generators_of(quotient_membership(q, std::nullopt, limits));
}

std::optional<std::int64_t> frobenius_quotient(const QuotientSpec& q, const Limits& limits) {
  const auto table = quotient_membership(q, std::nullopt, limits);
  const std::int64_t c = *table.conductor();
  if (c == 0) return std::nullopt;
  return c - 1;
}

VerificationReport verify_generators(const QuotientSpec& q, const Limits& limits) {
  VerificationReport report;
  report.generators = generators_thm(q, limits);
  const GeneratorList spanned(report.generators);
  if (spanned.gcd() != 1) return report;
  const std::int64_t fq = frobenius_quotient(q, limits).value_or(0);
  const std::int64_t fg = frobenius(spanned, limits).value_or(0);
  report.bound = std::max(fq, fg) + std::max(spanned.max(), q.gens().max()) + 1;
  const auto lhs = quotient_membership(q, report.bound, limits);
  const auto rhs = build_membership(spanned, report.bound, limits);
  for (std::int64_t n = 0; n <= report.bound; ++n) {
    if (lhs.contains(n) != rhs.contains(n)) {
      report.first_mismatch = n;
      return report;
    }
  }
  report.pass = true;
  return report;
}

namespace {

// (c1*a1 + c2*a2 + c3*a3) / divisor
struct Term {
  std::array<int, 3> c;
  int divisor;
};

struct Row {
  int p;
  std::array<std::int64_t, 3> t;
  std::vector<Term> terms;
};

const std::vector<Row>& table_rows() {
  static const std::vector<Row> rows = [] {
    const Term a1{{1, 0, 0}, 1}, a2{{0, 1, 0}, 1}, a3{{0, 0, 1}, 1};
    auto over = [](int c1, int c2, int c3, int d) { return Term{{c1, c2, c3}, d}; };
    const std::vector<Term> all_pairs3 = {a1,
                                          a2,
                                          a3,
                                          over(2, 1, 0, 3),
                                          over(2, 0, 1, 3),
                                          over(1, 2, 0, 3),
                                          over(0, 2, 1, 3),
                                          over(1, 0, 2, 3),
                                          over(0, 1, 2, 3),
                                          over(1, 1, 1, 3)};
    return std::vector<Row>{
        {2, {0, 0, 1}, {over(1, 0, 0, 2), over(0, 1, 0, 2), a3}},
        {2, {0, 1, 1}, {over(1, 0, 0, 2), a2, a3, over(0, 1, 1, 2)}},
        {2, {1, 1, 1}, {a1, a2, a3, over(1, 1, 0, 2), over(1, 0, 1, 2), over(0, 1, 1, 2)}},
        {3, {0, 0, 1}, {over(1, 0, 0, 3), over(0, 1, 0, 3), a3}},
        {3, {0, 0, 2}, {over(1, 0, 0, 3), over(0, 1, 0, 3), a3}},
        {3, {0, 1, 1}, {over(1, 0, 0, 3), a2, a3, over(0, 1, 2, 3), over(0, 2, 1, 3)}},
        {3, {0, 1, 2}, {over(1, 0, 0, 3), a2, a3, over(0, 1, 1, 3)}},
        {3, {0, 2, 2}, {over(1, 0, 0, 3), a2, a3, over(0, 2, 1, 3), over(0, 1, 2, 3)}},
        {3, {1, 1, 1}, all_pairs3},
        {3, {1, 1, 2}, {a1, a2, a3, over(1, 0, 1, 3), over(0, 1, 1, 3), over(2, 1, 0, 3), over(1, 2, 0, 3)}},
        {3, {1, 2, 2}, {a1, a2, a3, over(1, 1, 0, 3), over(1, 0, 1, 3), over(0, 2, 1, 3), over(0, 1, 2, 3)}},
        {3, {2, 2, 2}, all_pairs3},
    };
  }();
  return rows;
}

}  // namespace

std::vector<std::int64_t> table1_generators(const QuotientSpec& q) {
  const std::int64_t p = q.p();
  const auto gens = q.gens().sorted();
  if (gens.size() != 3 || (p != 2 && p != 3))
    throw Error(ErrorKind::NoMatchingRow, "closed forms cover three generators with p in {2, 3}");
  std::array<std::int64_t, 3> a{gens[0], gens[1], gens[2]};
  std::stable_sort(a.begin(), a.end(), [p](std::int64_t x, std::int64_t y) { return x % p < y % p; });
  const std::array<std::int64_t, 3> t{a[0] % p, a[1] % p, a[2] % p};
  for (const auto& row : table_rows()) {
    if (row.p != p || row.t != t) continue;
    std::vector<std::int64_t> out;
    for (const auto& term : row.terms) {
      const std::int64_t sum = term.c[0] * a[0] + term.c[1] * a[1] + term.c[2] * a[2];
      if (sum % term.divisor != 0)
        throw Error(ErrorKind::InternalMismatch, "non-integral closed-form generator");
      out.push_back(sum / term.divisor);
    }
    return out;
  }
  throw Error(ErrorKind::NoMatchingRow, "no closed form for residue pattern (" + std::to_string(t[0]) + "," +
                                            std::to_string(t[1]) + "," + std::to_string(t[2]) + ")");
}

}  // namespace nsq
