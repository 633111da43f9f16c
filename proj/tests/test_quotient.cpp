#include <random>

#include "doctest.h"
#include "nsq/quotient.hpp"
#include "oracles.hpp"

using namespace nsq;

namespace {

QuotientSpec Q(std::vector<std::int64_t> a, std::int64_t p) { return QuotientSpec(GeneratorList(std::move(a)), p); }

std::vector<std::int64_t> members_upto(const MembershipTable& t, std::int64_t b) {
  std::vector<std::int64_t> out;
  for (std::int64_t n = 0; n <= b; ++n)
    if (t.contains(n)) out.push_back(n);
  return out;
}

using Tuples = std::vector<std::vector<std::int64_t>>;

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("QuotientSpec split") {
  const auto q = Q({6, 5, 9}, 3);
  CHECK(q.divisible() == std::vector<std::int64_t>{6, 9});
  CHECK(q.coprime_part() == std::vector<std::int64_t>{5});
  CHECK(kind_of([] { Q({4, 6}, 2); }) == ErrorKind::GcdNotOne);
  CHECK(kind_of([] { Q({3, 5}, 0); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("quotient_membership") {
  CHECK(members_upto(quotient_membership(Q({5, 6}, 3), 6), 6) == std::vector<std::int64_t>{0, 2, 4, 5, 6});
  const auto one = quotient_membership(Q({5, 6}, 1), 20);
  CHECK(members_upto(one, 20) == members_upto(build_membership(GeneratorList({5, 6}), 20), 20));
  CHECK(members_upto(quotient_membership(Q({3, 5}, 2), 6), 6) == std::vector<std::int64_t>{0, 3, 4, 5, 6});
  const auto full = quotient_membership(Q({5, 6}, 3));
  CHECK(full.certified());
  CHECK(*full.conductor() == 4);
}

TEST_CASE("enumerate_tp") {
  const std::vector<std::int64_t> t12{1, 2};
  const auto tp = enumerate_tp(t12, 3);
  CHECK(tp.tuples == Tuples{{1, 1}, {2, 2}});
  CHECK(tp.values == std::vector<std::int64_t>{1, 2});

  const std::vector<std::int64_t> a35{3, 5};
  const auto tp35 = enumerate_tp(a35, 2);
  CHECK(tp35.tuples == Tuples{{1, 1}});
  CHECK(tp35.values == std::vector<std::int64_t>{4});

  CHECK(enumerate_tp(a35, 1).tuples.empty());
  CHECK(enumerate_tp(Q({5, 6}, 1)).tuples.empty());

  const std::vector<std::int64_t> bad{3, 6};
  CHECK(kind_of([&] { enumerate_tp(bad, 3); }) == ErrorKind::NotCoprimePart);
  Limits tiny;
  tiny.tp_cap = 8;
  const std::vector<std::int64_t> many{1, 2, 4, 5};
  CHECK(kind_of([&] { enumerate_tp(many, 3, tiny); }) == ErrorKind::CapExceeded);
}

TEST_CASE("generators_thm") {
  CHECK(generators_thm(Q({5, 6}, 3)) == std::vector<std::int64_t>{2, 5});
  CHECK(generators_thm(Q({4, 7}, 2)) == std::vector<std::int64_t>{2, 7});
  const auto g = generators_thm(Q({4, 11, 14}, 3));
  for (std::int64_t v : {4, 11, 14, 5, 6, 12, 13})
    CHECK(std::find(g.begin(), g.end(), v) != g.end());
  CHECK(std::is_sorted(g.begin(), g.end()));
  CHECK(std::adjacent_find(g.begin(), g.end()) == g.end());
  CHECK(semigroup_equal(GeneratorList(g), GeneratorList({4, 11, 14, 5, 6, 12, 13})));
}

TEST_CASE("minimal_quotient_generators") {
  CHECK(minimal_quotient_generators(Q({5, 6}, 3)) == std::vector<std::int64_t>{2, 5});
  CHECK(minimal_quotient_generators(Q({3, 5}, 2)) == std::vector<std::int64_t>{3, 4, 5});
  CHECK(minimal_quotient_generators(Q({5, 6}, 1)) == minimal_generators(GeneratorList({5, 6})));
}

TEST_CASE("verify_generators") {
  CHECK(verify_generators(Q({5, 6}, 3)).pass);
  const auto r = verify_generators(Q({3, 5}, 8));
  CHECK(r.pass);
  CHECK(std::find(r.generators.begin(), r.generators.end(), 1) != r.generators.end());
  CHECK(frobenius_quotient(Q({3, 5}, 8)) == std::nullopt);
}

TEST_CASE("frobenius_quotient") {
  CHECK(frobenius_quotient(Q({5, 6}, 3)) == 3);
  CHECK(frobenius_quotient(Q({5, 6}, 4)) == 2);
  CHECK(minimal_quotient_generators(Q({5, 6}, 4)) == std::vector<std::int64_t>{3, 4, 5});
}

TEST_CASE("table1_generators") {
  CHECK(table1_generators(Q({3, 5, 7}, 2)) == std::vector<std::int64_t>{3, 5, 7, 4, 5, 6});
  CHECK(table1_generators(Q({3, 6, 7}, 3)) == std::vector<std::int64_t>{1, 2, 7});
  CHECK(table1_generators(Q({6, 7, 11}, 3)) == std::vector<std::int64_t>{2, 7, 11, 6});
  CHECK(kind_of([] { table1_generators(Q({3, 5}, 2)); }) == ErrorKind::NoMatchingRow);
  CHECK(kind_of([] { table1_generators(Q({3, 5, 7}, 5)); }) == ErrorKind::NoMatchingRow);
  // four generators have no row
  CHECK(kind_of([] { table1_generators(Q({2, 4, 6, 7}, 2)); }) == ErrorKind::NoMatchingRow);
}

TEST_CASE("quotient properties on random instances") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> count(1, 4), pick_p(1, 6);
  for (int trial = 0; trial < 120; ++trial) {
    const auto raw = oracle::random_gens(rng, static_cast<std::size_t>(count(rng)), 40);
    const std::int64_t p = pick_p(rng);
    const QuotientSpec q(GeneratorList(raw), p);
    const auto table = quotient_membership(q);
    const std::int64_t b = table.bound();
    const auto brute = oracle::quotient_members(raw, p, b);
    for (std::int64_t n = 0; n <= b; ++n) CHECK(table.contains(n) == (brute.count(n) > 0));

    const auto gens = generators_thm(q);
    const auto spanned = oracle::members(gens, b);
    for (std::int64_t n = 0; n <= b; ++n) CHECK(table.contains(n) == (spanned.count(n) > 0));
    CHECK(verify_generators(q).pass);

    for (auto m : oracle::members(raw, b)) CHECK(table.contains(m));
    const bool is_n = !frobenius_quotient(q).has_value();
    CHECK(is_n == (oracle::members(raw, p).count(p) > 0));

    const auto tp = enumerate_tp(q);
    for (auto v : tp.values) {
      CHECK(v > 0);
      CHECK(oracle::members(raw, p * v).count(p * v) == 1);
    }
    const auto minimal = minimal_quotient_generators(q);
    CHECK(semigroup_equal(GeneratorList(minimal), GeneratorList(gens)));
    for (auto v : minimal) CHECK(table.contains(v));
  }
}
