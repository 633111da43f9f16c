#include <random>

#include "doctest.h"
#include "nsq/semigroup.hpp"
#include "oracles.hpp"

using namespace nsq;

namespace {

GeneratorList G(std::vector<std::int64_t> v) { return GeneratorList(std::move(v)); }

std::vector<std::int64_t> members_upto(const MembershipTable& t, std::int64_t b) {
  std::vector<std::int64_t> out;
  for (std::int64_t n = 0; n <= b; ++n)
    if (t.contains(n)) out.push_back(n);
  return out;
}

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

TEST_CASE("GeneratorList validation and views") {
  const auto g = G({6, 5, 6, 10});
  CHECK(std::vector<std::int64_t>(g.sorted().begin(), g.sorted().end()) == std::vector<std::int64_t>{5, 6, 10});
  CHECK(g.input().size() == 4);
  CHECK(g.gcd() == 1);
  CHECK(g.residues(3) == std::vector<std::int64_t>{2, 0, 1});
  CHECK(g.quotients(3) == std::vector<std::int64_t>{1, 2, 3});
  CHECK(kind_of([] { G({}); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { G({3, 0}); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { G({4, 6}).require_gcd_one(); }) == ErrorKind::GcdNotOne);
}

TEST_CASE("build_membership") {
  const auto t56 = build_membership(G({5, 6}), 20);
  CHECK(members_upto(t56, 20) == std::vector<std::int64_t>{0, 5, 6, 10, 11, 12, 15, 16, 17, 18, 20});
  CHECK(members_upto(build_membership(G({1}), 3), 3) == std::vector<std::int64_t>{0, 1, 2, 3});
  CHECK(members_upto(build_membership(G({3, 5}), 10), 10) == std::vector<std::int64_t>{0, 3, 5, 6, 8, 9, 10});

  const auto auto56 = build_membership(G({5, 6}));
  CHECK(auto56.certified());
  CHECK(*auto56.conductor() == 20);
  CHECK(auto56.contains(1000001));
  CHECK_FALSE(auto56.contains(19));
  CHECK(kind_of([] { build_membership(G({4, 6})); }) == ErrorKind::GcdNotOne);
  Limits tiny;
  tiny.sieve_cap = 10;
  CHECK(kind_of([&] { build_membership(G({7, 11}), std::nullopt, tiny); }) == ErrorKind::CapExceeded);

  // uncertified table refuses to answer past its bound
  const auto small = build_membership(G({5, 6}), 8);
  CHECK_FALSE(small.certified());
  CHECK(kind_of([&] { small.contains(9); }) == ErrorKind::InvalidArgument);
  const auto grown = extend_membership(small, G({5, 6}), 30);
  CHECK(members_upto(grown, 20) == members_upto(t56, 20));
}

TEST_CASE("frobenius and gaps") {
  CHECK(frobenius(G({3, 5})) == 7);
  CHECK(frobenius(G({1})) == std::nullopt);
  CHECK(frobenius(G({5, 6})) == 19);
  CHECK(gaps(G({3, 5})) == std::vector<std::int64_t>{1, 2, 4, 7});
  CHECK(gaps(G({1})).empty());
  CHECK(gaps(G({2, 5})) == std::vector<std::int64_t>{1, 3});
  CHECK(kind_of([] { frobenius(G({4, 6})); }) == ErrorKind::GcdNotOne);
}

TEST_CASE("apery") {
  CHECK(apery(G({3, 5}), 3) == std::vector<std::int64_t>{0, 10, 5});
  CHECK(apery(G({1}), 1) == std::vector<std::int64_t>{0});
  CHECK(apery(G({2, 5}), 2) == std::vector<std::int64_t>{0, 5});
  CHECK(kind_of([] { apery(G({3, 5}), 4); }) == ErrorKind::NotAMember);
}

TEST_CASE("minimal_generators") {
  CHECK(minimal_generators(G({2, 4, 5})) == std::vector<std::int64_t>{2, 5});
  CHECK(minimal_generators(G({3, 4, 5})) == std::vector<std::int64_t>{3, 4, 5});
  CHECK(minimal_generators(G({1, 7})) == std::vector<std::int64_t>{1});
}

TEST_CASE("semigroup_equal") {
  CHECK(semigroup_equal(G({2, 5}), G({2, 5, 4})));
  CHECK(semigroup_equal(G({3, 5}), G({3, 5, 8})));
  CHECK_FALSE(semigroup_equal(G({3, 5}), G({3, 7})));
}

TEST_CASE("denumerant and denumerant_series") {
  CHECK(denumerant(0, G({3, 5})) == 1);
  CHECK(denumerant(0, G({7, 9, 11})) == 1);
  CHECK(denumerant(15, G({3, 5})) == 2);
  CHECK(denumerant(7, G({3, 5})) == 0);
  auto ints = [](const CountingSeries& s) {
    std::vector<long> v;
    for (const auto& c : s.coefficients()) v.push_back(c.get_si());
    return v;
  };
  CHECK(ints(denumerant_series(G({3, 5}), 8)) == std::vector<long>{1, 0, 0, 1, 0, 1, 1, 0, 1});
  CHECK(ints(denumerant_series(G({1}), 3)) == std::vector<long>{1, 1, 1, 1});
  CHECK(ints(denumerant_series(G({5, 6}), 11)) == std::vector<long>{1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 1, 1});
}

TEST_CASE("semigroup invariants on random generator sets") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> count(1, 4);
  for (int trial = 0; trial < 80; ++trial) {
    const auto raw = oracle::random_gens(rng, static_cast<std::size_t>(count(rng)), 25);
    const GeneratorList g(raw);
    const auto table = build_membership(g);
    const std::int64_t b = table.bound();
    const auto series = denumerant_series(g, b);
    const auto brute = oracle::members(raw, b);
    for (std::int64_t n = 0; n <= b; ++n) {
      CHECK((series[static_cast<std::size_t>(n)] > 0) == table.contains(n));
      CHECK(table.contains(n) == (brute.count(n) > 0));
    }
    for (std::int64_t n = 0; n <= std::min<std::int64_t>(b, 60); ++n)
      CHECK(series[static_cast<std::size_t>(n)] == oracle::count_representations(n, raw));
    for (std::int64_t n = 0; n <= std::min<std::int64_t>(b, 60); ++n)
      CHECK(denumerant(n, g) == series[static_cast<std::size_t>(n)]);

    // generating function 1/prod(1 - x^a) agrees with the knapsack series
    const long order = 40;
    const auto rational = series_from_rational(RationalFunction(poly_from_ints({1}), binomial_product(raw)), order);
    CHECK(rational == to_rational_series(denumerant_series(g, order)));

    const auto f = frobenius(g);
    const auto gs = gaps(g);
    const std::int64_t brute_f = oracle::frobenius_bruteforce(raw);
    if (brute_f < 0) {
      CHECK_FALSE(f.has_value());
      CHECK(gs.empty());
    } else {
      REQUIRE(f.has_value());
      CHECK(*f == brute_f);
      CHECK(gs.back() == *f);
    }

    const std::int64_t m = g.min();
    const auto ap = apery(g, m);
    CHECK(ap.size() == static_cast<std::size_t>(m));
    CHECK(*std::min_element(ap.begin(), ap.end()) == 0);
    for (std::int64_t r = 0; r < m; ++r) CHECK(ap[static_cast<std::size_t>(r)] % m == r);
    CHECK(*std::max_element(ap.begin(), ap.end()) == f.value_or(-1) + m);

    const auto mg = minimal_generators(g);
    CHECK(minimal_generators(GeneratorList(mg)) == mg);
    CHECK(semigroup_equal(g, GeneratorList(mg)));
  }
}
