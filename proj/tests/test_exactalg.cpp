#include <random>

#include "doctest.h"
#include "nsq/exactalg.hpp"
#include "oracles.hpp"

using namespace nsq;

namespace {

Poly random_poly(std::mt19937_64& rng, int max_degree, int range) {
  std::uniform_int_distribution<int> deg(0, max_degree), coef(-range, range);
  std::vector<BigRational> c(static_cast<std::size_t>(deg(rng) + 1));
  for (auto& v : c) v = coef(rng);
  return Poly(std::move(c));
}

std::vector<long> ints(const Poly& p) {
  std::vector<long> out;
  for (const auto& c : p.coefficients()) out.push_back(c.get_num().get_si());
  return out;
}

}  // namespace

TEST_CASE("BigRational is kept in lowest terms") {
  BigRational r(6, 4);
  r.canonicalize();
  CHECK(r.get_num() == 3);
  CHECK(r.get_den() == 2);
  CHECK(BigRational(0) == BigRational(0, 1));
}

TEST_CASE("poly_mul") {
  CHECK(poly_mul(poly_from_ints({1, 1}), poly_from_ints({1, -1})) == poly_from_ints({1, 0, -1}));
  CHECK(poly_mul(Poly{}, poly_from_ints({1, 0, 0, 1})).is_zero());
  const auto a = poly_from_ints({1, 0, 0, 0, 1});
  const auto b = poly_from_ints({1, 0, 0, 1, 0, 1});
  const auto expected = oracle::schoolbook({1, 0, 0, 0, 1}, {1, 0, 0, 1, 0, 1});
  CHECK(ints(poly_mul(a, b)) == expected);
  CHECK(poly_mul(a, b) == poly_from_ints({1, 0, 0, 1, 1, 1, 0, 1, 0, 1}));
  CHECK(poly_mul(a, b).degree() == 9);
}

TEST_CASE("poly_divmod") {
  auto [q1, r1] = poly_divmod(poly_from_ints({0, 0, 1}), poly_from_ints({-1, 1}));
  CHECK(q1 == poly_from_ints({1, 1}));
  CHECK(r1 == poly_from_ints({1}));
  auto [q2, r2] = poly_divmod(poly_from_ints({1, 0, 0, 0, 0, 0, -1}), poly_from_ints({1, 0, -1}));
  CHECK(q2 == poly_from_ints({1, 0, 1, 0, 1}));
  CHECK(r2.is_zero());
  auto [q3, r3] = poly_divmod(poly_from_ints({1, 0, 0, 1}), poly_from_ints({1, 0, 1}));
  CHECK(q3 == poly_from_ints({0, 1}));
  CHECK(r3 == poly_from_ints({1, -1}));
  CHECK_THROWS_AS(poly_divmod(poly_from_ints({1}), Poly{}), Error);
  try {
    poly_divmod(poly_from_ints({1}), Poly{});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DivisionByZeroPoly);
  }
}

TEST_CASE("poly_gcd") {
  CHECK(poly_gcd(poly_from_ints({1, 0, -1}), poly_from_ints({1, 0, 0, -1})) == poly_from_ints({-1, 1}));
  const auto p = poly_from_ints({2, 4, 6});
  CHECK(poly_gcd(p, Poly{}) == p.monic());
  CHECK(poly_gcd(p, Poly{}).leading() == 1);

  // 1 - x L and 1 - x^3 L^2 in L over Q(x)
  using LP = DensePoly<RationalFunction>;
  const LP f({RationalFunction(1), -RationalFunction::monomial(1, 1)});
  const LP g({RationalFunction(1), RationalFunction(), -RationalFunction::monomial(1, 3)});
  CHECK(gcd(f, g).degree() == 0);
}

TEST_CASE("divmod reconstruction and gcd divisibility on random pairs") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Poly a = random_poly(rng, 9, 5);
    Poly b = random_poly(rng, 5, 5);
    if (b.is_zero()) continue;
    auto [q, r] = poly_divmod(a, b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
    const Poly common = random_poly(rng, 3, 3);
    if (common.is_zero()) continue;
    const Poly x = a * common, y = b * common;
    const Poly g = poly_gcd(x, y);
    CHECK(poly_divmod(x, g).second.is_zero());
    CHECK(poly_divmod(y, g).second.is_zero());
    CHECK(poly_divmod(g, common.monic()).second.is_zero());
  }
}

TEST_CASE("extended gcd identity") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const Poly a = random_poly(rng, 6, 4), b = random_poly(rng, 6, 4);
    if (a.is_zero() || b.is_zero()) continue;
    const auto eg = extended_gcd(a, b);
    CHECK(eg.s * a + eg.t * b == eg.g);
    CHECK(eg.g == poly_gcd(a, b));
  }
}

TEST_CASE("RationalFunction canonical form") {
  const RationalFunction f(poly_from_ints({-1, 0, 1}), poly_from_ints({-2, 2}));  // (x^2-1)/(2x-2)
  CHECK(f.den() == poly_from_ints({1}));
  CHECK(f.num() == Poly({BigRational(1, 2), BigRational(1, 2)}));
  const auto m = RationalFunction::monomial(3, -2);
  CHECK(m.num() == poly_from_ints({3}));
  CHECK(m.den() == poly_from_ints({0, 0, 1}));
  CHECK(m * RationalFunction::monomial(1, 2) == RationalFunction(3));
  CHECK_THROWS_AS(RationalFunction(poly_from_ints({1}), Poly{}), Error);

  // normalizing twice changes nothing
  const RationalFunction g(f.num(), f.den());
  CHECK(g == f);
  CHECK(to_string(RationalFunction(poly_from_ints({1, 0, 0, -1}), poly_from_ints({1}))) == "1 - x^3");
}

TEST_CASE("series_from_rational") {
  const auto geo = series_from_rational(RationalFunction(poly_from_ints({1}), poly_from_ints({1, -1})), 4);
  CHECK(geo.coefficients() == std::vector<BigRational>(5, 1));

  const RationalFunction f(poly_from_ints({1, 0, 0, 0, 1}), binomial_product({3, 5}));
  const std::vector<BigRational> want{1, 0, 0, 1, 1, 1, 1};
  CHECK(series_from_rational(f, 6).coefficients() == want);
  std::vector<BigRational> num(f.num().coefficients()), den(f.den().coefficients());
  CHECK(oracle::long_division(num, den, 6) == want);

  const auto s3 = series_from_rational(RationalFunction(poly_from_ints({1}), binomial_product({3})), 5);
  CHECK(s3.coefficients() == std::vector<BigRational>{1, 0, 0, 1, 0, 0});

  CHECK_THROWS_AS(series_from_rational(RationalFunction::monomial(1, -1), 3), Error);
}

TEST_CASE("series_mul") {
  using S = RationalSeries;
  CHECK(series_mul(S({1, 1, 1}), S({1, 0, 0})) == S({1, 1, 1}));
  CHECK(series_mul(S({1, 1}), S({1, -1})) == S({1, 0}));
  CHECK(series_mul(S({1, 0, 1}), S({1, 2, 0})) == S({1, 2, 1}));
}

TEST_CASE("series of a product equals product of series") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    Poly d1 = random_poly(rng, 4, 4), d2 = random_poly(rng, 4, 4);
    if (d1.coeff(0) == 0 || d2.coeff(0) == 0) continue;
    const RationalFunction f(random_poly(rng, 5, 4), d1), g(random_poly(rng, 5, 4), d2);
    const long n = 12;
    CHECK(series_from_rational(f * g, n) == series_mul(series_from_rational(f, n), series_from_rational(g, n)));
    CHECK(series_from_rational(f + g, n).coefficients()[n] ==
          series_from_rational(f, n)[n] + series_from_rational(g, n)[n]);
  }
}
