#include <random>

#include "doctest.h"
#include "nsq/ctengine.hpp"
#include "nsq/rgf.hpp"
#include "oracles.hpp"

using namespace nsq;

namespace {

using RF = RationalFunction;

RF geometric(std::vector<std::int64_t> denom) { return RF(poly_from_ints({1}), binomial_product(denom)); }

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::InvalidArgument;
}

CTExpr with_factors(std::vector<BinomialFactor> f, std::int64_t shift = 0) {
  CTExpr e;
  e.factors = std::move(f);
  e.shift = shift;
  return e;
}

std::vector<BigRational> ct_series(const CTExpr& e, long n) {
  return series_from_rational(ct_constant_term(e), n).coefficients();
}

}  // namespace

TEST_CASE("classify_monomial") {
  CHECK(classify_monomial(1, -3) == MonomialSize::Small);
  CHECK(classify_monomial(0, 5) == MonomialSize::Small);
  CHECK(classify_monomial(0, -2) == MonomialSize::Large);
  CHECK(classify_monomial(0, 0) == MonomialSize::One);
  CHECK(classify_monomial(-1, 7) == MonomialSize::Large);
}

TEST_CASE("BinomialFactor validation") {
  CHECK(kind_of([] { BinomialFactor(0, 1, 1); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { BinomialFactor(1, 0, 0); }) == ErrorKind::InvalidArgument);
  CHECK_NOTHROW(BinomialFactor(2, 0, 0));
}

TEST_CASE("normalize_expr") {
  const auto n = normalize_expr(with_factors({{1, 1, -3}}));
  REQUIRE(n.factors.size() == 1);
  CHECK(n.factors[0] == BinomialFactor(1, -1, 3));
  CHECK(n.shift == 3);
  CHECK(n.numerator == LambdaPoly::constant(-RF::monomial(1, -1)));

  const auto already = with_factors({{1, 0, 5}, {1, 1, 2}});
  CHECK(normalize_expr(already) == already);
  CHECK(normalize_expr(normalize_expr(n)) == normalize_expr(n));

  const auto two = normalize_expr(with_factors({{1, 2, -1}, {1, 1, 1}}));
  CHECK(two.factors == std::vector<BinomialFactor>{{1, -2, 1}, {1, 1, 1}});
  CHECK(two.shift == 1);
  CHECK(two.numerator == LambdaPoly::constant(-RF::monomial(1, -2)));
}

TEST_CASE("build_rgf_expr") {
  const auto e = build_rgf_expr(GeneratorList({5, 6}), 3);
  CHECK(e.factors == std::vector<BinomialFactor>{{1, 1, -3}, {1, 0, 5}, {1, 0, 6}});
  CHECK(build_rgf_expr(GeneratorList({7}), 1).factors == std::vector<BinomialFactor>{{1, 1, -1}, {1, 0, 7}});
  CHECK(build_rgf_expr(GeneratorList({3, 5}), 2).factors == std::vector<BinomialFactor>{{1, 1, -2}, {1, 0, 3}, {1, 0, 5}});
  CHECK(render_ct_expr(e) == "1/((1 - x*L^-3)*(1 - L^5)*(1 - L^6))");
}

TEST_CASE("reduce_factor_mod") {
  // lambda^3 == x
  const auto r = reduce_factor_mod(build_rgf_expr(GeneratorList({4, 6}), 3), 0);
  CHECK(r.factors[0] == BinomialFactor(1, -1, 3));
  CHECK(r.factors[1] == BinomialFactor(1, 1, 1));
  CHECK(r.factors[2] == BinomialFactor(1, 2, 0));

  const auto small = with_factors({{1, 1, 3}, {2, 0, 2}});
  CHECK(reduce_factor_mod(small, 0).factors == small.factors);
}

TEST_CASE("residue_a0") {
  const auto e = with_factors({{1, 2, -1}, {1, 1, 1}});
  const auto res = residue_a0(e, 1);
  CHECK(res.a0 == geometric({3}));
  CHECK(res.contributing == MonomialSize::Small);

  CHECK(residue_a0(with_factors({{1, 0, 1}}), 0).a0 == RF(1));
  CHECK(kind_of([] { residue_a0(with_factors({{1, 1, 1}, {1, 2, 2}}), 0); }) == ErrorKind::NonCoprimeFactors);
}

TEST_CASE("ct_constant_term") {
  CHECK(ct_constant_term(with_factors({{1, 1, -2}, {1, 0, 3}})) == geometric({3}));
  CHECK(ct_constant_term(with_factors({{1, 0, 1}})) == RF(1));
  CHECK(ct_constant_term(with_factors({{1, 1, -1}})) == RF(1));
  CHECK(ct_constant_term(with_factors({{1, 1, -1}, {1, 0, 1}})) == geometric({1}));

  const auto e = build_rgf_expr(GeneratorList({5, 6}), 3);
  const auto series = rgf_series(GeneratorList({5, 6}), 3, 40).coefficients;
  CHECK(series_from_rational(ct_constant_term(e), 40) == to_rational_series(series));

  // a polynomial part at lambda^0
  CTExpr poly;
  poly.numerator = LambdaPoly({RF(0), RF(0), RF(3)});
  poly.factors = {{1, 0, 1}};
  // 3L^2/(1 - L) = -3 - 3L + 3/(1 - L): P(0) = -3 cancels the residue 3
  CHECK(ct_constant_term(poly) == RF(0));
  CHECK(evaluate_ct(poly).primal == RF(0));
  CHECK(evaluate_ct(poly).dual == RF(0));
}

TEST_CASE("lemma_zero_check") {
  CHECK(lemma_zero_check(with_factors({{1, 1, 1}, {1, 3, 2}}, 1)));
  CHECK(lemma_zero_check(with_factors({{1, 1, 1}, {1, 3, 2}}, 2)));
  CHECK(kind_of([] { lemma_zero_check(with_factors({{1, 0, 1}})); }) == ErrorKind::PreconditionUnmet);
  CHECK(kind_of([] { lemma_zero_check(with_factors({{1, 1, 1}}, 1)); }) == ErrorKind::PreconditionUnmet);
}

TEST_CASE("ct_rgf_rational") {
  const auto r35 = ct_rgf_rational(GeneratorList({3, 5}), 2);
  CHECK(r35 == RF(poly_from_ints({1, 0, 0, 0, 1}), binomial_product({3, 5})));
  const auto g = GeneratorList({4, 11, 14});
  CHECK(ct_rgf_rational(g, 3) == rgf_rational(g, 3).to_rational_function());
  CHECK(kind_of([] { ct_rgf_rational(GeneratorList({4, 8, 11}), 3); }) == ErrorKind::NonCoprimeFactors);
}

TEST_CASE("parser round trip") {
  for (std::string text : {"1/((1 - x*L^-3)*(1 - L^5)*(1 - L^6))", "L/((1 - x*L)*(1 - x^3*L^2))",
                           "(1 + 2*x^2*L - x^-1*L^3)/(1 + 3*x*L^2)", "-x^2*L^-1/(1 - 2*L)", "1/(1 - x)", "5"}) {
    CAPTURE(text);
    const auto e = parse_ct_expr(text);
    CHECK(render_ct_expr(e) == text);
    CHECK(parse_ct_expr(render_ct_expr(e)) == e);
  }
  const auto e = parse_ct_expr("1/((1 - x*L^-2)*(1 - L^3))");
  CHECK(e == with_factors({{1, 1, -2}, {1, 0, 3}}));
  for (std::string bad : {"", "1/(", "1/(1 - )", "1/(2 - L)", "x^/(1 - L)", "1/((1 - L)", "1/(1 - L))"}) {
    CAPTURE(bad);
    CHECK(kind_of([&] { parse_ct_expr(bad); }) == ErrorKind::Parse);
  }
}

TEST_CASE("constant terms agree with the double-series oracle") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> nfac(1, 4), xe(0, 4), lb(-6, 6), coef(-2, 2), sh(-3, 3);
  int checked = 0;
  for (int trial = 0; trial < 400 && checked < 60; ++trial) {
    std::vector<oracle::Term> terms;
    const int k = nfac(rng);
    for (int i = 0; i < k; ++i) {
      int c = coef(rng);
      if (c == 0) c = 1;
      const int e = xe(rng), b = lb(rng);
      if (e == 0 && b == 0) continue;
      terms.push_back({c, e, b});
    }
    if (terms.empty() || !oracle::pairwise_coprime(terms)) continue;
    CTExpr expr;
    expr.shift = sh(rng);
    for (const auto& t : terms) expr.factors.emplace_back(t.c, t.e, t.b);
    const RF value = ct_constant_term(expr);
    REQUIRE(value.den().coeff(0) != 0);
    const long n = 14;
    CAPTURE(render_ct_expr(expr));
    CHECK(series_from_rational(value, n).coefficients() == oracle::ct_double_series(expr.shift, terms, n));
    const auto ev = evaluate_ct(expr);
    if (ev.primal && ev.dual) CHECK(*ev.primal == *ev.dual);
    ++checked;
  }
  CHECK(checked >= 40);
}
