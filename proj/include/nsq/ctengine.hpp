#pragma once

// Constant terms in lambda of Elliott-rational functions
//
//   E = L(lambda) * lambda^shift / prod_i (1 - c_i x^{e_i} lambda^{b_i})
//
// with L a polynomial in lambda over Q(x). Series expansion happens in
// Q((lambda))((x)): a monomial x^e lambda^b is small when e > 0, or e == 0 and
// b > 0, and large otherwise. The constant term is read off the partial
// fraction decomposition
//
//   E = P(lambda) + p(lambda)/lambda^k + sum_i A_i(lambda) / (1 - u_i lambda^{b_i})
//
// as P(0) + sum over small factors of A_i(0); dually, when E(0) exists, as
// E(0) - sum over large factors of A_i(0). Each A_i(0) comes from the unique
// representative of E * (1 - u_i lambda^{b_i}) modulo that factor.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nsq/semigroup.hpp"

namespace nsq {

enum class MonomialSize { Small, Large, One };

MonomialSize classify_monomial(std::int64_t x_exp, std::int64_t lambda_exp);
std::string_view to_string(MonomialSize size);

/// The denominator factor 1 - coeff * x^x_exp * lambda^lambda_exp.
struct BinomialFactor {
  BigRational coeff{1};
  std::int64_t x_exp = 0;
  std::int64_t lambda_exp = 0;

  BinomialFactor() = default;
  BinomialFactor(BigRational c, std::int64_t e, std::int64_t b);

  RationalFunction u() const { return RationalFunction::monomial(coeff, x_exp); }
  bool lambda_free() const { return lambda_exp == 0; }
  MonomialSize kind() const { return classify_monomial(x_exp, lambda_exp); }

  friend bool operator==(const BinomialFactor&, const BinomialFactor&) = default;
};

using LambdaPoly = DensePoly<RationalFunction>;

struct CTExpr {
  LambdaPoly numerator = LambdaPoly::constant(RationalFunction(1));
  std::int64_t shift = 0;  // numerator carries an extra lambda^shift
  std::vector<BinomialFactor> factors;

  friend bool operator==(const CTExpr&, const CTExpr&) = default;
};

/// Rewrites 1 - u lambda^-m as -u lambda^-m (1 - u^-1 lambda^m) so every
/// factor has lambda_exp >= 0, and moves leading zero coefficients of the
/// numerator into the shift. Factor order is preserved.
CTExpr normalize_expr(const CTExpr& e);

/// 1 / ((1 - x lambda^-p) prod (1 - lambda^a_i)), in input order.
CTExpr build_rgf_expr(const GeneratorList& gens, std::int64_t p);

/// Normalizes, then reduces the numerator and all other factors modulo
/// 1 - u_s lambda^{b_s} (that is, lambda^{b_s} == u_s^-1). A factor that
/// becomes identically zero means it shares a root with factor s.
CTExpr reduce_factor_mod(const CTExpr& e, std::size_t s);

struct Residue {
  std::size_t factor_index = 0;
  RationalFunction a0;
  MonomialSize contributing = MonomialSize::Small;
  LambdaPoly poly;  // A_s(lambda), degree < b_s
};

Residue residue_a0(const CTExpr& e, std::size_t s);

enum class CtRoute { Primal, Dual, Polynomial };

struct CtEvaluation {
  RationalFunction value;
  CtRoute route = CtRoute::Primal;
  std::optional<RationalFunction> primal;     // P(0) + sum of small residues
  std::optional<RationalFunction> dual;       // E(0) - sum of large residues
  std::optional<RationalFunction> at_zero;    // E(0) when it exists
};

/// Both formulas are evaluated whenever their preconditions hold and must
/// agree. When some factors share roots but every large factor is coprime to
/// the rest, only the dual formula is available and is used.
CtEvaluation evaluate_ct(const CTExpr& e);
RationalFunction ct_constant_term(const CTExpr& e);

/// For E proper in lambda with E(0) == 0: whether the residues sum to zero.
bool lemma_zero_check(const CTExpr& e);

/// RGF_p via constant terms: reduce against the (1 - x lambda^-p) factor,
/// then take the residues at the reduced small factors; the residue at the
/// large factor is the cross-check.
RationalFunction ct_rgf_rational(const GeneratorList& gens, std::int64_t p);

/// Grammar: numerator [ "/" denominator ], where the numerator is a monomial
/// or a parenthesised sum of monomials, the denominator is one factor or a
/// parenthesised product of factors "(1 - c*x^e*L^b)", and L stands for
/// lambda. Example: "1/((1 - x*L^-3)*(1 - L^5)*(1 - L^6))".
CTExpr parse_ct_expr(std::string_view text);

/// Inverse of parse_ct_expr for expressions whose numerator coefficients are
/// Laurent polynomials in x with integer coefficients.
std::string render_ct_expr(const CTExpr& e);

}  // namespace nsq
