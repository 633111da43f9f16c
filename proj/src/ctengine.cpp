#include "nsq/ctengine.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>
#include <string>

namespace nsq {

MonomialSize classify_monomial(std::int64_t x_exp, std::int64_t lambda_exp) {
  if (x_exp == 0 && lambda_exp == 0) return MonomialSize::One;
  if (x_exp > 0 || (x_exp == 0 && lambda_exp > 0)) return MonomialSize::Small;
  return MonomialSize::Large;
}

std::string_view to_string(MonomialSize size) {
  switch (size) {
    case MonomialSize::Small: return "small";
    case MonomialSize::Large: return "large";
    case MonomialSize::One: return "one";
  }
  return "?";
}

BinomialFactor::BinomialFactor(BigRational c, std::int64_t e, std::int64_t b)
    : coeff(std::move(c)), x_exp(e), lambda_exp(b) {
  if (coeff == 0) throw Error(ErrorKind::InvalidArgument, "binomial factor with zero monomial");
  if (e == 0 && b == 0 && coeff == 1) throw Error(ErrorKind::InvalidArgument, "binomial factor 1 - 1 vanishes");
}

namespace {

BigRational rational_pow(const BigRational& base, std::int64_t k) {
  if (k < 0) return rational_pow(BigRational(1 / base), -k);
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(k));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(k));
  BigRational out(num, den);
  out.canonicalize();
  return out;
}

// u^k for the monomial u of a factor, k of either sign.
RationalFunction monomial_pow(const BinomialFactor& f, std::int64_t k) {
  return RationalFunction::monomial(rational_pow(f.coeff, k), f.x_exp * k);
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

LambdaPoly factor_poly(const BinomialFactor& f) {
  LambdaPoly one = LambdaPoly::constant(RationalFunction(1));
  return one - LambdaPoly::monomial(f.u(), static_cast<std::size_t>(f.lambda_exp));
}

// p(lambda) * lambda^shift modulo 1 - u lambda^b, using lambda^b == u^-1.
LambdaPoly reduce_mod_factor(const LambdaPoly& p, std::int64_t shift, const BinomialFactor& f) {
  const std::int64_t b = f.lambda_exp;
  std::vector<RationalFunction> out(static_cast<std::size_t>(b));
  std::map<std::int64_t, RationalFunction> powers;
  const auto& c = p.coefficients();
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j].is_zero()) continue;
    const std::int64_t exponent = static_cast<std::int64_t>(j) + shift;
    const std::int64_t q = floor_div(exponent, b);
    const std::int64_t r = exponent - q * b;
    auto it = powers.find(q);
    if (it == powers.end()) it = powers.emplace(q, monomial_pow(f, -q)).first;
    out[static_cast<std::size_t>(r)] = out[static_cast<std::size_t>(r)] + c[j] * it->second;
  }
  return LambdaPoly(std::move(out));
}

// Normalized expression with lambda-free factors folded into the numerator.
struct Prepared {
  LambdaPoly numerator;
  std::int64_t shift = 0;
  std::vector<BinomialFactor> factors;   // lambda_exp >= 1
  std::vector<std::size_t> original;     // index into the normalized factor list
};

Prepared prepare(const CTExpr& e) {
  CTExpr n = normalize_expr(e);
  Prepared out;
  RationalFunction scalar(1);
  for (std::size_t i = 0; i < n.factors.size(); ++i) {
    const auto& f = n.factors[i];
    if (f.lambda_free()) {
      scalar = scalar / (RationalFunction(1) - f.u());
    } else {
      out.factors.push_back(f);
      out.original.push_back(i);
    }
  }
  out.numerator = n.numerator.scaled(scalar);
  out.shift = n.shift;
  return out;
}

std::optional<RationalFunction> value_at_zero(const Prepared& p) {
  if (p.numerator.is_zero()) return RationalFunction();
  if (p.shift + p.numerator.order() < 0) return std::nullopt;
  if (p.shift > 0) return RationalFunction();
  return p.numerator.coeff(static_cast<std::size_t>(-p.shift));
}

// Laurent polynomial in x: x^low * p(x).
struct XLaurent {
  std::int64_t low = 0;
  Poly p;
};

XLaurent times_monomial(const XLaurent& a, const BigRational& c, std::int64_t k) {
  return XLaurent{a.low + k, a.p.scaled(c)};
}

XLaurent add(const XLaurent& a, const XLaurent& b) {
  if (a.p.is_zero()) return b;
  if (b.p.is_zero()) return a;
  const std::int64_t low = std::min(a.low, b.low);
  return XLaurent{low, a.p.shifted(static_cast<std::size_t>(a.low - low)) +
                           b.p.shifted(static_cast<std::size_t>(b.low - low))};
}

RationalFunction to_rational(const XLaurent& a, const Poly& den) {
  return RationalFunction(a.p, den) * RationalFunction::monomial(1, a.low);
}

struct Monomial {
  BigRational c;
  std::int64_t k = 0;
  bool is_one() const { return c == 1 && k == 0; }
};

Monomial mono_pow(const Monomial& m, std::int64_t n) { return {rational_pow(m.c, n), m.k * n}; }
Monomial mono_mul(const Monomial& a, const Monomial& b) { return {BigRational(a.c * b.c), a.k + b.k}; }

// Product in Q(x)[lambda] / (1 - u lambda^b), operands of degree < b.
LambdaPoly mul_mod(const LambdaPoly& a, const LambdaPoly& b, const BinomialFactor& f) {
  const auto n = static_cast<std::size_t>(f.lambda_exp);
  const RationalFunction u_inv = monomial_pow(f, -1);
  std::vector<RationalFunction> out(n);
  const auto& ac = a.coefficients();
  const auto& bc = b.coefficients();
  for (std::size_t i = 0; i < ac.size(); ++i) {
    if (ac[i].is_zero()) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) {
      if (bc[j].is_zero()) continue;
      RationalFunction t = ac[i] * bc[j];
      std::size_t idx = i + j;
      if (idx >= n) {
        idx -= n;
        t = t * u_inv;
      }
      out[idx] = out[idx] + t;
    }
  }
  return LambdaPoly(std::move(out));
}

// Inverse of prod_{i != s} f_i modulo f_s. Each f_i reduces to 1 - w lambda^r;
// with N = b / gcd(r, b), (1 - w lambda^r) * sum_{j<N} w^j lambda^{jr} is the
// scalar 1 - W, so the inverse is that sum over 1 - W. W == 1 means a shared
// root.
LambdaPoly inverse_of_others(const Prepared& p, std::size_t s) {
  const BinomialFactor& fs = p.factors[s];
  const std::int64_t b = fs.lambda_exp;
  const Monomial u{fs.coeff, fs.x_exp};
  std::vector<XLaurent> g(static_cast<std::size_t>(b));
  g[0] = XLaurent{0, Poly::constant(1)};
  Poly den = Poly::constant(1);

  auto divide_by_scalar = [&](const Monomial& w, std::size_t i) {
    if (w.is_one())
      throw Error(ErrorKind::NonCoprimeFactors,
                  "factors " + std::to_string(p.original[i]) + " and " + std::to_string(p.original[s]) +
                      " have a common root");
    // 1 - c x^k, or x^k (x^-k - c) when k < 0
    if (w.k >= 0) {
      den = den * (Poly::constant(1) - Poly::monomial(w.c, static_cast<std::size_t>(w.k)));
    } else {
      den = den * (Poly::monomial(1, static_cast<std::size_t>(-w.k)) - Poly::constant(w.c));
      for (auto& v : g) v.low -= w.k;
    }
  };

  for (std::size_t i = 0; i < p.factors.size(); ++i) {
    if (i == s) continue;
    const auto& f = p.factors[i];
    const std::int64_t q = f.lambda_exp / b, r = f.lambda_exp % b;
    const Monomial w = mono_mul({f.coeff, f.x_exp}, mono_pow(u, -q));
    if (r == 0) {
      divide_by_scalar(w, i);
      continue;
    }
    const std::int64_t d = std::gcd(r, b), n = b / d;
    std::vector<XLaurent> next(g.size());
    for (std::int64_t j = 0; j < n; ++j) {
      const std::int64_t e = j * r;
      const Monomial m = mono_mul(mono_pow(w, j), mono_pow(u, -(e / b)));
      const std::int64_t shift = e % b;
      for (std::int64_t a = 0; a < b; ++a) {
        const auto& src = g[static_cast<std::size_t>(a)];
        if (src.p.is_zero()) continue;
        std::int64_t idx = a + shift;
        XLaurent t = times_monomial(src, m.c, m.k);
        if (idx >= b) {
          idx -= b;
          t = times_monomial(t, rational_pow(u.c, -1), -u.k);
        }
        next[static_cast<std::size_t>(idx)] = add(next[static_cast<std::size_t>(idx)], t);
      }
    }
    g = std::move(next);
    divide_by_scalar(mono_mul(mono_pow(w, n), mono_pow(u, -(r / d))), i);
  }
  std::vector<RationalFunction> out;
  out.reserve(g.size());
  for (const auto& v : g) out.push_back(v.p.is_zero() ? RationalFunction() : to_rational(v, den));
  return LambdaPoly(std::move(out));
}

Residue residue_prepared(const Prepared& p, std::size_t s) {
  const BinomialFactor& fs = p.factors[s];
  const LambdaPoly numerator = reduce_mod_factor(p.numerator, p.shift, fs);
  LambdaPoly acc = numerator.is_zero() ? LambdaPoly{} : mul_mod(numerator, inverse_of_others(p, s), fs);
  Residue r;
  r.factor_index = p.original[s];
  r.a0 = acc.coeff(0);
  r.contributing = fs.kind();
  r.poly = std::move(acc);
  return r;
}

// With squarefree, pairwise coprime factors, E - sum A_s/f_s is a Laurent
// polynomial iff each A_s * prod_{i != s} f_i == lambda^shift L modulo f_s.
void verify_residues(const Prepared& p, const std::vector<Residue>& residues) {
  for (std::size_t s = 0; s < p.factors.size(); ++s) {
    const auto& fs = p.factors[s];
    LambdaPoly lhs = residues[s].poly;
    for (std::size_t i = 0; i < p.factors.size() && !lhs.is_zero(); ++i)
      if (i != s) lhs = mul_mod(lhs, reduce_mod_factor(factor_poly(p.factors[i]), 0, fs), fs);
    if (!(lhs == reduce_mod_factor(p.numerator, p.shift, fs)))
      throw Error(ErrorKind::InternalMismatch,
                  "residue at factor " + std::to_string(p.original[s]) + " fails its defining congruence");
  }
}

// Constant coefficient of the polynomial part P(lambda): the quotient of
// lambda^shift L by prod f_i (or of L by lambda^-shift prod f_i).
RationalFunction polynomial_part_at_zero(const Prepared& p) {
  if (p.numerator.is_zero()) return RationalFunction();
  std::int64_t den_degree = 0;
  for (const auto& f : p.factors) den_degree += f.lambda_exp;
  const std::int64_t k = std::max<std::int64_t>(0, -p.shift);
  if (p.numerator.degree() + std::max<std::int64_t>(0, p.shift) < den_degree + k) return RationalFunction();
  LambdaPoly denominator = LambdaPoly::constant(RationalFunction(1));
  for (const auto& f : p.factors) denominator = denominator * factor_poly(f);
  const LambdaPoly num = p.shift > 0 ? p.numerator.shifted(static_cast<std::size_t>(p.shift)) : p.numerator;
  return divmod(num, denominator.shifted(static_cast<std::size_t>(k))).first.coeff(0);
}

struct Analysis {
  Prepared prepared;
  std::vector<std::optional<Residue>> residues;
  bool all_coprime = true;
  std::optional<RationalFunction> at_zero;
};

Analysis analyze(const CTExpr& e) {
  Analysis a;
  a.prepared = prepare(e);
  a.at_zero = value_at_zero(a.prepared);
  for (std::size_t s = 0; s < a.prepared.factors.size(); ++s) {
    try {
      a.residues.push_back(residue_prepared(a.prepared, s));
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::NonCoprimeFactors) throw;
      a.residues.push_back(std::nullopt);
      a.all_coprime = false;
    }
  }
  return a;
}

std::vector<Residue> unwrap(const Analysis& a) {
  std::vector<Residue> out;
  for (const auto& r : a.residues) out.push_back(*r);
  return out;
}

RationalFunction primal_value(const Analysis& a) {
  const auto residues = unwrap(a);
  verify_residues(a.prepared, residues);
  RationalFunction acc = polynomial_part_at_zero(a.prepared);
  for (const auto& r : residues)
    if (r.contributing == MonomialSize::Small) acc = acc + r.a0;
  return acc;
}

// nullopt when E(0) does not exist or a large residue is unavailable.
std::optional<RationalFunction> dual_value(const Analysis& a) {
  if (!a.at_zero) return std::nullopt;
  RationalFunction acc = *a.at_zero;
  for (std::size_t s = 0; s < a.residues.size(); ++s) {
    if (a.prepared.factors[s].kind() != MonomialSize::Large) continue;
    if (!a.residues[s]) return std::nullopt;
    acc = acc - a.residues[s]->a0;
  }
  return acc;
}

}  // namespace

CTExpr normalize_expr(const CTExpr& e) {
  CTExpr out;
  out.numerator = e.numerator;
  out.shift = e.shift;
  for (const auto& f : e.factors) {
    if (f.lambda_exp >= 0) {
      out.factors.push_back(f);
      continue;
    }
    // 1/(1 - u L^-m) = -u^-1 L^m / (1 - u^-1 L^m)
    BinomialFactor flipped(BigRational(1 / f.coeff), -f.x_exp, -f.lambda_exp);
    out.numerator = out.numerator.scaled(-flipped.u());
    out.shift += flipped.lambda_exp;
    out.factors.push_back(std::move(flipped));
  }
  const long order = out.numerator.order();
  if (order > 0) {
    std::vector<RationalFunction> c(out.numerator.coefficients().begin() + order, out.numerator.coefficients().end());
    out.numerator = LambdaPoly(std::move(c));
    out.shift += order;
  }
  if (out.numerator.is_zero()) out.shift = 0;
  return out;
}

CTExpr build_rgf_expr(const GeneratorList& gens, std::int64_t p) {
  if (p < 1) throw Error(ErrorKind::InvalidArgument, "p must be a positive integer");
  CTExpr e;
  e.factors.emplace_back(BigRational(1), 1, -p);
  for (auto a : gens.input()) e.factors.emplace_back(BigRational(1), 0, a);
  return e;
}

CTExpr reduce_factor_mod(const CTExpr& e, std::size_t s) {
  CTExpr n = normalize_expr(e);
  if (s >= n.factors.size()) throw Error(ErrorKind::InvalidArgument, "factor index out of range");
  const BinomialFactor fs = n.factors[s];
  if (fs.lambda_free()) throw Error(ErrorKind::InvalidArgument, "cannot reduce modulo a lambda-free factor");
  CTExpr out;
  out.numerator = reduce_mod_factor(n.numerator, n.shift, fs);
  out.shift = 0;
  for (std::size_t i = 0; i < n.factors.size(); ++i) {
    const auto& f = n.factors[i];
    if (i == s || f.lambda_free()) {
      out.factors.push_back(f);
      continue;
    }
    const std::int64_t q = f.lambda_exp / fs.lambda_exp;
    const std::int64_t r = f.lambda_exp % fs.lambda_exp;
    BigRational c = f.coeff * rational_pow(fs.coeff, -q);
    const std::int64_t x_exp = f.x_exp - q * fs.x_exp;
    if (r == 0 && x_exp == 0 && c == 1)
      throw Error(ErrorKind::NonCoprimeFactors,
                  "factor " + std::to_string(i) + " vanishes modulo factor " + std::to_string(s));
    out.factors.emplace_back(std::move(c), x_exp, r);
  }
  return out;
}

Residue residue_a0(const CTExpr& e, std::size_t s) {
  const Prepared p = prepare(e);
  for (std::size_t i = 0; i < p.original.size(); ++i)
    if (p.original[i] == s) return residue_prepared(p, i);
  throw Error(ErrorKind::InvalidArgument, "factor " + std::to_string(s) + " is lambda-free or out of range");
}

CtEvaluation evaluate_ct(const CTExpr& e) {
  const Analysis a = analyze(e);
  CtEvaluation out;
  out.at_zero = a.at_zero;
  if (a.prepared.factors.empty()) {
    const std::int64_t idx = -a.prepared.shift;
    out.value = idx >= 0 ? a.prepared.numerator.coeff(static_cast<std::size_t>(idx)) : RationalFunction();
    out.route = CtRoute::Polynomial;
    out.primal = out.value;
    if (a.at_zero) out.dual = out.value;
    return out;
  }
  out.dual = dual_value(a);
  if (a.all_coprime) {
    out.primal = primal_value(a);
    if (out.dual && !(*out.dual == *out.primal))
      throw Error(ErrorKind::InternalMismatch, "primal and dual constant terms disagree");
    out.value = *out.primal;
    out.route = CtRoute::Primal;
    return out;
  }
  if (!out.dual)
    throw Error(ErrorKind::NonCoprimeFactors, "denominator factors share roots and the dual formula does not apply");
  out.value = *out.dual;
  out.route = CtRoute::Dual;
  return out;
}

RationalFunction ct_constant_term(const CTExpr& e) { return evaluate_ct(e).value; }

bool lemma_zero_check(const CTExpr& e) {
  const Prepared p = prepare(e);
  if (p.factors.empty()) throw Error(ErrorKind::PreconditionUnmet, "expression has no lambda-dependent factor");
  std::int64_t den_degree = 0;
  for (const auto& f : p.factors) den_degree += f.lambda_exp;
  if (!p.numerator.is_zero()) {
    if (p.numerator.degree() + p.shift >= den_degree)
      throw Error(ErrorKind::PreconditionUnmet, "expression is not proper in lambda");
    if (p.shift + p.numerator.order() <= 0)
      throw Error(ErrorKind::PreconditionUnmet, "expression does not vanish at lambda = 0");
  }
  RationalFunction sum;
  for (std::size_t s = 0; s < p.factors.size(); ++s) sum = sum + residue_prepared(p, s).a0;
  return sum.is_zero();
}

RationalFunction ct_rgf_rational(const GeneratorList& gens, std::int64_t p) {
  gens.require_gcd_one();
  const CTExpr e = normalize_expr(build_rgf_expr(gens, p));
  const auto e_at_zero = value_at_zero(prepare(e));
  const CTExpr reduced = reduce_factor_mod(e, 0);
  const Analysis a = analyze(reduced);
  if (!a.all_coprime)
    throw Error(ErrorKind::NonCoprimeFactors, "reduced denominator factors share a root");

  // The reduced expression keeps the residue at the large factor, so
  // CT E = E(0) - A_0(0).
  const RationalFunction dual = *e_at_zero - a.residues[0]->a0;

  // The residues of the reduced expression at all factors add up with P(0)
  // to its value at zero, so A_0(0) is also recovered from the small factors.
  RationalFunction others = primal_value(a) - *a.at_zero;
  for (std::size_t s = 1; s < a.residues.size(); ++s)
    if (a.residues[s]->contributing == MonomialSize::Large) others = others + a.residues[s]->a0;
  const RationalFunction primal = *e_at_zero + others;

  if (!(primal == dual)) throw Error(ErrorKind::InternalMismatch, "CT routes for RGF disagree");
  return primal;
}

// ---------------------------------------------------------------------------
// Text form

namespace {

struct Term {
  BigInt c;
  std::int64_t e = 0;  // x exponent
  std::int64_t b = 0;  // lambda exponent
};

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  CTExpr parse() {
    std::vector<Term> numerator = parse_numerator();
    std::vector<BinomialFactor> factors;
    if (accept('/')) factors = parse_denominator();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return assemble(numerator, std::move(factors));
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  [[noreturn]] void fail(const std::string& what) {
    throw Error(ErrorKind::Parse, what + " at offset " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
  }

  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  std::int64_t integer() {
    skip();
    bool negative = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) negative = s_[pos_++] == '-';
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    const std::int64_t v = std::stoll(std::string(s_.substr(start, pos_ - start)));
    return negative ? -v : v;
  }

  BigInt unsigned_big() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return BigInt(std::string(s_.substr(start, pos_ - start)));
  }

  // [int ["*"]] ["x" ["^" int]] ["*"] ["L" ["^" int]], at least one piece.
  Term monomial() {
    Term t{BigInt(1), 0, 0};
    bool any = false;
    if (at_digit()) {
      t.c = unsigned_big();
      any = true;
      if (!accept('*')) return t;
    }
    if (accept('x')) {
      t.e = accept('^') ? integer() : 1;
      any = true;
      if (!accept('*')) return t;
    }
    if (accept('L')) {
      t.b = accept('^') ? integer() : 1;
      any = true;
    }
    if (!any) fail("expected monomial");
    return t;
  }

  Term signed_monomial() {
    bool negative = false;
    if (accept('-'))
      negative = true;
    else
      accept('+');
    Term t = monomial();
    if (negative) t.c = -t.c;
    return t;
  }

  std::vector<Term> parse_numerator() {
    std::vector<Term> terms;
    if (accept('(')) {
      terms.push_back(signed_monomial());
      while (peek() == '+' || peek() == '-') terms.push_back(signed_monomial());
      expect(')');
    } else {
      terms.push_back(signed_monomial());
    }
    return terms;
  }

  BinomialFactor factor() {
    expect('(');
    if (integer() != 1) fail("factor must start with 1");
    bool plus = false;
    if (accept('+'))
      plus = true;
    else
      expect('-');
    Term t = monomial();
    expect(')');
    if (plus) t.c = -t.c;
    return BinomialFactor(BigRational(t.c), t.e, t.b);
  }

  std::vector<BinomialFactor> parse_denominator() {
    std::vector<BinomialFactor> out;
    // Either "(1 - m)" or "((1 - m)*(1 - m)...)".
    const std::size_t save = pos_;
    expect('(');
    if (peek() != '(') {
      pos_ = save;
      out.push_back(factor());
      return out;
    }
    out.push_back(factor());
    while (accept('*')) out.push_back(factor());
    expect(')');
    return out;
  }

  static CTExpr assemble(const std::vector<Term>& terms, std::vector<BinomialFactor> factors) {
    CTExpr e;
    e.factors = std::move(factors);
    std::int64_t low = terms.front().b;
    for (const auto& t : terms) low = std::min(low, t.b);
    std::vector<RationalFunction> coeffs;
    for (const auto& t : terms) {
      const auto idx = static_cast<std::size_t>(t.b - low);
      if (coeffs.size() <= idx) coeffs.resize(idx + 1);
      coeffs[idx] = coeffs[idx] + RationalFunction::monomial(BigRational(t.c), t.e);
    }
    e.numerator = LambdaPoly(std::move(coeffs));
    e.shift = e.numerator.is_zero() ? 0 : low;
    return e;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

std::string render_monomial(const BigInt& magnitude, std::int64_t e, std::int64_t b) {
  std::vector<std::string> pieces;
  if (magnitude != 1 || (e == 0 && b == 0)) pieces.push_back(magnitude.get_str());
  if (e != 0) pieces.push_back(e == 1 ? "x" : "x^" + std::to_string(e));
  if (b != 0) pieces.push_back(b == 1 ? "L" : "L^" + std::to_string(b));
  std::string out;
  for (std::size_t i = 0; i < pieces.size(); ++i) out += (i ? "*" : "") + pieces[i];
  return out;
}

std::vector<Term> numerator_terms(const CTExpr& e) {
  std::vector<Term> terms;
  const auto& c = e.numerator.coefficients();
  for (std::size_t j = 0; j < c.size(); ++j) {
    const RationalFunction& rf = c[j];
    if (rf.is_zero()) continue;
    // Laurent polynomial: denominator must be x^k.
    const Poly& den = rf.den();
    const long k = den.degree();
    if (!(den == Poly::monomial(BigRational(1), static_cast<std::size_t>(k))))
      throw Error(ErrorKind::InvalidArgument, "numerator coefficient " + to_string(rf) + " is not a Laurent polynomial");
    const auto& nc = rf.num().coefficients();
    for (std::size_t i = 0; i < nc.size(); ++i) {
      if (nc[i] == 0) continue;
      if (nc[i].get_den() != 1)
        throw Error(ErrorKind::InvalidArgument, "numerator coefficient " + to_string(rf) + " is not integral");
      terms.push_back(Term{nc[i].get_num(), static_cast<std::int64_t>(i) - k,
                           static_cast<std::int64_t>(j) + e.shift});
    }
  }
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return a.b != b.b ? a.b < b.b : a.e < b.e;
  });
  return terms;
}

}  // namespace

CTExpr parse_ct_expr(std::string_view text) { return Parser(text).parse(); }

std::string render_ct_expr(const CTExpr& e) {
  const auto terms = numerator_terms(e);
  std::string num;
  if (terms.empty()) {
    num = "0";
  } else {
    for (std::size_t i = 0; i < terms.size(); ++i) {
      const bool negative = terms[i].c < 0;
      const BigInt magnitude = abs(terms[i].c);
      if (i == 0)
        num += negative ? "-" : "";
      else
        num += negative ? " - " : " + ";
      num += render_monomial(magnitude, terms[i].e, terms[i].b);
    }
    if (terms.size() > 1) num = "(" + num + ")";
  }
  if (e.factors.empty()) return num;
  std::string den;
  for (std::size_t i = 0; i < e.factors.size(); ++i) {
    const auto& f = e.factors[i];
    if (f.coeff.get_den() != 1)
      throw Error(ErrorKind::InvalidArgument, "factor coefficient " + f.coeff.get_str() + " is not an integer");
    const BigInt c = f.coeff.get_num();
    if (i) den += "*";
    den += std::string("(1 ") + (c < 0 ? "+ " : "- ") + render_monomial(abs(c), f.x_exp, f.lambda_exp) + ")";
  }
  if (e.factors.size() > 1) den = "(" + den + ")";
  return num + "/" + den;
}

}  // namespace nsq
