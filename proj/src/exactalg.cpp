#include "nsq/exactalg.hpp"

#include <sstream>

namespace nsq {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::GcdNotOne: return "GcdNotOne";
    case ErrorKind::NotAMember: return "NotAMember";
    case ErrorKind::NotCoprimePart: return "NotCoprimePart";
    case ErrorKind::NoMatchingRow: return "NoMatchingRow";
    case ErrorKind::NegativeNumerator: return "NegativeNumerator";
    case ErrorKind::NonCoprimeFactors: return "NonCoprimeFactors";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::PreconditionUnmet: return "PreconditionUnmet";
    case ErrorKind::DivisionByZeroPoly: return "DivisionByZeroPoly";
    case ErrorKind::PoleAtZero: return "PoleAtZero";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::CertificationFailed: return "CertificationFailed";
    case ErrorKind::InternalMismatch: return "InternalMismatch";
  }
  return "Unknown";
}

Poly poly_mul(const Poly& a, const Poly& b) { return a * b; }

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) { return divmod(a, b); }

namespace {

// Integer multiple of p with coprime coefficients and positive leading term.
std::vector<BigInt> primitive_part(const Poly& p) {
  BigInt l = 1;
  for (const auto& c : p.coefficients()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<BigInt> v;
  v.reserve(p.coefficients().size());
  BigInt g = 0;
  for (const auto& c : p.coefficients()) {
    v.push_back(c.get_num() * (l / c.get_den()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.back().get_mpz_t());
  }
  if (v.back() < 0) g = -g;
  for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return v;
}

BigInt max_norm(const std::vector<BigInt>& v) {
  BigInt m = 0;
  for (const auto& x : v)
    if (abs(x) > m) m = abs(x);
  return m;
}

BigInt evaluate(const std::vector<BigInt>& v, const BigInt& at) {
  BigInt acc = 0;
  for (auto it = v.rbegin(); it != v.rend(); ++it) acc = acc * at + *it;
  return acc;
}

Poly euclid_gcd(Poly a, Poly b) {
  if (!b.is_zero()) b = b.monic();
  while (!b.is_zero()) {
    auto r = divmod(a, b).second.monic();
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

}  // namespace

template <>
Poly gcd(Poly a, Poly b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.degree() == 0 || b.degree() == 0) return Poly::constant(1);
  const auto pa = primitive_part(a), pb = primitive_part(b);
  BigInt xi = 2 * std::min(max_norm(pa), max_norm(pb)) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    BigInt gamma;
    mpz_gcd(gamma.get_mpz_t(), evaluate(pa, xi).get_mpz_t(), evaluate(pb, xi).get_mpz_t());
    // xi-adic digits in the symmetric range give the candidate
    std::vector<BigRational> digits;
    const BigInt half = xi / 2;
    while (gamma != 0) {
      BigInt r;
      mpz_fdiv_r(r.get_mpz_t(), gamma.get_mpz_t(), xi.get_mpz_t());
      if (r > half) r -= xi;
      digits.emplace_back(r);
      gamma = (gamma - r) / xi;
    }
    const Poly candidate = Poly(std::move(digits)).monic();
    if (!candidate.is_zero() && divmod(a, candidate).second.is_zero() && divmod(b, candidate).second.is_zero())
      return candidate;
    xi = xi * 73794 / 27011;
  }
  return euclid_gcd(std::move(a), std::move(b));
}

Poly poly_gcd(const Poly& a, const Poly& b) { return gcd(a, b); }

Poly poly_from_ints(std::initializer_list<long> coeffs) {
  std::vector<BigRational> c;
  c.reserve(coeffs.size());
  for (long v : coeffs) c.emplace_back(v);
  return Poly(std::move(c));
}

std::string to_string(const Poly& p, std::string_view var) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  const auto& c = p.coefficients();
  for (std::size_t e = 0; e < c.size(); ++e) {
    if (c[e] == 0) continue;
    BigRational mag = abs(c[e]);
    if (first) {
      if (c[e] < 0) out << '-';
    } else {
      out << (c[e] < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << '*';
    out << var;
    if (e > 1) out << '^' << e;
  }
  return out.str();
}

RationalFunction::RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorKind::DivisionByZeroPoly, "rational function with zero denominator");
  normalize();
}

RationalFunction RationalFunction::monomial(const BigRational& c, long exponent) {
  if (c == 0) return RationalFunction();
  if (exponent >= 0)
    return RationalFunction(Poly::monomial(c, static_cast<std::size_t>(exponent)), Poly::constant(1), Canonical{});
  return RationalFunction(Poly::constant(c), Poly::monomial(BigRational(1), static_cast<std::size_t>(-exponent)),
                          Canonical{});
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Poly::constant(1);
    return;
  }
  if (den_.degree() > 0) {
    Poly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = divmod(num_, g).first;
      den_ = divmod(den_, g).first;
    }
  }
  BigRational lead = den_.leading();
  if (lead != 1) {
    BigRational inv = 1 / lead;
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  const Poly g = gcd(a.den_, b.den_);
  const Poly ar = divmod(a.den_, g).first, br = divmod(b.den_, g).first;
  return RationalFunction(a.num_ * br + b.num_ * ar, a.den_ * br);
}

RationalFunction operator-(const RationalFunction& a) {
  return RationalFunction(-a.num_, a.den_, RationalFunction::Canonical{});
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return RationalFunction();
  if (a.is_polynomial() && b.is_polynomial()) {
    Poly n = a.num_ * b.num_;
    BigRational s = a.den_.leading() * b.den_.leading();
    return RationalFunction(n.scaled(1 / s), Poly::constant(1), RationalFunction::Canonical{});
  }
  // Cross-cancel first so the final gcd works on smaller operands.
  Poly g1 = gcd(a.num_, b.den_);
  Poly g2 = gcd(b.num_, a.den_);
  Poly an = divmod(a.num_, g1).first, bd = divmod(b.den_, g1).first;
  Poly bn = divmod(b.num_, g2).first, ad = divmod(a.den_, g2).first;
  Poly n = an * bn, d = ad * bd;
  BigRational inv = 1 / d.leading();
  return RationalFunction(n.scaled(inv), d.scaled(inv), RationalFunction::Canonical{});
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZeroPoly, "division by the zero rational function");
  return a * RationalFunction(b.den_, b.num_);
}

std::string to_string(const RationalFunction& f, std::string_view var) {
  if (f.is_polynomial()) return to_string(f.num(), var);
  auto wrap = [&](const Poly& p) {
    std::string s = to_string(p, var);
    bool single = p.degree() <= 0 || s.find_first_of("+-", 1) == std::string::npos;
    return single ? s : "(" + s + ")";
  };
  return wrap(f.num()) + "/" + wrap(f.den());
}

RationalSeries to_rational_series(const CountingSeries& s) {
  std::vector<BigRational> c;
  c.reserve(s.coefficients().size());
  for (const auto& v : s.coefficients()) c.emplace_back(v);
  return RationalSeries(std::move(c));
}

RationalSeries series_from_rational(const RationalFunction& f, long n) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "series order must be nonnegative");
  const Poly& den = f.den();
  const BigRational d0 = den.coeff(0);
  if (d0 == 0) throw Error(ErrorKind::PoleAtZero, "denominator vanishes at x = 0");
  const BigRational d0_inv = 1 / d0;
  const auto& dc = den.coefficients();
  std::vector<BigRational> out(static_cast<std::size_t>(n + 1));
  for (long k = 0; k <= n; ++k) {
    BigRational acc = f.num().coeff(static_cast<std::size_t>(k));
    const long top = std::min<long>(k, den.degree());
    for (long j = 1; j <= top; ++j) {
      if (dc[j] == 0) continue;
      acc -= dc[j] * out[k - j];
    }
    out[k] = acc * d0_inv;
  }
  return RationalSeries(std::move(out));
}

Poly binomial_product(const std::vector<std::int64_t>& exponents) {
  Poly acc = Poly::constant(1);
  for (std::int64_t b : exponents) {
    if (b < 1) throw Error(ErrorKind::InvalidArgument, "binomial exponent must be positive");
    acc = acc * (Poly::constant(1) - Poly::monomial(BigRational(1), static_cast<std::size_t>(b)));
  }
  return acc;
}

}  // namespace nsq
