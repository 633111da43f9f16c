#pragma once

// Exact arithmetic kernel: GMP-backed rationals, dense univariate
// polynomials over an arbitrary field, normalized rational functions in x and
// truncated power series.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nsq/errors.hpp"

namespace nsq {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Dense polynomial with coefficients in a field; index = exponent.
/// The coefficient vector never carries trailing zeros, so the zero
/// polynomial is the empty vector and degree() == -1.
template <class Field>
class DensePoly {
 public:
  using coefficient_type = Field;

  DensePoly() = default;
  explicit DensePoly(std::vector<Field> coeffs) : c_(std::move(coeffs)) { trim(); }

  static DensePoly constant(Field v) { return DensePoly(std::vector<Field>{std::move(v)}); }

  static DensePoly monomial(Field v, std::size_t degree) {
    std::vector<Field> c(degree + 1);
    c[degree] = std::move(v);
    return DensePoly(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<Field>& coefficients() const { return c_; }
  Field coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Field{}; }
  const Field& leading() const { return c_.back(); }

  /// Lowest exponent with a nonzero coefficient; -1 for the zero polynomial.
  long order() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!(c_[i] == Field{})) return static_cast<long>(i);
    return -1;
  }

  Field eval(const Field& at) const {
    Field acc{};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      Field t = acc * at;
      acc = t + *it;
    }
    return acc;
  }

  DensePoly monic() const {
    if (is_zero()) return *this;
    Field inv = Field(1) / leading();
    return scaled(inv);
  }

  DensePoly scaled(const Field& s) const {
    if (s == Field{}) return {};
    std::vector<Field> out;
    out.reserve(c_.size());
    for (const auto& v : c_) out.push_back(Field(v * s));
    return DensePoly(std::move(out));
  }

  /// Multiply by t^k.
  DensePoly shifted(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<Field> out(k);
    out.insert(out.end(), c_.begin(), c_.end());
    return DensePoly(std::move(out));
  }

  friend bool operator==(const DensePoly& a, const DensePoly& b) { return a.c_ == b.c_; }

  friend DensePoly operator+(const DensePoly& a, const DensePoly& b) {
    std::vector<Field> out(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] = out[i] + b.c_[i];
    return DensePoly(std::move(out));
  }

  friend DensePoly operator-(const DensePoly& a) {
    std::vector<Field> out;
    out.reserve(a.c_.size());
    for (const auto& v : a.c_) out.push_back(Field(-v));
    return DensePoly(std::move(out));
  }

  friend DensePoly operator-(const DensePoly& a, const DensePoly& b) { return a + (-b); }

  friend DensePoly operator*(const DensePoly& a, const DensePoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Field> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == Field{}) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        if (b.c_[j] == Field{}) continue;
        Field t = a.c_[i] * b.c_[j];
        out[i + j] = out[i + j] + t;
      }
    }
    return DensePoly(std::move(out));
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == Field{}) c_.pop_back();
  }

  std::vector<Field> c_;
};

/// Quotient and remainder with a == q*b + r, deg r < deg b.
template <class Field>
std::pair<DensePoly<Field>, DensePoly<Field>> divmod(const DensePoly<Field>& a,
                                                     const DensePoly<Field>& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZeroPoly, "polynomial division by zero");
  if (a.degree() < b.degree()) return {DensePoly<Field>{}, a};
  std::vector<Field> rem = a.coefficients();
  const long db = b.degree();
  std::vector<Field> quo(static_cast<std::size_t>(a.degree() - db + 1));
  const Field lead_inv = Field(1) / b.leading();
  const auto& bc = b.coefficients();
  for (long k = a.degree() - db; k >= 0; --k) {
    const auto top = static_cast<std::size_t>(k + db);
    if (rem[top] == Field{}) continue;
    Field q = rem[top] * lead_inv;
    for (long j = 0; j <= db; ++j) {
      if (bc[j] == Field{}) continue;
      Field t = q * bc[j];
      rem[k + j] = rem[k + j] - t;
    }
    quo[k] = std::move(q);
  }
  rem.resize(static_cast<std::size_t>(db));
  return {DensePoly<Field>(std::move(quo)), DensePoly<Field>(std::move(rem))};
}

/// Monic gcd; gcd(0, 0) is the zero polynomial.
template <class Field>
DensePoly<Field> gcd(DensePoly<Field> a, DensePoly<Field> b) {
  if (!b.is_zero()) b = b.monic();
  while (!b.is_zero()) {
    auto r = divmod(a, b).second.monic();
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Over Q the gcd is found by evaluation at a large integer and checked by
/// trial division, falling back to Euclid.
template <>
DensePoly<BigRational> gcd(DensePoly<BigRational> a, DensePoly<BigRational> b);

template <class Field>
struct ExtendedGcd {
  DensePoly<Field> g;  // monic
  DensePoly<Field> s;
  DensePoly<Field> t;  // s*a + t*b == g
};

template <class Field>
ExtendedGcd<Field> extended_gcd(const DensePoly<Field>& a, const DensePoly<Field>& b) {
  using P = DensePoly<Field>;
  P r0 = a, r1 = b;
  P s0 = P::constant(Field(1)), s1{};
  P t0{}, t1 = P::constant(Field(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    P s2 = s0 - q * s1;
    P t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Field inv = Field(1) / r0.leading();
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

using Poly = DensePoly<BigRational>;

Poly poly_mul(const Poly& a, const Poly& b);
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);
Poly poly_gcd(const Poly& a, const Poly& b);

/// Poly from integer coefficients, index = exponent.
Poly poly_from_ints(std::initializer_list<long> coeffs);

/// Ascending-exponent text such as "1 - x^3 + 2*x^10"; "0" for zero.
std::string to_string(const Poly& p, std::string_view var = "x");

/// Element of Q(x) kept in canonical form: gcd(num, den) == 1, den monic.
/// Negative powers of x are stored as x^k in the denominator.
class RationalFunction {
 public:
  RationalFunction() : den_(Poly::constant(1)) {}
  explicit RationalFunction(long v) : num_(Poly::constant(BigRational(v))), den_(Poly::constant(1)) {}
  explicit RationalFunction(BigRational v) : num_(Poly::constant(std::move(v))), den_(Poly::constant(1)) {}
  explicit RationalFunction(Poly num) : num_(std::move(num)), den_(Poly::constant(1)) {}
  RationalFunction(Poly num, Poly den);

  /// c * x^e with e of either sign.
  static RationalFunction monomial(const BigRational& c, long exponent);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);

 private:
  struct Canonical {};
  RationalFunction(Poly num, Poly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  Poly num_;
  Poly den_;
};

std::string to_string(const RationalFunction& f, std::string_view var = "x");

/// First N+1 coefficients of a formal power series.
template <class T>
class TruncatedSeries {
 public:
  TruncatedSeries() : c_(1) {}
  explicit TruncatedSeries(std::vector<T> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw Error(ErrorKind::InvalidArgument, "series needs at least one coefficient");
  }

  long order() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<T>& coefficients() const { return c_; }
  const T& operator[](std::size_t i) const { return c_.at(i); }

  TruncatedSeries truncated(long n) const {
    std::vector<T> c(c_.begin(), c_.begin() + std::min<long>(n, order()) + 1);
    return TruncatedSeries(std::move(c));
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.c_ == b.c_; }

 private:
  std::vector<T> c_;
};

using RationalSeries = TruncatedSeries<BigRational>;
using CountingSeries = TruncatedSeries<BigInt>;

/// Cauchy product truncated to the smaller order.
template <class T>
TruncatedSeries<T> series_mul(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
  const long n = std::min(a.order(), b.order());
  std::vector<T> out(static_cast<std::size_t>(n + 1));
  for (long i = 0; i <= n; ++i) {
    if (a[i] == 0) continue;
    for (long j = 0; i + j <= n; ++j) out[i + j] += a[i] * b[j];
  }
  return TruncatedSeries<T>(std::move(out));
}

RationalSeries to_rational_series(const CountingSeries& s);

/// Taylor coefficients 0..N of f; requires den(0) != 0.
RationalSeries series_from_rational(const RationalFunction& f, long n);

/// Product of binomials (1 - x^b) for each b.
Poly binomial_product(const std::vector<std::int64_t>& exponents);

}  // namespace nsq
