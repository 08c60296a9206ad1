#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mixedwitt {

using Integer = mpz_class;
using Rational = mpq_class;

int sign(const Rational& x);
int sign(const Integer& x);

/// Dense univariate polynomial over Q, coefficients lowest degree first.
/// The coefficient vector never has trailing zeros; the zero polynomial is
/// the empty vector and has degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(std::initializer_list<Rational> coeffs);

  static Polynomial constant(const Rational& c);
  /// c * t^k
  static Polynomial monomial(const Rational& c, std::size_t k);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  /// Coefficient of t^k; zero beyond the degree.
  Rational coeff(std::size_t k) const;
  const Rational& leading() const;
  bool is_monic() const;

  Rational operator()(const Rational& x) const;
  /// Sign of the value at x without building the whole value twice.
  int sign_at(const Rational& x) const;

  Polynomial derivative() const;
  Polynomial monic() const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(Polynomial lhs, const Polynomial& rhs) { return lhs *= rhs; }
  friend Polynomial operator*(Polynomial lhs, const Rational& c) { return lhs *= c; }
  Polynomial operator-() const;

  friend bool operator==(const Polynomial& lhs, const Polynomial& rhs) {
    return lhs.coeffs_ == rhs.coeffs_;
  }

  /// Text form in the variable `t`, e.g. "t^2-2".
  std::string to_string(std::string_view var = "t") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Euclidean division; throws DivisionByZero on a zero divisor.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den);
Polynomial operator%(const Polynomial& num, const Polynomial& den);

/// Monic gcd (zero if both inputs are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Solves s*a + u*b = gcd(a, b); returns (gcd, s, u).
struct ExtendedGcd {
  Polynomial gcd;
  Polynomial s;
  Polynomial u;
};
ExtendedGcd extended_gcd(const Polynomial& a, const Polynomial& b);

/// Sturm chain f, f', -rem(f, f'), ...
std::vector<Polynomial> sturm_chain(const Polynomial& f);
int sign_variations(const std::vector<Polynomial>& chain, const Rational& x);
/// Number of distinct real roots in the half-open interval (lo, hi].
int count_real_roots(const std::vector<Polynomial>& chain, const Rational& lo, const Rational& hi);

/// 1 + max |c_i| / |c_n|: every real root lies strictly inside (-B, B).
Rational cauchy_bound(const Polynomial& f);

/// Closed rational interval; used for interval evaluation during sign
/// determination.
struct RationalInterval {
  Rational lo;
  Rational hi;
};
RationalInterval evaluate_on(const Polynomial& p, const RationalInterval& x);

/// Parses `t`-polynomials such as "t^2-2", "3/4", "(1+t)*(1-t)" or "2t^3 - t/5".
/// Throws ParseError with the offending position.
Polynomial parse_polynomial(std::string_view text, char var = 't');

std::string rational_to_string(const Rational& r);
Rational parse_rational(std::string_view text);

}  // namespace mixedwitt
