#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace lcoalg {

/// Exact rational number; canonical (reduced, positive denominator) after every operation.
using Rational = mpq_class;

std::string to_string(const Rational& r);

/// Parses `n` or `n/d` with an optional leading sign.
Rational parse_rational(std::string_view text);

/// Rational Laurent polynomial in one formal indeterminate q.
///
/// Stored as exponent -> nonzero coefficient; zero is the empty map, so
/// structural equality is equality of values.
///
/// Text form: terms by ascending exponent, unit coefficients omitted,
/// e.g. `3/2*q^-1 + 1 + q^2`, `-q - 2*q^3`, `0`. The grammar accepted by
/// `parse` is
///
///     scalar  := ['-'] term (('+' | '-') term)*
///     term    := rational ['*' power] | power
///     power   := 'q' ['^' ['-'] digits]
///     rational:= digits ['/' digits]
///
/// with arbitrary whitespace between tokens. Repeated exponents are summed.
class Scalar {
 public:
  using Terms = std::map<int, Rational>;

  Scalar() = default;
  Scalar(long value);  // NOLINT: implicit embedding of integers is the point
  Scalar(const Rational& value);  // NOLINT

  static Scalar monomial(const Rational& coefficient, int exponent);
  /// q^exponent
  static Scalar q(int exponent = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  /// True when no q-power other than q^0 occurs.
  bool is_rational() const;
  /// The value when `is_rational()`; nullopt otherwise.
  std::optional<Rational> as_rational() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.terms_ == b.terms_; }

  /// Inverse of a nonzero monomial c*q^k, i.e. c^-1 * q^-k.
  /// Throws Error(NotMonomial) or Error(ZeroInverse).
  Scalar inverse() const;

  /// Substitutes q := q0. Throws Error(ZeroBase) when q0 = 0.
  Rational eval(const Rational& q0) const;

  std::string to_string() const;
  static Scalar parse(std::string_view text);

 private:
  void add_term(int exponent, const Rational& coefficient);

  Terms terms_;
};

/// q0^exponent for q0 != 0.
Rational rational_pow(const Rational& base, int exponent);

}  // namespace lcoalg
