#pragma once

/**
 * @file ring.hpp
 * @brief Exact coefficient arithmetic.
 *
 * Three nested rings are supported: arbitrary precision integers, rationals
 * and univariate polynomials in `x` with rational coefficients. Mixed
 * arithmetic promotes to the wider ring (Integer -> Rational -> Polynomial).
 * A rational whose denominator is 1 is stored as an Integer; a polynomial
 * result stays a polynomial even when it is constant, so the ring a
 * computation lives in never silently changes.
 *
 * Quotient is the fraction type used where a definitional quotient leaves the
 * polynomial ring (e.g. V-binomials with polynomial parameters). It is
 * reduced by polynomial gcd and has a canonical form.
 */

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace lucasbinom {

using Integer = mpz_class;
using Rational = mpq_class;

/// Univariate polynomial over Q, coefficients indexed by degree.
/// Trailing zero coefficients are always stripped; the zero polynomial is empty.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  explicit Polynomial(const Rational& constant);

  static Polynomial x();
  static Polynomial monomial(const Rational& coeff, std::size_t degree);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Degree of the polynomial; -1 for zero.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  /// Coefficient of x^i (zero past the degree).
  Rational coeff(std::size_t i) const;
  const Rational& leading() const;
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  bool has_integer_coefficients() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& rhs);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Long division over Q: returns (quotient, remainder) with deg r < deg b.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
  /// Monic gcd; gcd(0, 0) = 0.
  static Polynomial gcd(Polynomial a, Polynomial b);

  Polynomial monic() const;
  Rational evaluate(const Rational& at) const;

  /// Canonical text: descending degree, explicit signs ("3/2*x^2-x+1").
  std::string to_string() const;

 private:
  void strip();

  std::vector<Rational> coeffs_;
};

/// Tagged exact scalar: Integer, Rational or Polynomial.
class RingElement {
 public:
  enum class Kind { Integer = 0, Rational = 1, Polynomial = 2 };

  RingElement() : value_(Integer(0)) {}
  RingElement(int v) : value_(Integer(v)) {}        // NOLINT(google-explicit-constructor)
  RingElement(long v) : value_(Integer(v)) {}       // NOLINT(google-explicit-constructor)
  RingElement(Integer v) : value_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  RingElement(Rational v);                          // NOLINT(google-explicit-constructor)
  RingElement(Polynomial v) : value_(std::move(v)) {}  // NOLINT(google-explicit-constructor)

  Kind kind() const noexcept { return static_cast<Kind>(value_.index()); }
  bool is_polynomial() const noexcept { return kind() == Kind::Polynomial; }
  bool is_zero() const;
  bool is_one() const;

  /// Integer-valued: an Integer, or a polynomial with integer coefficients.
  bool is_integral() const;

  /// Widening views. as_polynomial never fails; the others succeed when the
  /// value (including a constant polynomial) fits.
  Polynomial as_polynomial() const;
  std::optional<Rational> as_rational() const;
  std::optional<Integer> as_integer() const;

  const std::variant<Integer, Rational, Polynomial>& variant() const noexcept { return value_; }

  RingElement operator-() const;
  RingElement& operator+=(const RingElement& rhs);
  RingElement& operator-=(const RingElement& rhs);
  RingElement& operator*=(const RingElement& rhs);

  friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
  friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
  friend RingElement operator*(RingElement a, const RingElement& b) { return a *= b; }

  /// Value equality across variants: a == b iff a - b is zero.
  friend bool operator==(const RingElement& a, const RingElement& b);

  RingElement pow(unsigned exponent) const;

  std::string to_string() const;

 private:
  std::variant<Integer, Rational, Polynomial> value_;
};

RingElement add(const RingElement& a, const RingElement& b);
RingElement mul(const RingElement& a, const RingElement& b);
bool is_zero(const RingElement& a);

/// Exact division. Scalars always divide (the result may be Rational);
/// polynomial division must leave no remainder.
/// Throws DivisionByZero when b == 0 and NotDivisible on a nonzero remainder.
RingElement exact_div(const RingElement& a, const RingElement& b);

/// Parses the literal syntax: integers, fractions, `x`, `^`, `*`, `/`, `+`,
/// `-` and parentheses. The result must lie in the ring tower; a quotient that
/// does not reduce to a polynomial is a ParseError.
RingElement parse_ring(std::string_view text);

/// Reduced fraction num/den over the ring tower.
///
/// Canonical form: for scalars the value is folded into the numerator and the
/// denominator is 1; for polynomials num and den are coprime and den is monic.
class Quotient {
 public:
  Quotient() : num_(0), den_(1) {}
  Quotient(RingElement value) : num_(std::move(value)), den_(1) {}  // NOLINT(google-explicit-constructor)
  Quotient(const RingElement& num, const RingElement& den);

  const RingElement& numerator() const noexcept { return num_; }
  const RingElement& denominator() const noexcept { return den_; }

  /// True when the value lies in the ring tower (denominator is a unit).
  bool in_ring() const;
  /// The value as a ring element; throws NotDivisible when !in_ring().
  RingElement to_ring() const;
  bool is_zero() const { return num_.is_zero(); }

  Quotient operator-() const;
  friend Quotient operator+(const Quotient& a, const Quotient& b);
  friend Quotient operator-(const Quotient& a, const Quotient& b);
  friend Quotient operator*(const Quotient& a, const Quotient& b);
  friend Quotient operator/(const Quotient& a, const Quotient& b);
  friend bool operator==(const Quotient& a, const Quotient& b);

  /// "num" when in the ring, otherwise "(num)/(den)".
  std::string to_string() const;

 private:
  void normalize();

  RingElement num_;
  RingElement den_;
};

/// Parses the same syntax as parse_ring without requiring the result to lie
/// in the ring, so it also reads the "(num)/(den)" printed form.
Quotient parse_quotient(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);
std::ostream& operator<<(std::ostream& os, const RingElement& e);
std::ostream& operator<<(std::ostream& os, const Quotient& q);

}  // namespace lucasbinom
