#include "lucasbinom/errors.hpp"
#include "lucasbinom/ring.hpp"

#include <type_traits>

namespace lucasbinom {

namespace {

Rational widen_to_rational(const std::variant<Integer, Rational, Polynomial>& v) {
  if (const auto* i = std::get_if<Integer>(&v)) return Rational(*i);
  return std::get<Rational>(v);
}

// Applies op in the narrowest ring containing both operands.
template <typename Op>
RingElement combine(const RingElement& a, const RingElement& b, Op op) {
  const auto kind = std::max(a.kind(), b.kind());
  switch (kind) {
    case RingElement::Kind::Integer:
      return RingElement(op(std::get<Integer>(a.variant()), std::get<Integer>(b.variant())));
    case RingElement::Kind::Rational:
      return RingElement(op(widen_to_rational(a.variant()), widen_to_rational(b.variant())));
    case RingElement::Kind::Polynomial:
      break;
  }
  return RingElement(op(a.as_polynomial(), b.as_polynomial()));
}

struct Plus {
  template <typename T>
  T operator()(const T& x, const T& y) const { return T(x + y); }
};
struct Minus {
  template <typename T>
  T operator()(const T& x, const T& y) const { return T(x - y); }
};
struct Times {
  template <typename T>
  T operator()(const T& x, const T& y) const { return T(x * y); }
};

}  // namespace

RingElement::RingElement(Rational v) {
  v.canonicalize();
  if (v.get_den() == 1) {
    value_ = Integer(v.get_num());
  } else {
    value_ = std::move(v);
  }
}

bool RingElement::is_zero() const {
  return std::visit(
      [](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Polynomial>) {
          return v.is_zero();
        } else {
          return v == 0;
        }
      },
      value_);
}

bool RingElement::is_one() const { return *this == RingElement(1); }

bool RingElement::is_integral() const {
  switch (kind()) {
    case Kind::Integer:
      return true;
    case Kind::Rational:
      return false;
    case Kind::Polynomial:
      break;
  }
  return std::get<Polynomial>(value_).has_integer_coefficients();
}

Polynomial RingElement::as_polynomial() const {
  if (const auto* p = std::get_if<Polynomial>(&value_)) return *p;
  return Polynomial(widen_to_rational(value_));
}

std::optional<Rational> RingElement::as_rational() const {
  if (const auto* p = std::get_if<Polynomial>(&value_)) {
    if (!p->is_constant()) return std::nullopt;
    return p->coeff(0);
  }
  return widen_to_rational(value_);
}

std::optional<Integer> RingElement::as_integer() const {
  auto r = as_rational();
  if (!r || r->get_den() != 1) return std::nullopt;
  return Integer(r->get_num());
}

RingElement RingElement::operator-() const {
  return std::visit([](const auto& v) { return RingElement(std::decay_t<decltype(v)>(-v)); }, value_);
}

RingElement& RingElement::operator+=(const RingElement& rhs) { return *this = combine(*this, rhs, Plus{}); }
RingElement& RingElement::operator-=(const RingElement& rhs) { return *this = combine(*this, rhs, Minus{}); }
RingElement& RingElement::operator*=(const RingElement& rhs) { return *this = combine(*this, rhs, Times{}); }

bool operator==(const RingElement& a, const RingElement& b) {
  if (a.is_polynomial() || b.is_polynomial()) return a.as_polynomial() == b.as_polynomial();
  return widen_to_rational(a.variant()) == widen_to_rational(b.variant());
}

RingElement RingElement::pow(unsigned exponent) const {
  RingElement result = is_polynomial() ? RingElement(Polynomial(Rational(1))) : RingElement(1);
  RingElement base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

std::string RingElement::to_string() const {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Polynomial>) {
          return v.to_string();
        } else {
          return v.get_str();
        }
      },
      value_);
}

RingElement add(const RingElement& a, const RingElement& b) { return a + b; }
RingElement mul(const RingElement& a, const RingElement& b) { return a * b; }
bool is_zero(const RingElement& a) { return a.is_zero(); }

RingElement exact_div(const RingElement& a, const RingElement& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (!a.is_polynomial() && !b.is_polynomial()) {
    return RingElement(Rational(widen_to_rational(a.variant()) / widen_to_rational(b.variant())));
  }
  auto [quot, rem] = Polynomial::divmod(a.as_polynomial(), b.as_polynomial());
  if (!rem.is_zero()) {
    throw NotDivisible("(" + a.to_string() + ") is not divisible by (" + b.to_string() + ")");
  }
  return RingElement(std::move(quot));
}

// ---------------------------------------------------------------------------
// Quotient

Quotient::Quotient(const RingElement& num, const RingElement& den) : num_(num), den_(den) { normalize(); }

void Quotient::normalize() {
  if (den_.is_zero()) throw DivisionByZero();
  if (!num_.is_polynomial() && !den_.is_polynomial()) {
    num_ = exact_div(num_, den_);
    den_ = RingElement(1);
    return;
  }
  Polynomial p = num_.as_polynomial();
  Polynomial q = den_.as_polynomial();
  if (p.is_zero()) {
    num_ = RingElement(Polynomial());
    den_ = RingElement(Polynomial(Rational(1)));
    return;
  }
  const Polynomial g = Polynomial::gcd(p, q);
  p = Polynomial::divmod(p, g).first;
  q = Polynomial::divmod(q, g).first;
  const Rational inv = 1 / q.leading();
  p *= inv;
  q *= inv;
  num_ = RingElement(std::move(p));
  den_ = RingElement(std::move(q));
}

bool Quotient::in_ring() const { return den_.is_one(); }

RingElement Quotient::to_ring() const {
  if (!in_ring()) throw NotDivisible("(" + num_.to_string() + ")/(" + den_.to_string() + ") is not a polynomial");
  return num_;
}

Quotient Quotient::operator-() const {
  Quotient r = *this;
  r.num_ = -r.num_;
  return r;
}

Quotient operator+(const Quotient& a, const Quotient& b) {
  if (a.in_ring() && b.in_ring()) return Quotient(a.num_ + b.num_);
  return Quotient(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Quotient operator-(const Quotient& a, const Quotient& b) { return a + (-b); }

Quotient operator*(const Quotient& a, const Quotient& b) {
  if (a.in_ring() && b.in_ring()) return Quotient(a.num_ * b.num_);
  return Quotient(a.num_ * b.num_, a.den_ * b.den_);
}

Quotient operator/(const Quotient& a, const Quotient& b) {
  if (b.is_zero()) throw DivisionByZero();
  return Quotient(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const Quotient& a, const Quotient& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

std::string Quotient::to_string() const {
  if (in_ring()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

std::ostream& operator<<(std::ostream& os, const RingElement& e) { return os << e.to_string(); }
std::ostream& operator<<(std::ostream& os, const Quotient& q) { return os << q.to_string(); }

}  // namespace lucasbinom
