#include "lucasbinom/binomials.hpp"

#include "lucasbinom/errors.hpp"

#include <numeric>

namespace lucasbinom {

namespace {

RingElement one_like(const SequenceHandle& h) {
  const auto& p = h.params();
  const bool poly = p.s.is_polynomial() || p.t.is_polynomial() || p.a.is_polynomial() || p.b.is_polynomial();
  return poly ? RingElement(Polynomial(Rational(1))) : RingElement(1);
}

void require_nonzero_terms(const SequenceHandle& h, std::size_t n) {
  for (std::size_t i = 1; i <= n; ++i) {
    if (h.term(i).is_zero()) throw ZeroTerm(i);
  }
}

}  // namespace

RingElement gen_factorial(const SequenceHandle& h, std::size_t n) {
  RingElement acc = one_like(h);
  for (std::size_t i = n; i >= 1; --i) {
    RingElement f = h.term(i);
    if (f.is_zero()) throw ZeroTerm(i);
    acc *= f;
  }
  return acc;
}

RingElement falling_factorial(const SequenceHandle& h, std::size_t n, std::size_t k) {
  if (k > n) throw IndexError("falling factorial needs k <= n");
  RingElement acc = one_like(h);
  for (std::size_t i = 0; i < k; ++i) acc *= h.term(n - i);
  return acc;
}

Quotient binomial_quotient(const SequenceHandle& h, std::size_t n, std::size_t k) {
  if (k > n) return Quotient(RingElement(0) * one_like(h));
  return Quotient(gen_factorial(h, n), gen_factorial(h, k) * gen_factorial(h, n - k));
}

Quotient mixed_quotient(const SequenceHandle& v, const SequenceHandle& u, std::size_t r, std::size_t s) {
  return Quotient(gen_factorial(v, r + s), gen_factorial(v, r) * gen_factorial(u, s));
}

Quotient multinomial_quotient(const SequenceHandle& h, std::span<const std::size_t> parts) {
  const std::size_t n = std::accumulate(parts.begin(), parts.end(), std::size_t{0});
  RingElement den = one_like(h);
  for (std::size_t part : parts) den *= gen_factorial(h, part);
  return Quotient(gen_factorial(h, n), den);
}

BinomialValue binomial(const SequenceHandle& h, std::size_t n, std::size_t k) {
  if (k > n) return BinomialValue::from(RingElement(0) * one_like(h));
  require_nonzero_terms(h, n);
  return BinomialValue::from(exact_div(falling_factorial(h, n, k), gen_factorial(h, k)));
}

BinomialValue u_binomial(const RingElement& s, const RingElement& t, std::size_t n, std::size_t k) {
  return binomial(lucas_u(s, t), n, k);
}

BinomialValue v_binomial(const RingElement& s, const RingElement& t, std::size_t n, std::size_t k) {
  return binomial(lucas_v(s, t), n, k);
}

BinomialValue h_binomial(const RecurrenceParams& params, std::size_t n, std::size_t k) {
  return BinomialValue::from(binomial_quotient(SequenceHandle(params), n, k).to_ring());
}

BinomialValue mixed_binomial(const RingElement& s, const RingElement& t, std::size_t r, std::size_t sidx) {
  return BinomialValue::from(mixed_quotient(lucas_v(s, t), lucas_u(s, t), r, sidx).to_ring());
}

BinomialValue multinomial(const SequenceHandle& h, std::span<const std::size_t> parts) {
  return BinomialValue::from(multinomial_quotient(h, parts).to_ring());
}

}  // namespace lucasbinom
