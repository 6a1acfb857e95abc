#include "lucasbinom/oracle.hpp"

#include "lucasbinom/errors.hpp"

#include <vector>

namespace lucasbinom::oracle {

namespace {

RingElement product(const std::vector<RingElement>& terms, std::size_t from, std::size_t to) {
  RingElement acc(1);
  for (std::size_t i = from; i <= to; ++i) {
    if (terms[i].is_zero()) throw ZeroTerm(i);
    acc *= terms[i];
  }
  return acc;
}

OracleResult divide_once(RingElement num, RingElement den) {
  OracleResult out{std::move(num), std::move(den), std::nullopt};
  if (!out.numerator.is_polynomial() && !out.denominator.is_polynomial()) {
    out.reduced = RingElement(Rational(*out.numerator.as_rational() / *out.denominator.as_rational()));
    return out;
  }
  auto [q, r] = Polynomial::divmod(out.numerator.as_polynomial(), out.denominator.as_polynomial());
  if (r.is_zero()) out.reduced = RingElement(std::move(q));
  return out;
}

std::vector<RingElement> iterate(const RingElement& s, const RingElement& t, RingElement h0, RingElement h1,
                                 std::size_t n) {
  std::vector<RingElement> out{std::move(h0), std::move(h1)};
  while (out.size() <= n) out.push_back(s * out[out.size() - 1] + t * out[out.size() - 2]);
  return out;
}

}  // namespace

bool OracleResult::matches(const Quotient& value) const {
  return numerator * value.denominator() == value.numerator() * denominator;
}

OracleResult oracle_binomial(const SequenceHandle& h, std::size_t n, std::size_t k) {
  if (k > n) throw IndexError("oracle_binomial needs k <= n");
  std::vector<RingElement> terms;
  terms.reserve(n + 1);
  for (std::size_t i = 0; i <= n; ++i) terms.push_back(h.term(i));
  RingElement num = product(terms, 1, n);
  RingElement den = product(terms, 1, k) * product(terms, 1, n - k);
  return divide_once(std::move(num), std::move(den));
}

OracleResult oracle_mixed(const RingElement& s, const RingElement& t, std::size_t r, std::size_t sidx) {
  if (t.is_zero()) throw DegenerateRecurrence("t = 0 reduces the recurrence to first order");
  const std::size_t n = r + sidx;
  const auto v = iterate(s, t, RingElement(2), s, n);
  const auto u = iterate(s, t, RingElement(0), RingElement(1), n);
  RingElement num = product(v, 1, n);
  RingElement den = product(v, 1, r) * product(u, 1, sidx);
  return divide_once(std::move(num), std::move(den));
}

}  // namespace lucasbinom::oracle
