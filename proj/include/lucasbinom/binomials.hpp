#pragma once

/**
 * @file binomials.hpp
 * @brief Generalized factorials and the coefficient families built on them.
 *
 * Every coefficient is the definitional quotient: numerator and denominator
 * are multiplied out in full and divided once. The recurrence route to the
 * same numbers lives in identities.hpp and never calls into this file's
 * quotient helpers for its own values.
 *
 * All families require the factors H_1..H_n they touch to be nonzero and
 * throw ZeroTerm otherwise. For polynomial parameters a quotient that is not
 * a polynomial throws NotDivisible; the *_quotient variants return the
 * reduced fraction instead.
 */

#include "lucasbinom/ring.hpp"
#include "lucasbinom/sequences.hpp"

#include <cstddef>
#include <span>

namespace lucasbinom {

struct BinomialValue {
  RingElement value;
  /// Integer-valued: an Integer, or a polynomial with integer coefficients.
  bool integral = true;

  static BinomialValue from(RingElement v) {
    const bool integral = v.is_integral();
    return {std::move(v), integral};
  }
};

/// H_n * H_{n-1} * ... * H_1; the empty product (n = 0) is 1. H_0 never
/// enters, so V_0 = 2 is not a factor of V_n!.
RingElement gen_factorial(const SequenceHandle& h, std::size_t n);

/// H_n * H_{n-1} * ... * H_{n-k+1}. Throws IndexError if k > n.
RingElement falling_factorial(const SequenceHandle& h, std::size_t n, std::size_t k);

/// H_n! / (H_k! * H_{n-k}!) as a reduced fraction; 0 for k > n.
Quotient binomial_quotient(const SequenceHandle& h, std::size_t n, std::size_t k);

/// V_{r+s}! / (V_r! * U_s!) as a reduced fraction. Not symmetric in (r, s).
Quotient mixed_quotient(const SequenceHandle& v, const SequenceHandle& u, std::size_t r, std::size_t s);

/// (sum parts)_H! / prod (part_i)_H! as a reduced fraction.
Quotient multinomial_quotient(const SequenceHandle& h, std::span<const std::size_t> parts);

/// Falling factorial over factorial, for any Ward-Horadam handle.
BinomialValue binomial(const SequenceHandle& h, std::size_t n, std::size_t k);

/// U-binomial {n choose k}_U for U = lucas_u(s, t).
BinomialValue u_binomial(const RingElement& s, const RingElement& t, std::size_t n, std::size_t k);
/// V-binomial {n choose k}_V for V = lucas_v(s, t). Generally not integral.
BinomialValue v_binomial(const RingElement& s, const RingElement& t, std::size_t n, std::size_t k);
/// H_n! / (H_k! * H_{n-k}!) for the sequence given by params.
BinomialValue h_binomial(const RecurrenceParams& params, std::size_t n, std::size_t k);
/// V_{r+s}! / (V_r! * U_s!).
BinomialValue mixed_binomial(const RingElement& s, const RingElement& t, std::size_t r, std::size_t sidx);
BinomialValue multinomial(const SequenceHandle& h, std::span<const std::size_t> parts);

}  // namespace lucasbinom
