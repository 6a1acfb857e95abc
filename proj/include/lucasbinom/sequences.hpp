#pragma once

#include "lucasbinom/ring.hpp"

#include <cstddef>
#include <mutex>
#include <vector>

namespace lucasbinom {

/// H_0 = a, H_1 = b, H_{n+2} = s*H_{n+1} + t*H_n.
/// In the (P, Q) convention P = s and Q = -t.
struct RecurrenceParams {
  RingElement s;
  RingElement t;
  RingElement a;
  RingElement b;

  static RecurrenceParams from_pq(const RingElement& P, const RingElement& Q, const RingElement& a,
                                  const RingElement& b) {
    return {P, -Q, a, b};
  }
};

/// Memoized Ward-Horadam sequence generated by iterating the recurrence.
///
/// term() is logically const: the cache only grows, previously returned
/// values never change, and concurrent calls are serialized internally.
class SequenceHandle {
 public:
  /// Throws DegenerateRecurrence when t == 0.
  explicit SequenceHandle(RecurrenceParams params);
  SequenceHandle(const SequenceHandle& other);
  SequenceHandle& operator=(const SequenceHandle& other);

  const RecurrenceParams& params() const noexcept { return params_; }

  RingElement term(std::size_t n) const;
  /// Terms H_0..H_n inclusive.
  std::vector<RingElement> terms(std::size_t n) const;

 private:
  void extend_locked(std::size_t n) const;

  RecurrenceParams params_;
  mutable std::mutex mutex_;
  mutable std::vector<RingElement> cache_;
};

/// Fundamental Lucas sequence: U_0 = 0, U_1 = 1.
SequenceHandle lucas_u(const RingElement& s, const RingElement& t);
/// Primordial Lucas sequence: V_0 = 2, V_1 = s.
SequenceHandle lucas_v(const RingElement& s, const RingElement& t);

/// Binet form H_n = A*p^n + B*q^n with explicit characteristic roots.
struct BinetParams {
  RingElement p;
  RingElement q;
  RingElement A;
  RingElement B;
};

/// A*p^n + B*q^n by explicit powering. Throws InvalidRoots if p == q, p*q == 0
/// or A == B == 0.
RingElement binet_term(const BinetParams& bp, std::size_t n);

/// (p - q)^2 for the characteristic roots of z^2 = s*z + t, which is s^2 + 4t
/// (P^2 - 4Q in the (P, Q) convention).
RingElement discriminant(const RingElement& s, const RingElement& t);

/// True when the characteristic polynomial has a repeated root.
bool has_repeated_root(const RingElement& s, const RingElement& t);

}  // namespace lucasbinom
