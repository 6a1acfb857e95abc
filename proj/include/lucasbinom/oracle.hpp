#pragma once

// Brute-force reference values. Everything here is a single fraction of full
// term products; nothing is shared with binomials.hpp or identities.hpp.

#include "lucasbinom/ring.hpp"
#include "lucasbinom/sequences.hpp"

#include <cstddef>
#include <optional>

namespace lucasbinom::oracle {

struct OracleResult {
  RingElement numerator;
  RingElement denominator;
  /// numerator / denominator; empty when a polynomial quotient has a remainder.
  std::optional<RingElement> reduced;

  /// Compares against any value by cross-multiplication, so it also works
  /// when reduced is empty.
  bool matches(const Quotient& value) const;
};

/// H_n! / (H_k! * H_{n-k}!) for 0 <= k <= n. Throws ZeroTerm if any of
/// H_1..H_n vanishes and IndexError if k > n.
OracleResult oracle_binomial(const SequenceHandle& h, std::size_t n, std::size_t k);

/// V_{r+s}! / (V_r! * U_s!), with U and V regenerated here from (s, t).
OracleResult oracle_mixed(const RingElement& s, const RingElement& t, std::size_t r, std::size_t sidx);

}  // namespace lucasbinom::oracle
