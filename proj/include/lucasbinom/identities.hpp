#pragma once

/**
 * @file identities.hpp
 * @brief Exact evaluation of the addition formulas and binomial recurrences.
 *
 * Each checker evaluates both sides of one identity over the index triangle
 * r + s <= maxn and returns one IdentityReport per cell. Identities with a
 * factor 2 on the left are checked exactly as written (2*lhs against the
 * right-hand side); nothing is divided by 2.
 *
 * Binomial cells come from the factorial-quotient definitions in
 * binomials.hpp. A cell whose factorials contain a vanishing term is reported
 * as SkippedZeroTerm rather than as a failure.
 *
 * Identity labels:
 *   eq7           F_{r+s} = U_{s+1} F_r + t U_{r-1} F_s on F = U
 *   eq8-u, eq8-v  2U_{r+s} = U_r V_s + U_s V_r,  2V_{r+s} = V_r V_s + D U_r U_s
 *   eq9           2{r+s; r,s}_U = V_s {r+s-1; r-1,s}_U + V_r {r+s-1; r,s-1}_U
 *   eq12          V_{r+s} = U_{s+1} V_r + t V_{r-1} U_s
 *   eq14-paper    M(r,s) = U_{s+1} M(r-1,s) + t U_s M(r,s-1)
 *   eq14-derived  M(r,s) = U_{s+1} M(r-1,s) + t V_{r-1} M(r,s-1)
 *   eq15          2M(r,s) = V_s M(r-1,s) + D U_r M(r,s-1)
 *   thm1-equiv    recurrence-built binomial against the quotient definition
 * where M(r,s) = V_{r+s}!/(V_r! U_s!) and D = (p - q)^2 = s^2 + 4t.
 */

#include "lucasbinom/ring.hpp"
#include "lucasbinom/sequences.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lucasbinom {

enum class Status { Holds, Fails, SkippedZeroTerm };

/// "HOLDS", "FAILS" or "SKIPPED-ZERO-TERM".
std::string_view status_name(Status status);

struct IdentityReport {
  std::string identity;
  RecurrenceParams params;
  std::size_t r = 0;
  std::size_t s = 0;
  /// Empty when the cell was skipped.
  std::optional<Quotient> lhs;
  std::optional<Quotient> rhs;
  Status status = Status::Holds;

  bool holds() const noexcept { return status == Status::Holds; }
  bool fails() const noexcept { return status == Status::Fails; }
};

/// Coefficients for scale * F_{r+s} = g1(r,s) * F_r + g2(r,s) * F_s.
struct DecompositionCoeffs {
  std::function<RingElement(std::size_t r, std::size_t s)> g1;
  std::function<RingElement(std::size_t r, std::size_t s)> g2;
  RingElement scale{1};
};

/// g1 = U_{s+1}, g2 = t * U_{r-1}, valid for F = U.
DecompositionCoeffs lucas_decomposition(const RingElement& s, const RingElement& t);
/// scale 2, g1 = V_s, g2 = V_r, valid for F = U.
DecompositionCoeffs doubled_u_decomposition(const RingElement& s, const RingElement& t);

/// lhs = scale * H_{r+s}, rhs = g1 * H_r + g2 * H_s. Requires r, s > 0.
IdentityReport check_sequence_decomposition(const SequenceHandle& h, const DecompositionCoeffs& c, std::size_t r,
                                            std::size_t s);

/// Triangle B[r][s], r + s <= maxn, built only from the recurrence
/// scale * B(r,s) = g1 B(r-1,s) + g2 B(r,s-1) with B(r,0) = B(0,s) = 1.
std::vector<std::vector<RingElement>> recurrence_triangle(const DecompositionCoeffs& c, std::size_t maxn);

/// Single entry of recurrence_triangle.
RingElement binomial_by_recurrence(const DecompositionCoeffs& c, std::size_t r, std::size_t s);

struct EquivalenceResult {
  /// eq7 at every r, s >= 1.
  std::vector<IdentityReport> decomposition;
  /// thm1-equiv at every r, s >= 0: lhs is the recurrence value, rhs the quotient.
  std::vector<IdentityReport> recurrence;
  /// For every defined cell, "eq7 holds on the cell's dependency cone" agrees
  /// with "recurrence equals quotient on the cone".
  bool equivalent = true;
  std::optional<std::pair<std::size_t, std::size_t>> first_decomposition_failure;
  std::optional<std::pair<std::size_t, std::size_t>> first_recurrence_mismatch;
};

/// Both directions of the equivalence between the decomposition
/// F_{r+s} = g1 F_r + g2 F_s and the two-term binomial recurrence, for all
/// r + s <= maxn (maxn >= 2).
EquivalenceResult check_theorem1_equivalence(const SequenceHandle& h, const DecompositionCoeffs& c,
                                             std::size_t maxn);

/// eq7 with Lucas coefficients on U, r, s >= 1.
std::vector<IdentityReport> check_lucas_decomposition(const RingElement& s, const RingElement& t, std::size_t maxn);
/// eq8-u and eq8-v for all r, s >= 0.
std::vector<IdentityReport> check_addition_formulas(const RingElement& s, const RingElement& t, std::size_t maxn);
/// eq9 for r, s >= 1.
std::vector<IdentityReport> check_u_binomial_doubled(const RingElement& s, const RingElement& t, std::size_t maxn);
/// eq12 for r, s >= 1.
std::vector<IdentityReport> check_v_u_identity(const RingElement& s, const RingElement& t, std::size_t maxn);

enum class MixedVariant {
  PaperEq14,   ///< second coefficient t * U_s
  DerivedVr1,  ///< second coefficient t * V_{r-1}
};

std::string_view variant_label(MixedVariant variant);

/// eq14-paper or eq14-derived for r, s >= 1.
std::vector<IdentityReport> check_mixed_recurrence(const RingElement& s, const RingElement& t, std::size_t maxn,
                                                   MixedVariant variant);
/// eq15 for r, s >= 1.
std::vector<IdentityReport> check_mixed_doubled(const RingElement& s, const RingElement& t, std::size_t maxn);

struct MixedRecurrenceVerdict {
  /// The variant with no failing cell, if exactly one qualifies.
  std::optional<MixedVariant> survivor;
  /// Exactly one variant holds everywhere and the other fails somewhere.
  bool clean = false;
  std::size_t paper_failures = 0;
  std::size_t derived_failures = 0;
  /// Smallest failing cell of the non-surviving variant, ordered by
  /// (r + s, r) and then by position in the input.
  std::optional<IdentityReport> counterexample;
};

MixedRecurrenceVerdict resolve_mixed_recurrence(const std::vector<IdentityReport>& paper,
                                                const std::vector<IdentityReport>& derived);

/// Integer parameter pairs with |s|, |t| <= bound, t != 0 and distinct roots
/// (s^2 + 4t != 0), ordered by (s, t).
std::vector<std::pair<RingElement, RingElement>> integer_grid(int bound = 3);

/// (s, t) = (x + 1, -x): U_n are the Gaussian integers 1 + x + ... + x^{n-1}.
std::pair<RingElement, RingElement> gaussian_params();

}  // namespace lucasbinom
