#include "lucasbinom/identities.hpp"

#include "lucasbinom/binomials.hpp"
#include "lucasbinom/errors.hpp"

#include <algorithm>
#include <memory>

namespace lucasbinom {

namespace {

using Cell = std::optional<Quotient>;
// Indexed [r][s] with r + s <= maxn; empty cells hit a zero factorial term.
using Triangle = std::vector<std::vector<Cell>>;

IdentityReport make_report(std::string_view name, const RecurrenceParams& params, std::size_t r, std::size_t s,
                           Quotient lhs, Quotient rhs) {
  const bool equal = lhs == rhs;
  return {std::string(name), params, r, s, std::move(lhs), std::move(rhs), equal ? Status::Holds : Status::Fails};
}

IdentityReport skipped(std::string_view name, const RecurrenceParams& params, std::size_t r, std::size_t s) {
  return {std::string(name), params, r, s, std::nullopt, std::nullopt, Status::SkippedZeroTerm};
}

template <typename F>
Triangle build_triangle(std::size_t maxn, F&& cell) {
  Triangle tri(maxn + 1);
  for (std::size_t r = 0; r <= maxn; ++r) {
    tri[r].resize(maxn - r + 1);
    for (std::size_t s = 0; r + s <= maxn; ++s) {
      try {
        tri[r][s] = cell(r, s);
      } catch (const ZeroTerm&) {
        tri[r][s] = std::nullopt;
      }
    }
  }
  return tri;
}

Triangle binomial_triangle(const SequenceHandle& u, std::size_t maxn) {
  return build_triangle(maxn, [&](std::size_t r, std::size_t s) { return binomial_quotient(u, r + s, r); });
}

Triangle mixed_triangle(const SequenceHandle& v, const SequenceHandle& u, std::size_t maxn) {
  return build_triangle(maxn, [&](std::size_t r, std::size_t s) { return mixed_quotient(v, u, r, s); });
}

// Visits (r, s) with r, s >= 1 and r + s <= maxn in (r, s) order.
template <typename F>
void for_each_inner_cell(std::size_t maxn, F&& f) {
  for (std::size_t r = 1; r < maxn; ++r) {
    for (std::size_t s = 1; r + s <= maxn; ++s) f(r, s);
  }
}

// Evaluates lhs_factor * T(r,s) = c1 * T(r-1,s) + c2 * T(r,s-1) on a triangle.
std::vector<IdentityReport> check_triangle_recurrence(
    std::string_view name, const RecurrenceParams& params, const Triangle& tri, std::size_t maxn,
    const RingElement& lhs_factor, const std::function<RingElement(std::size_t, std::size_t)>& c1,
    const std::function<RingElement(std::size_t, std::size_t)>& c2) {
  std::vector<IdentityReport> out;
  for_each_inner_cell(maxn, [&](std::size_t r, std::size_t s) {
    const Cell& here = tri[r][s];
    const Cell& up = tri[r - 1][s];
    const Cell& left = tri[r][s - 1];
    if (!here || !up || !left) {
      out.push_back(skipped(name, params, r, s));
      return;
    }
    Quotient lhs = Quotient(lhs_factor) * *here;
    Quotient rhs = Quotient(c1(r, s)) * *up + Quotient(c2(r, s)) * *left;
    out.push_back(make_report(name, params, r, s, std::move(lhs), std::move(rhs)));
  });
  return out;
}

RecurrenceParams u_params(const RingElement& s, const RingElement& t) { return {s, t, RingElement(0), RingElement(1)}; }

}  // namespace

std::string_view status_name(Status status) {
  switch (status) {
    case Status::Holds:
      return "HOLDS";
    case Status::Fails:
      return "FAILS";
    case Status::SkippedZeroTerm:
      break;
  }
  return "SKIPPED-ZERO-TERM";
}

std::string_view variant_label(MixedVariant variant) {
  return variant == MixedVariant::PaperEq14 ? "eq14-paper" : "eq14-derived";
}

DecompositionCoeffs lucas_decomposition(const RingElement& s, const RingElement& t) {
  auto u = std::make_shared<SequenceHandle>(lucas_u(s, t));
  return {[u](std::size_t, std::size_t sidx) { return u->term(sidx + 1); },
          [u, t](std::size_t r, std::size_t) { return t * u->term(r - 1); }, RingElement(1)};
}

DecompositionCoeffs doubled_u_decomposition(const RingElement& s, const RingElement& t) {
  auto v = std::make_shared<SequenceHandle>(lucas_v(s, t));
  return {[v](std::size_t, std::size_t sidx) { return v->term(sidx); },
          [v](std::size_t r, std::size_t) { return v->term(r); }, RingElement(2)};
}

IdentityReport check_sequence_decomposition(const SequenceHandle& h, const DecompositionCoeffs& c, std::size_t r,
                                            std::size_t s) {
  if (r == 0 || s == 0) throw IndexError("decomposition check needs r, s > 0");
  RingElement lhs = c.scale * h.term(r + s);
  RingElement rhs = c.g1(r, s) * h.term(r) + c.g2(r, s) * h.term(s);
  return make_report("eq7", h.params(), r, s, Quotient(std::move(lhs)), Quotient(std::move(rhs)));
}

std::vector<std::vector<RingElement>> recurrence_triangle(const DecompositionCoeffs& c, std::size_t maxn) {
  std::vector<std::vector<RingElement>> b(maxn + 1);
  const bool unit_scale = c.scale.is_one();
  for (std::size_t r = 0; r <= maxn; ++r) {
    b[r].resize(maxn - r + 1);
    for (std::size_t s = 0; r + s <= maxn; ++s) {
      if (r == 0 || s == 0) {
        b[r][s] = RingElement(1);
        continue;
      }
      RingElement sum = c.g1(r, s) * b[r - 1][s] + c.g2(r, s) * b[r][s - 1];
      b[r][s] = unit_scale ? std::move(sum) : exact_div(sum, c.scale);
    }
  }
  return b;
}

RingElement binomial_by_recurrence(const DecompositionCoeffs& c, std::size_t r, std::size_t s) {
  return recurrence_triangle(c, r + s)[r][s];
}

EquivalenceResult check_theorem1_equivalence(const SequenceHandle& h, const DecompositionCoeffs& c,
                                             std::size_t maxn) {
  if (maxn < 2) throw IndexError("equivalence check needs maxn >= 2");
  EquivalenceResult result;
  const auto dp = recurrence_triangle(c, maxn);
  const Triangle quotient = binomial_triangle(h, maxn);

  // Cone flags: decomposition_cone[r][s] is true when eq7 holds at every
  // (r', s') with 1 <= r' <= r, 1 <= s' <= s; recurrence_cone likewise for
  // recurrence == quotient over 0 <= r' <= r, 0 <= s' <= s.
  std::vector<std::vector<bool>> decomposition_cone(maxn + 1), recurrence_cone(maxn + 1);
  for (std::size_t r = 0; r <= maxn; ++r) {
    decomposition_cone[r].assign(maxn - r + 1, true);
    recurrence_cone[r].assign(maxn - r + 1, true);
  }

  for (std::size_t r = 0; r <= maxn; ++r) {
    for (std::size_t s = 0; r + s <= maxn; ++s) {
      bool decomposition_here = true;
      if (r > 0 && s > 0) {
        IdentityReport rep = check_sequence_decomposition(h, c, r, s);
        decomposition_here = rep.holds();
        result.decomposition.push_back(std::move(rep));
      }
      decomposition_cone[r][s] = decomposition_here && (r == 0 || decomposition_cone[r - 1][s]) &&
                                 (s == 0 || decomposition_cone[r][s - 1]);

      if (!quotient[r][s]) {
        result.recurrence.push_back(skipped("thm1-equiv", h.params(), r, s));
        continue;
      }
      IdentityReport rep = make_report("thm1-equiv", h.params(), r, s, Quotient(dp[r][s]), *quotient[r][s]);
      const bool recurrence_here = rep.holds();
      result.recurrence.push_back(std::move(rep));
      recurrence_cone[r][s] =
          recurrence_here && (r == 0 || recurrence_cone[r - 1][s]) && (s == 0 || recurrence_cone[r][s - 1]);
      if (recurrence_cone[r][s] != decomposition_cone[r][s]) result.equivalent = false;
    }
  }

  auto by_diagonal = [](const std::vector<IdentityReport>& reps) -> std::optional<std::pair<std::size_t, std::size_t>> {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (const auto& rep : reps) {
      if (!rep.fails()) continue;
      if (!best || std::pair{rep.r + rep.s, rep.r} < std::pair{best->first + best->second, best->first}) {
        best = std::pair{rep.r, rep.s};
      }
    }
    return best;
  };
  result.first_decomposition_failure = by_diagonal(result.decomposition);
  result.first_recurrence_mismatch = by_diagonal(result.recurrence);
  return result;
}

std::vector<IdentityReport> check_lucas_decomposition(const RingElement& s, const RingElement& t, std::size_t maxn) {
  const SequenceHandle u = lucas_u(s, t);
  const DecompositionCoeffs c = lucas_decomposition(s, t);
  std::vector<IdentityReport> out;
  for_each_inner_cell(maxn, [&](std::size_t r, std::size_t sidx) {
    out.push_back(check_sequence_decomposition(u, c, r, sidx));
  });
  return out;
}

std::vector<IdentityReport> check_addition_formulas(const RingElement& s, const RingElement& t, std::size_t maxn) {
  const SequenceHandle u = lucas_u(s, t);
  const SequenceHandle v = lucas_v(s, t);
  const RingElement delta = discriminant(s, t);
  const RingElement two(2);
  std::vector<IdentityReport> first, second;
  for (std::size_t r = 0; r <= maxn; ++r) {
    for (std::size_t k = 0; r + k <= maxn; ++k) {
      first.push_back(make_report("eq8-u", u.params(), r, k, two * u.term(r + k),
                                  u.term(r) * v.term(k) + u.term(k) * v.term(r)));
      second.push_back(make_report("eq8-v", v.params(), r, k, two * v.term(r + k),
                                   v.term(r) * v.term(k) + delta * u.term(k) * u.term(r)));
    }
  }
  first.insert(first.end(), std::make_move_iterator(second.begin()), std::make_move_iterator(second.end()));
  return first;
}

std::vector<IdentityReport> check_u_binomial_doubled(const RingElement& s, const RingElement& t, std::size_t maxn) {
  const SequenceHandle u = lucas_u(s, t);
  const SequenceHandle v = lucas_v(s, t);
  const Triangle tri = binomial_triangle(u, maxn);
  return check_triangle_recurrence(
      "eq9", u.params(), tri, maxn, RingElement(2), [&](std::size_t, std::size_t k) { return v.term(k); },
      [&](std::size_t r, std::size_t) { return v.term(r); });
}

std::vector<IdentityReport> check_v_u_identity(const RingElement& s, const RingElement& t, std::size_t maxn) {
  const SequenceHandle u = lucas_u(s, t);
  const SequenceHandle v = lucas_v(s, t);
  std::vector<IdentityReport> out;
  for_each_inner_cell(maxn, [&](std::size_t r, std::size_t k) {
    out.push_back(make_report("eq12", v.params(), r, k, v.term(r + k),
                              u.term(k + 1) * v.term(r) + t * v.term(r - 1) * u.term(k)));
  });
  return out;
}

std::vector<IdentityReport> check_mixed_recurrence(const RingElement& s, const RingElement& t, std::size_t maxn,
                                                   MixedVariant variant) {
  const SequenceHandle u = lucas_u(s, t);
  const SequenceHandle v = lucas_v(s, t);
  const Triangle tri = mixed_triangle(v, u, maxn);
  std::function<RingElement(std::size_t, std::size_t)> second;
  if (variant == MixedVariant::PaperEq14) {
    second = [&](std::size_t, std::size_t k) { return t * u.term(k); };
  } else {
    second = [&](std::size_t r, std::size_t) { return t * v.term(r - 1); };
  }
  return check_triangle_recurrence(
      variant_label(variant), u_params(s, t), tri, maxn, RingElement(1),
      [&](std::size_t, std::size_t k) { return u.term(k + 1); }, second);
}

std::vector<IdentityReport> check_mixed_doubled(const RingElement& s, const RingElement& t, std::size_t maxn) {
  const SequenceHandle u = lucas_u(s, t);
  const SequenceHandle v = lucas_v(s, t);
  const RingElement delta = discriminant(s, t);
  const Triangle tri = mixed_triangle(v, u, maxn);
  return check_triangle_recurrence(
      "eq15", u_params(s, t), tri, maxn, RingElement(2), [&](std::size_t, std::size_t k) { return v.term(k); },
      [&](std::size_t r, std::size_t) { return delta * u.term(r); });
}

MixedRecurrenceVerdict resolve_mixed_recurrence(const std::vector<IdentityReport>& paper,
                                                const std::vector<IdentityReport>& derived) {
  MixedRecurrenceVerdict verdict;
  auto count = [](const std::vector<IdentityReport>& reps) {
    return static_cast<std::size_t>(std::count_if(reps.begin(), reps.end(), [](const auto& r) { return r.fails(); }));
  };
  verdict.paper_failures = count(paper);
  verdict.derived_failures = count(derived);

  const bool paper_holds = verdict.paper_failures == 0;
  const bool derived_holds = verdict.derived_failures == 0;
  verdict.clean = paper_holds != derived_holds;
  if (!verdict.clean) return verdict;

  verdict.survivor = paper_holds ? MixedVariant::PaperEq14 : MixedVariant::DerivedVr1;
  const auto& loser = paper_holds ? derived : paper;
  for (const auto& rep : loser) {
    if (!rep.fails()) continue;
    if (!verdict.counterexample ||
        std::pair{rep.r + rep.s, rep.r} < std::pair{verdict.counterexample->r + verdict.counterexample->s,
                                                    verdict.counterexample->r}) {
      verdict.counterexample = rep;
    }
  }
  return verdict;
}

std::vector<std::pair<RingElement, RingElement>> integer_grid(int bound) {
  std::vector<std::pair<RingElement, RingElement>> grid;
  for (int s = -bound; s <= bound; ++s) {
    for (int t = -bound; t <= bound; ++t) {
      if (t == 0 || s * s + 4 * t == 0) continue;
      grid.emplace_back(RingElement(s), RingElement(t));
    }
  }
  return grid;
}

std::pair<RingElement, RingElement> gaussian_params() {
  const Polynomial x = Polynomial::x();
  return {RingElement(x + Polynomial(Rational(1))), RingElement(-x)};
}

}  // namespace lucasbinom
