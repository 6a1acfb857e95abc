// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "lucasbinom/binomials.hpp"
#include "lucasbinom/cli.hpp"
#include "lucasbinom/errors.hpp"
#include "lucasbinom/identities.hpp"
#include "lucasbinom/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iterator>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace lucasbinom;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

const RingElement kOne(1);

using Reports = std::vector<IdentityReport>;
using Checker = std::function<Reports(const RingElement&, const RingElement&, std::size_t)>;

// Runs a checker on the integer grid (r + s <= 20) and the Gaussian case
// (r + s <= 8); every non-skipped cell must hold.
Outcome all_hold(const std::vector<Checker>& checkers) {
  std::size_t holds = 0, skipped = 0, fails = 0;
  std::string first;
  auto tally = [&](const Reports& reps) {
    for (const auto& r : reps) {
      if (r.holds()) ++holds;
      if (r.status == Status::SkippedZeroTerm) ++skipped;
      if (r.fails()) {
        if (fails++ == 0) {
          std::ostringstream os;
          os << "; first failure " << r.identity << " s=" << r.params.s << " t=" << r.params.t << " r=" << r.r
             << " s'=" << r.s;
          first = os.str();
        }
      }
    }
  };
  for (const auto& check : checkers) {
    for (const auto& [s, t] : integer_grid()) tally(check(s, t, 20));
    const auto [qs, qt] = gaussian_params();
    tally(check(qs, qt, 8));
  }
  std::ostringstream os;
  os << holds << " cells hold, " << skipped << " skipped (zero term), " << fails << " fail" << first;
  return {fails == 0 && holds > 0, os.str()};
}

template <typename F, typename G>
bool same_or_both_zero_term(F&& value, G&& reference, std::size_t& compared) {
  std::optional<RingElement> v, ref;
  bool v_zero = false, ref_zero = false;
  try {
    v = value();
  } catch (const ZeroTerm&) {
    v_zero = true;
  }
  try {
    ref = reference();
  } catch (const ZeroTerm&) {
    ref_zero = true;
  }
  if (v_zero || ref_zero) return v_zero && ref_zero;
  ++compared;
  return *v == *ref;
}

RingElement reduced(const oracle::OracleResult& r) {
  if (!r.reduced) throw NotDivisible("oracle value is not in the ring");
  return *r.reduced;
}

Outcome oracle_agreement() {
  std::size_t compared = 0, mismatches = 0;
  for (const auto& [s, t] : integer_grid()) {
    const SequenceHandle u = lucas_u(s, t), v = lucas_v(s, t);
    const RecurrenceParams hp{s, t, RingElement(1), RingElement(2)};
    const SequenceHandle h(hp);
    for (std::size_t n = 0; n <= 30; ++n) {
      for (std::size_t k = 0; k <= n; ++k) {
        const bool ok =
            same_or_both_zero_term([&] { return u_binomial(s, t, n, k).value; },
                                   [&] { return reduced(oracle::oracle_binomial(u, n, k)); }, compared) &&
            same_or_both_zero_term([&] { return v_binomial(s, t, n, k).value; },
                                   [&] { return reduced(oracle::oracle_binomial(v, n, k)); }, compared) &&
            same_or_both_zero_term([&] { return h_binomial(hp, n, k).value; },
                                   [&] { return reduced(oracle::oracle_binomial(h, n, k)); }, compared) &&
            same_or_both_zero_term([&] { return mixed_binomial(s, t, k, n - k).value; },
                                   [&] { return reduced(oracle::oracle_mixed(s, t, k, n - k)); }, compared);
        if (!ok) ++mismatches;
      }
    }
  }
  return {mismatches == 0, std::to_string(compared) + " values compared, " + std::to_string(mismatches) +
                               " mismatching cells"};
}

Outcome integrality() {
  std::size_t checked = 0, skipped = 0, bad = 0;
  for (const auto& [s, t] : integer_grid()) {
    for (std::size_t n = 0; n <= 30; ++n) {
      for (std::size_t k = 0; k <= n; ++k) {
        try {
          const BinomialValue b = u_binomial(s, t, n, k);
          ++checked;
          if (!b.integral || !b.value.as_integer()) ++bad;
        } catch (const ZeroTerm&) {
          ++skipped;
        }
      }
    }
  }
  return {bad == 0, std::to_string(checked) + " integral, " + std::to_string(bad) + " not, " +
                        std::to_string(skipped) + " skipped (zero term)"};
}

Outcome decomposition_equivalence() {
  std::size_t cells = 0;
  bool ok = true;
  for (const auto& [s, t] : integer_grid()) {
    const EquivalenceResult res = check_theorem1_equivalence(lucas_u(s, t), lucas_decomposition(s, t), 20);
    for (const auto& r : res.recurrence) {
      if (r.fails()) ok = false;
      if (r.holds()) ++cells;
    }
    ok = ok && res.equivalent && !res.first_decomposition_failure;
  }
  // Mutation: perturb g2 and require both sides to notice at the same cell.
  // When every quotient cell with r, s >= 1 is undefined (s = 0 makes U_2
  // vanish) there is nothing to disagree with; the decomposition side must
  // still flag the mutation.
  std::size_t detected = 0, comparable = 0, incomparable = 0;
  for (const auto& [s, t] : integer_grid()) {
    DecompositionCoeffs c = lucas_decomposition(s, t);
    auto g2 = c.g2;
    c.g2 = [g2](std::size_t r, std::size_t k) { return g2(r, k) + RingElement(1); };
    const EquivalenceResult res = check_theorem1_equivalence(lucas_u(s, t), c, 20);
    const bool defined = std::any_of(res.recurrence.begin(), res.recurrence.end(), [](const IdentityReport& r) {
      return r.r > 0 && r.s > 0 && r.status != Status::SkippedZeroTerm;
    });
    if (!defined) {
      ++incomparable;
      ok = ok && res.first_decomposition_failure.has_value();
      continue;
    }
    ++comparable;
    if (res.equivalent && res.first_recurrence_mismatch &&
        res.first_recurrence_mismatch == res.first_decomposition_failure) {
      ++detected;
    }
  }
  ok = ok && comparable > 0 && detected == comparable;
  return {ok, std::to_string(cells) + " recurrence cells match the quotient; mutation detected at the same cell on " +
                  std::to_string(detected) + "/" + std::to_string(comparable) + " grid points (" +
                  std::to_string(incomparable) + " with no defined quotient cell, caught by eq7 alone)"};
}

Outcome mixed_dichotomy() {
  Reports paper, derived;
  auto collect = [&](const RingElement& s, const RingElement& t, std::size_t maxn) {
    auto p = check_mixed_recurrence(s, t, maxn, MixedVariant::PaperEq14);
    auto d = check_mixed_recurrence(s, t, maxn, MixedVariant::DerivedVr1);
    paper.insert(paper.end(), p.begin(), p.end());
    derived.insert(derived.end(), d.begin(), d.end());
  };
  for (const auto& [s, t] : integer_grid()) collect(s, t, 20);
  const auto [qs, qt] = gaussian_params();
  collect(qs, qt, 8);
  const MixedRecurrenceVerdict v = resolve_mixed_recurrence(paper, derived);
  std::ostringstream os;
  os << "eq14-paper fails " << v.paper_failures << ", eq14-derived fails " << v.derived_failures;
  if (v.clean) {
    const auto& c = *v.counterexample;
    os << "; survivor " << variant_label(*v.survivor) << "; minimal counterexample " << c.identity
       << " s=" << c.params.s << " t=" << c.params.t << " r=" << c.r << " s'=" << c.s << " lhs=" << *c.lhs
       << " rhs=" << *c.rhs;
  }
  return {v.clean, os.str()};
}

Outcome gaussian() {
  const auto [s, t] = gaussian_params();
  std::size_t bad = 0;
  for (std::size_t n = 0; n <= 12; ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      const RingElement b = u_binomial(s, t, n, k).value;
      const Polynomial poly = b.as_polynomial();
      for (const auto& c : poly.coefficients()) {
        if (c.get_den() != 1 || c < 0) ++bad;
      }
    }
  }
  const RingElement expected = parse_ring("x^4+x^3+2*x^2+x+1");
  const RingElement value = u_binomial(s, t, 4, 2).value;
  const auto via_oracle = oracle::oracle_binomial(lucas_u(s, t), 4, 2);
  const bool match = value == expected && via_oracle.reduced && *via_oracle.reduced == expected;
  return {bad == 0 && match,
          std::to_string(bad) + " bad coefficients for n <= 12; u(4,2) = " + value.to_string() +
              (match ? " (oracle agrees)" : " (oracle disagrees)")};
}

Outcome golden_triangle() {
  const std::string path = std::string(LUCASBINOM_GOLDEN_DIR) + "/fibonomial_n10.csv";
  std::ifstream in(path, std::ios::binary);
  if (!in) return {false, "cannot open " + path};
  const std::string golden((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  std::ostringstream out, err;
  const int code = cli::run({"table", "--family", "u", "--s", "1", "--t", "1", "--maxn", "10", "--format", "csv"},
                            out, err);
  const bool same = code == 0 && out.str() == golden;
  return {same, same ? std::to_string(golden.size()) + " bytes identical" : "output differs from golden file"};
}

Outcome binet() {
  std::size_t pairs = 0, mismatches = 0;
  for (int p = -3; p <= 3; ++p) {
    for (int q = -3; q <= 3; ++q) {
      if (p == 0 || q == 0 || p == q) continue;
      ++pairs;
      const RingElement s(p + q), t(-p * q);
      const SequenceHandle u = lucas_u(s, t), v = lucas_v(s, t);
      const BinetParams diff{RingElement(p), RingElement(q), kOne, RingElement(-1)};
      const BinetParams sum{RingElement(p), RingElement(q), kOne, kOne};
      for (std::size_t n = 0; n <= 50; ++n) {
        if (exact_div(binet_term(diff, n), RingElement(p - q)) != u.term(n)) ++mismatches;
        if (binet_term(sum, n) != v.term(n)) ++mismatches;
      }
    }
  }
  return {mismatches == 0, std::to_string(pairs) + " root pairs, " + std::to_string(mismatches) + " mismatches"};
}

}  // namespace

int main() {
  using Clock = std::chrono::steady_clock;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"oracle agreement on the integer grid, n <= 30", oracle_agreement},
      {"U-binomial integrality", integrality},
      {"addition formulas eq8", [] { return all_hold({check_addition_formulas}); }},
      {"doubled U-binomial recurrence eq9", [] { return all_hold({check_u_binomial_doubled}); }},
      {"decomposition/recurrence equivalence with mutation", decomposition_equivalence},
      {"eq12 and eq15", [] { return all_hold({check_v_u_identity, check_mixed_doubled}); }},
      {"eq14 experiment dichotomy", mixed_dichotomy},
      {"Gaussian specialization", gaussian},
      {"Fibonomial golden triangle", golden_triangle},
      {"Binet cross-check", binet},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << i + 1 << "] " << criteria[i].first << ": " << o.detail
              << " (" << std::fixed;
    std::cout.precision(2);
    std::cout << secs << "s)" << std::endl;
    if (!o.pass) ++failed;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed"
            << std::endl;
  return failed == 0 ? 0 : 1;
}
