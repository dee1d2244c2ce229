#ifndef DIGITLAB_FORCING_HPP
#define DIGITLAB_FORCING_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "digits.hpp"
#include "error.hpp"
#include "report.hpp"
#include "spectrum.hpp"
#include "tailfn.hpp"

namespace digitlab {

/// Occurrences of a short 0/1 pattern in the fractional digits a_1..a_N
/// (starting positions; overlaps all reported).
struct PatternHits {
  std::string pattern;
  std::vector<std::size_t> positions;
};

inline PatternHits find_pattern(const DigitSequence& d, std::string_view pattern, std::size_t N) {
  if (pattern.empty()) fail(errc::empty_pattern, "find_pattern: empty pattern");
  for (char c : pattern)
    if (c != '0' && c != '1') fail(errc::precondition_violation, "find_pattern: pattern must be 0/1");
  if (N + pattern.size() > d.frac_bits())
    fail(errc::precision_exceeded, "find_pattern: need N + |pattern| fractional digits");
  PatternHits hits;
  hits.pattern = std::string(pattern);
  const std::size_t len = pattern.size();
  for (std::size_t n = 1; n <= N; ++n) {
    bool match = true;
    for (std::size_t j = 0; j < len && match; ++j)
      match = d.digit(static_cast<long long>(n + j)) == (pattern[j] - '0');
    if (match) hits.positions.push_back(n);
  }
  return hits;
}

/// Forced-digit comparison between √2 and 3√2 = √18: wherever 0100 starts at
/// fractional position n of √2, the √18 digits at weights 2^(−n) and 2^(−n−1)
/// should both be 1. Treated as a falsifiable hypothesis: every occurrence is
/// checked and violations are collected, not assumed away.
struct ForcingReport {
  std::string pattern;
  std::size_t n = 0; // scanned range
  std::vector<std::size_t> occurrences;
  struct Violation {
    std::size_t position;
    int b0, b1; // the two √18 digits seen there
  };
  std::vector<Violation> violations;
};

inline ForcingReport check_forcing(const DigitSequence& sqrt2, const DigitSequence& sqrt18,
                                   std::size_t N) {
  if (sqrt2.radicand() != 2 || sqrt18.radicand() != 18)
    fail(errc::radicand_mismatch, "check_forcing: expects the expansions of sqrt(2) and sqrt(18)");
  if (N + 4 > sqrt2.frac_bits() || N + 1 > sqrt18.frac_bits())
    fail(errc::precision_exceeded, "check_forcing: need N+4 digits of sqrt(2) and N+1 of sqrt(18)");
  ForcingReport rep;
  rep.pattern = "0100";
  rep.n = N;
  rep.occurrences = find_pattern(sqrt2, rep.pattern, N).positions;
  for (std::size_t pos : rep.occurrences) {
    const int b0 = sqrt18.digit(static_cast<long long>(pos));
    const int b1 = sqrt18.digit(static_cast<long long>(pos) + 1);
    if (b0 != 1 || b1 != 1) rep.violations.push_back({pos, b0, b1});
  }
  return rep;
}

/// Sanity layer for the two independent expansions: with equal fractional
/// length N, 0 ≤ 3·⌊√2·2^N⌋ − ⌊√18·2^N⌋ ≤ 2 because 3√2 = √18 exactly.
inline mpz_class triple_consistency_gap(const DigitSequence& sqrt2, const DigitSequence& sqrt18) {
  if (sqrt2.radicand() != 2 || sqrt18.radicand() != 18)
    fail(errc::radicand_mismatch, "triple_consistency_gap: expects sqrt(2) and sqrt(18)");
  if (sqrt2.frac_bits() != sqrt18.frac_bits())
    fail(errc::precondition_violation, "triple_consistency_gap: fractional lengths must match");
  return 3 * sqrt2.as_integer() - sqrt18.as_integer();
}

/// If a_n = a_{n+k} = a_m = a_{m+k} = 1 with n ≠ m and k ≥ 1, the pairs
/// (n,m+k),(m+k,n),(n+k,m),(m,n+k) all hit the sum n+m+k, so r(n+m+k) ≥ 4 and
/// T(n+m+k−1) ≥ 3. The witness pairs are recounted explicitly (they collapse
/// to 3 when |n−m| = k), independently of the convolution value; the report's
/// margin tracks whichever of the two claims is tighter.
inline BoundReport check_pair_bound(const DigitSequence& d, const RSequence& r, const TSequence& t,
                                    std::size_t n, std::size_t m, std::size_t k) {
  if (n == m) fail(errc::precondition_violation, "check_pair_bound: need n != m");
  if (k < 1) fail(errc::precondition_violation, "check_pair_bound: need k >= 1");
  const std::size_t sum = n + m + k;
  if (sum > r.n_max || sum - 1 > t.R_max)
    fail(errc::range_error, "check_pair_bound: n+m+k exceeds computed range");
  if (!(d.digit(static_cast<long long>(n)) && d.digit(static_cast<long long>(n + k)) &&
        d.digit(static_cast<long long>(m)) && d.digit(static_cast<long long>(m + k))))
    fail(errc::precondition_violation, "check_pair_bound: the four digits must all be 1");

  // Recount the witness pairs from the digits alone.
  std::vector<std::array<std::size_t, 2>> witnesses{{n, m + k}, {m + k, n}, {n + k, m}, {m, n + k}};
  std::sort(witnesses.begin(), witnesses.end());
  witnesses.erase(std::unique(witnesses.begin(), witnesses.end()), witnesses.end());
  std::size_t confirmed = 0;
  for (const auto& wpair : witnesses)
    if (d.digit(static_cast<long long>(wpair[0])) && d.digit(static_cast<long long>(wpair[1])))
      ++confirmed;

  const std::uint64_t rv = r.values[sum];
  const mpz_class& tv = t.values[sum - 1];
  const mpq_class margin_r = mpq_class(rv) - 4;
  const mpq_class margin_t = mpq_class(tv) - 3;
  // The report carries whichever claim is tighter; its margin is then
  // min(margin_r, margin_t), so pass covers both inequalities.
  const bool r_binding = margin_r <= margin_t;
  return make_report(
      "pair_bound", sum, static_cast<long long>(k), BoundSense::lower,
      r_binding ? mpq_class(rv) : mpq_class(tv), r_binding ? mpq_class(4) : mpq_class(3),
      "n=" + std::to_string(n) + " m=" + std::to_string(m) + " k=" + std::to_string(k) +
          " witnesses=" + std::to_string(confirmed));
}

/// Exhaustive pair-bound scan over all positions with a_n = a_{n+k} = 1,
/// n, m ≤ idx_max, n ≠ m. Index pairs are checked with the same exact integer
/// comparisons as check_pair_bound; failures come back as (n, m) pairs.
struct PairBoundScan {
  std::size_t checked = 0;
  std::vector<std::array<std::size_t, 2>> failures;
};

inline PairBoundScan scan_pair_bounds(const DigitSequence& d, const RSequence& r,
                                      const TSequence& t, std::size_t k, std::size_t idx_max) {
  if (k < 1) fail(errc::precondition_violation, "scan_pair_bounds: need k >= 1");
  if (2 * idx_max + k > r.n_max || 2 * idx_max + k - 1 > t.R_max)
    fail(errc::range_error, "scan_pair_bounds: need r and T up to 2*idx_max+k");
  std::vector<std::size_t> anchors;
  for (std::size_t i = 0; i <= idx_max; ++i)
    if (d.digit(static_cast<long long>(i)) && d.digit(static_cast<long long>(i + k))) anchors.push_back(i);
  PairBoundScan scan;
  const mpz_class three(3);
  for (std::size_t x = 0; x < anchors.size(); ++x) {
    for (std::size_t y = x + 1; y < anchors.size(); ++y) {
      const std::size_t n = anchors[x], m = anchors[y];
      const std::size_t sum = n + m + k;
      ++scan.checked;
      if (r.values[sum] < 4 || t.values[sum - 1] < three) scan.failures.push_back({n, m});
    }
  }
  return scan;
}

} // namespace digitlab

#endif // DIGITLAB_FORCING_HPP
