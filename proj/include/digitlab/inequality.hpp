#ifndef DIGITLAB_INEQUALITY_HPP
#define DIGITLAB_INEQUALITY_HPP

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "constants.hpp"
#include "digits.hpp"
#include "error.hpp"
#include "report.hpp"
#include "spectrum.hpp"
#include "tailfn.hpp"

namespace digitlab {

// Every asymptotic error term is replaced by the explicit finite quantity the
// derivation actually produces: the odd-r correction becomes an exact count,
// the truncation tail becomes (N+3)/2^K with K = ⌊log₂N⌋. Comparisons are in
// exact rational arithmetic; decimals are display only.

inline long long floor_log2(unsigned long long n) {
  if (n == 0) fail(errc::range_error, "floor_log2: zero");
  return static_cast<long long>(std::bit_width(n)) - 1;
}

/// #{R ∈ [1,N] : r(R) odd} counted from the r values themselves.
inline std::uint64_t odd_r_count(const RSequence& r, std::size_t N) {
  if (N > r.n_max) fail(errc::range_error, "odd_r_count: N out of range");
  std::uint64_t c = 0;
  for (std::size_t R = 1; R <= N; ++R) c += r.values[R] & 1u;
  return c;
}

/// The same exceptional count from the digits: #{even R ∈ [1,N] : a_{R/2} = 1}
/// = nz(⌊N/2⌋). The two routes agree by the parity law of r.
inline std::uint64_t parity_exception_count(const DigitSequence& d, std::size_t N) {
  return nz(d, N / 2);
}

/// T(R−1) ≥ r(R)/2 + 1 when r(R) is even, r(R)/2 + 1/2 when odd.
inline BoundReport check_pointwise_lower(const TSequence& t, const RSequence& r, std::size_t R) {
  if (R < 1 || R > t.R_max + 1 || R > r.n_max)
    fail(errc::range_error, "check_pointwise_lower: need 1 <= R <= min(R_max+1, n_max)");
  const std::uint64_t rv = r.values[R];
  mpq_class rhs = make_rational(mpz_class(rv) + ((rv % 2 == 0) ? 2 : 1), 2);
  mpq_class lhs(t.values[R - 1]);
  return make_report("pointwise_lower", R, -1, BoundSense::lower, std::move(lhs), std::move(rhs));
}

/// Σ_{R=0}^{N−1} T(R) ≥ (1/2)Σ_{R=1}^{N} r(R) + N − (1/2)·#{odd r(R), R ≤ N}.
/// The exceptional count is exact: each odd-r term of the pointwise bound
/// contributes 1/2 instead of 1.
inline BoundReport check_basic_lower_sum(const TSequence& t, const RSequence& r, std::size_t N) {
  if (N < 1 || N - 1 > t.R_max || N > r.n_max)
    fail(errc::range_error, "check_basic_lower_sum: N out of range");
  mpq_class lhs(sum_t(t, 0, N - 1));
  mpz_class rhs_num = mpz_class(sum_r(r, 1, N)) + 2 * mpz_class(N) - mpz_class(odd_r_count(r, N));
  mpq_class rhs = make_rational(rhs_num, 2);
  return make_report("basic_lower_sum", N, -1, BoundSense::lower, std::move(lhs), std::move(rhs));
}

/// Σ_{R=0}^{N−K} T(R) ≤ Σ_{R=1}^{N} r(R) + (N+3)/2^K with K = ⌊log₂N⌋.
/// The tail term is exact: it bounds Σ_{R>N} r(R)/2^{R−N+K} via r(n) ≤ n+1.
inline BoundReport check_first_upper(const TSequence& t, const RSequence& r, std::size_t N) {
  if (N < 2) fail(errc::range_error, "check_first_upper: need N >= 2");
  const long long K = floor_log2(N);
  if (N - K > t.R_max || N > r.n_max)
    fail(errc::range_error, "check_first_upper: N out of range");
  mpq_class lhs(sum_t(t, 0, N - static_cast<std::size_t>(K)));
  mpz_class pow2k = mpz_class(1) << static_cast<unsigned>(K);
  mpq_class rhs = mpq_class(sum_r(r, 1, N)) + make_rational(mpz_class(N) + 3, pow2k);
  return make_report("first_upper", N, K, BoundSense::upper, std::move(lhs), std::move(rhs));
}

/// Σ_{R=1}^{N} r(R) ≤ nz_star(N)²: pairs with 1 ≤ i+j ≤ N are a subset of
/// pairs with i,j ≤ N.
inline BoundReport check_basic_upper(const RSequence& r, const DigitSequence& d, std::size_t N) {
  if (N > r.n_max) fail(errc::range_error, "check_basic_upper: N out of range");
  mpq_class lhs((N >= 1) ? mpz_class(sum_r(r, 1, N)) : mpz_class(0));
  mpz_class stars(static_cast<unsigned long>(nz_star(d, N)));
  mpq_class rhs(stars * stars);
  return make_report("basic_upper", N, -1, BoundSense::upper, std::move(lhs), std::move(rhs));
}

/// Σ_{R=1}^{N} T(R) ≥ 2N − #{even R ∈ [1,N] : a_{R/2}=1}: T(R) ≥ 2 except at
/// the indices where r(R) can be odd, and those still give T(R) ≥ 1.
inline BoundReport check_refined_lower(const TSequence& t, const DigitSequence& d, std::size_t N) {
  if (N < 1 || N > t.R_max) fail(errc::range_error, "check_refined_lower: N out of range");
  mpq_class lhs(sum_t(t, 1, N));
  mpq_class rhs(2 * mpz_class(N) - mpz_class(parity_exception_count(d, N)));
  return make_report("refined_lower", N, -1, BoundSense::lower, std::move(lhs), std::move(rhs));
}

/// Breakpoints 0 = b_0 < b_1 < … < b_m = N partition the index range into
/// I_1 = [0, b_1] and I_k = (b_{k−1}, b_k] for k ≥ 2.
struct IntervalPartition {
  std::size_t n = 0;
  std::vector<std::size_t> breakpoints;

  std::size_t intervals() const { return breakpoints.size() - 1; }
};

inline IntervalPartition make_partition(std::vector<std::size_t> breakpoints) {
  if (breakpoints.size() < 2) fail(errc::invalid_partition, "partition: need at least two breakpoints");
  if (breakpoints.front() != 0) fail(errc::invalid_partition, "partition: must start at 0");
  for (std::size_t i = 1; i < breakpoints.size(); ++i)
    if (breakpoints[i] <= breakpoints[i - 1])
      fail(errc::invalid_partition, "partition: breakpoints must be strictly increasing");
  IntervalPartition p;
  p.n = breakpoints.back();
  p.breakpoints = std::move(breakpoints);
  return p;
}

inline IntervalPartition uniform_partition(std::size_t N, std::size_t m) {
  if (m < 1 || m > N) fail(errc::invalid_partition, "uniform_partition: need 1 <= m <= N");
  std::vector<std::size_t> bps(m + 1);
  for (std::size_t k = 0; k <= m; ++k) bps[k] = (k * N) / m;
  return make_partition(std::move(bps));
}

/// Interval-pair upper bound on Σ_{R=1}^{N} r(R): with c_k = #{i ∈ I_k: a_i=1},
/// sum c_k·c_l over ordered interval pairs whose minimal achievable index sum
/// is below N (inclusion test b_{k−1} + b_{l−1} < N). Sound for every
/// partition; m = 1 reduces to the nz_star(N)² bound and {0, N/2, N} to the
/// two-interval refinement.
inline BoundReport interval_upper_bound(const DigitSequence& d, const RSequence& r,
                                        const IntervalPartition& p) {
  detail::require_unit_layout(d, "interval_upper_bound");
  const std::size_t N = p.n;
  if (N > d.frac_bits() || N > r.n_max)
    fail(errc::range_error, "interval_upper_bound: partition exceeds available range");
  const std::size_t m = p.intervals();
  std::vector<std::uint64_t> ones(m + 1, 0);
  for (std::size_t k = 1; k <= m; ++k) {
    const std::size_t lo = (k == 1) ? 0 : p.breakpoints[k - 1] + 1;
    ones[k] = d.ones_in_positions(lo, p.breakpoints[k]);
  }
  mpz_class rhs_total = 0;
  for (std::size_t k = 1; k <= m; ++k)
    for (std::size_t l = 1; l <= m; ++l)
      if (p.breakpoints[k - 1] + p.breakpoints[l - 1] < N)
        rhs_total += mpz_class(ones[k]) * mpz_class(ones[l]);
  mpq_class lhs(mpz_class(sum_r(r, 1, N)));
  return make_report("interval_upper", N, static_cast<long long>(m), BoundSense::upper,
                     std::move(lhs), mpq_class(rhs_total));
}

/// Worst pointwise-lower instance over R ∈ [1, R_hi]: the single report with
/// the smallest margin (ties to the smallest R).
inline BoundReport min_margin_pointwise(const TSequence& t, const RSequence& r, std::size_t R_hi) {
  if (R_hi < 1) fail(errc::range_error, "min_margin_pointwise: empty range");
  BoundReport best = check_pointwise_lower(t, r, 1);
  for (std::size_t R = 2; R <= R_hi; ++R) {
    BoundReport cur = check_pointwise_lower(t, r, R);
    if (cur.margin < best.margin) best = std::move(cur);
  }
  best.name = "pointwise_lower";
  best.k = static_cast<long long>(best.n); // witness R
  best.n = R_hi;
  return best;
}

/// One row per bound family at size N (the `bounds` report): pointwise
/// (min-margin witness), the two lower sums, the two upper sums, and the
/// interval bound for each m in m_list with m ≤ N.
inline std::vector<BoundReport> bounds_suite(const DigitSequence& d, const RSequence& r,
                                             const TSequence& t, std::size_t N,
                                             const std::vector<std::size_t>& m_list = {1, 2, 4, 8,
                                                                                       16}) {
  std::vector<BoundReport> out;
  out.push_back(min_margin_pointwise(t, r, N));
  out.push_back(check_basic_lower_sum(t, r, N));
  if (N >= 2) out.push_back(check_first_upper(t, r, N));
  out.push_back(check_basic_upper(r, d, N));
  out.push_back(check_refined_lower(t, d, N));
  for (std::size_t m : m_list)
    if (m <= N) out.push_back(interval_upper_bound(d, r, uniform_partition(N, m)));
  return out;
}

/// Empirical digit-density table: exact nz values, ratios for display.
struct RatioRow {
  std::size_t n = 0;
  std::size_t nz_count = 0;
  std::string ratio;     // nz/√N
  std::string c1_sqrt_n; // √2·√N
  std::string c2_sqrt_n; // 2/√(2√2−1)·√N
  double ratio_d = 0;
};

inline std::vector<RatioRow> nz_ratio_scan(const DigitSequence& d,
                                           const std::vector<std::size_t>& ns,
                                           int decimals = 10) {
  std::vector<RatioRow> rows;
  rows.reserve(ns.size());
  const mpfr_prec_t prec = 256;
  const Real c1 = growth_constant_c1(prec), c2 = growth_constant_c2(prec);
  for (std::size_t N : ns) {
    if (N > d.frac_bits()) fail(errc::precision_exceeded, "nz_ratio_scan: N exceeds digits");
    if (N == 0) fail(errc::range_error, "nz_ratio_scan: N must be positive");
    RatioRow row;
    row.n = N;
    row.nz_count = nz(d, N);
    const Real sqrt_n = Real(static_cast<unsigned long>(N), prec).sqrt();
    const Real ratio = Real(static_cast<unsigned long>(row.nz_count), prec) / sqrt_n;
    row.ratio = ratio.to_decimal(decimals);
    row.ratio_d = ratio.to_double();
    row.c1_sqrt_n = (c1 * sqrt_n).to_decimal(decimals);
    row.c2_sqrt_n = (c2 * sqrt_n).to_decimal(decimals);
    rows.push_back(std::move(row));
  }
  return rows;
}

} // namespace digitlab

#endif // DIGITLAB_INEQUALITY_HPP
