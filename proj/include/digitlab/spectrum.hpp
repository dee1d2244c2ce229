#ifndef DIGITLAB_SPECTRUM_HPP
#define DIGITLAB_SPECTRUM_HPP

#include <bit>
#include <cstdint>
#include <cstring>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "digits.hpp"
#include "error.hpp"

namespace digitlab {

/// r(n) = #{(i,j): i+j = n, a_i = a_j = 1}, exact, for n = 0..n_max.
/// r(n) ≤ n+1, so machine words hold every feasible value.
struct RSequence {
  std::size_t n_max = 0;
  std::vector<std::uint64_t> values;
  unsigned long radicand = 0;        // provenance; 0 = synthetic source
  std::size_t source_frac_bits = 0;

  std::uint64_t at(std::size_t n) const {
    if (n > n_max) fail(errc::range_error, "RSequence::at: index out of range");
    return values[n];
  }
};

namespace detail {

inline void require_r_preconditions(const DigitSequence& d, std::size_t n_max, const char* op) {
  require_unit_layout(d, op);
  if (n_max > d.frac_bits())
    fail(errc::precision_exceeded,
         std::string(op) + ": n_max exceeds computed digits (r(n) needs digits up to a_n)");
}

// Copy a_0..a_n_max into a flat byte array for tight loops.
inline std::vector<std::uint8_t> digit_bytes(const DigitSequence& d, std::size_t n_max) {
  std::vector<std::uint8_t> a(n_max + 1);
  for (std::size_t i = 0; i <= n_max; ++i) a[i] = static_cast<std::uint8_t>(d.bit(i));
  return a;
}

inline std::uint64_t read_le64(const std::uint8_t* p) {
  if constexpr (std::endian::native == std::endian::little) {
    std::uint64_t v;
    std::memcpy(&v, p, 8);
    return v;
  } else {
    std::uint64_t v = 0;
    for (int i = 7; i >= 0; --i) v = (v << 8) | p[i];
    return v;
  }
}

} // namespace detail

/// Direct ordered-pair count. Quadratic; kept as the independent reference
/// implementation for the packed path.
inline RSequence r_naive(const DigitSequence& d, std::size_t n_max) {
  detail::require_r_preconditions(d, n_max, "r_naive");
  const auto a = detail::digit_bytes(d, n_max);
  RSequence r;
  r.n_max = n_max;
  r.radicand = d.radicand();
  r.source_frac_bits = d.frac_bits();
  r.values.resize(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    std::uint64_t count = 0;
    for (std::size_t i = 0; i <= n; ++i) count += static_cast<std::uint64_t>(a[i] & a[n - i]);
    r.values[n] = count;
  }
  return r;
}

/// Field width for the packed square: w = ⌈log₂(n_max+2)⌉, the smallest w with
/// 2^w > n_max+1 ≥ max coefficient, so fields never carry into each other.
inline std::size_t packed_field_width(std::size_t n_max) {
  return static_cast<std::size_t>(std::bit_width(n_max + 1));
}

/// Kronecker substitution: pack digit a_i into a w-bit field at offset w·i,
/// square the resulting integer once, and read r(n) out of field n.
/// Exactly equal to r_naive on every input.
inline RSequence r_fast(const DigitSequence& d, std::size_t n_max) {
  detail::require_r_preconditions(d, n_max, "r_fast");
  const std::size_t w = packed_field_width(n_max);
  if (w > 57) fail(errc::precondition_violation, "r_fast: n_max too large for field extraction");

  std::vector<std::uint8_t> packed((w * n_max + 1 + 7) / 8, 0);
  for (std::size_t i = 0; i <= n_max; ++i)
    if (d.bit(i)) packed[(w * i) >> 3] |= static_cast<std::uint8_t>(1u << ((w * i) & 7));

  mpz_class value;
  mpz_import(value.get_mpz_t(), packed.size(), -1, 1, 0, 0, packed.data());
  mpz_class square;
  mpz_mul(square.get_mpz_t(), value.get_mpz_t(), value.get_mpz_t());

  std::vector<std::uint8_t> sq((mpz_sizeinbase(square.get_mpz_t(), 2) + 7) / 8 + 8, 0);
  std::size_t written = 0;
  mpz_export(sq.data(), &written, -1, 1, 0, 0, square.get_mpz_t());

  RSequence r;
  r.n_max = n_max;
  r.radicand = d.radicand();
  r.source_frac_bits = d.frac_bits();
  r.values.resize(n_max + 1);
  const std::uint64_t mask = (std::uint64_t(1) << w) - 1;
  for (std::size_t n = 0; n <= n_max; ++n) {
    const std::size_t bitpos = w * n;
    r.values[n] = (detail::read_le64(sq.data() + (bitpos >> 3)) >> (bitpos & 7)) & mask;
  }
  return r;
}

inline constexpr std::size_t kPackedDefaultThreshold = 4096;

/// Default dispatch: the packed path above kPackedDefaultThreshold, the direct
/// count below it. force_fast overrides.
inline RSequence r_sequence(const DigitSequence& d, std::size_t n_max,
                            std::optional<bool> force_fast = std::nullopt) {
  const bool fast = force_fast.value_or(n_max > kPackedDefaultThreshold);
  return fast ? r_fast(d, n_max) : r_naive(d, n_max);
}

/// Σ_{n=a}^{b} r(n), exact.
inline std::uint64_t sum_r(const RSequence& r, std::size_t a, std::size_t b) {
  if (a > b || b > r.n_max) fail(errc::range_error, "sum_r: need 0 <= a <= b <= n_max");
  std::uint64_t s = 0;
  for (std::size_t n = a; n <= b; ++n) {
    if (__builtin_add_overflow(s, r.values[n], &s))
      fail(errc::precondition_violation, "sum_r: overflow");
  }
  return s;
}

} // namespace digitlab

#endif // DIGITLAB_SPECTRUM_HPP
