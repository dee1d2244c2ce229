#ifndef DIGITLAB_DIGITS_HPP
#define DIGITLAB_DIGITS_HPP

#include <bit>
#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "error.hpp"

namespace digitlab {

static_assert(sizeof(unsigned long) >= 8, "64-bit unsigned long expected for GMP ui interfaces");

/// ⌊√v⌋ for machine words, overflow-free.
inline std::uint64_t isqrt_u64(std::uint64_t v) {
  if (v == 0) return 0;
  auto x = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(v)));
  if (x == 0) x = 1;
  while (x > v / x) --x;            // x² > v  ⇔  x > v/x
  while (x + 1 <= v / (x + 1)) ++x; // (x+1)² ≤ v
  return x;
}

/// ⌊√n⌋ by Newton's integer iteration with doubling working precision:
/// recurse on the top half of the bits, lift with one full-precision step,
/// then correct the O(1) residual error exactly.
inline mpz_class isqrt(const mpz_class& n) {
  if (sgn(n) < 0) fail(errc::precondition_violation, "isqrt: negative input");
  if (sgn(n) == 0) return mpz_class(0);
  const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  if (bits <= 62) return mpz_class(isqrt_u64(n.get_ui()));
  const std::size_t s = bits / 4;
  // q = ⌊√(n >> 2s)⌋, so q·2^s ≤ √n < (q+1)·2^s: a seed accurate to s bits.
  mpz_class x = isqrt(mpz_class(n >> (2 * s))) << s;
  x += n / x;
  x >>= 1; // Newton step squares the relative error; with s ≈ bits/4 the result is within O(1).
  while (x * x > n) --x;
  while ((x + 1) * (x + 1) <= n) ++x;
  return x;
}

/// Exact binary digits of √d, most significant first. Digit a_i weighs 2^(−i);
/// the stream holds a_{1−ℓ} … a_N where ℓ = int_bits, N = frac_bits.
/// For radicand-derived sequences the underlying integer D (the bits read as one
/// number) satisfies D² ≤ d·4^N < (D+1)²: truncation, never rounding up.
class DigitSequence {
public:
  DigitSequence(unsigned long radicand, std::size_t int_bits, std::size_t frac_bits)
      : radicand_(radicand), int_bits_(int_bits), frac_bits_(frac_bits),
        words_((int_bits + frac_bits + 63) / 64, 0) {
    if (int_bits == 0) fail(errc::precondition_violation, "DigitSequence: int_bits must be >= 1");
  }

  /// Synthetic sequence from a 0/1 string (stream order, most significant first).
  /// radicand 0 marks it as not derived from any √d.
  static DigitSequence from_bits(std::string_view bits, std::size_t int_bits,
                                 unsigned long radicand = 0) {
    if (int_bits == 0 || int_bits > bits.size())
      fail(errc::precondition_violation, "from_bits: need 1 <= int_bits <= bits.size()");
    DigitSequence seq(radicand, int_bits, bits.size() - int_bits);
    for (std::size_t p = 0; p < bits.size(); ++p) {
      if (bits[p] == '1')
        seq.set_bit(p);
      else if (bits[p] != '0')
        fail(errc::precondition_violation, "from_bits: digits must be 0 or 1");
    }
    return seq;
  }

  unsigned long radicand() const noexcept { return radicand_; }
  std::size_t int_bits() const noexcept { return int_bits_; }
  std::size_t frac_bits() const noexcept { return frac_bits_; }
  std::size_t size() const noexcept { return int_bits_ + frac_bits_; }

  /// Raw stream access; position 0 is the most significant digit.
  bool bit(std::size_t pos) const {
    if (pos >= size()) fail(errc::range_error, "DigitSequence::bit: position out of range");
    return (words_[pos >> 6] >> (pos & 63)) & 1u;
  }

  void set_bit(std::size_t pos) {
    if (pos >= size()) fail(errc::range_error, "DigitSequence::set_bit: position out of range");
    words_[pos >> 6] |= std::uint64_t(1) << (pos & 63);
  }

  /// a_i, the digit of weight 2^(−i). Valid for 1−ℓ ≤ i ≤ N.
  int digit(long long i) const {
    const long long pos = i + static_cast<long long>(int_bits_) - 1;
    if (pos < 0 || pos >= static_cast<long long>(size()))
      fail(errc::precision_exceeded, "DigitSequence::digit: index " + std::to_string(i) +
                                         " outside computed range");
    return (words_[static_cast<std::size_t>(pos) >> 6] >> (pos & 63)) & 1u;
  }

  /// Popcount over stream positions [p0, p1], inclusive.
  /// parity = 0 counts only even positions, 1 only odd, -1 all.
  std::size_t ones_in_positions(std::size_t p0, std::size_t p1, int parity = -1) const {
    if (p0 > p1 || p1 >= size()) fail(errc::range_error, "ones_in_positions: bad range");
    constexpr std::uint64_t even_mask = 0x5555555555555555ull;
    const std::size_t w0 = p0 >> 6, w1 = p1 >> 6;
    std::size_t count = 0;
    for (std::size_t w = w0; w <= w1; ++w) {
      std::uint64_t v = words_[w];
      if (w == w0 && (p0 & 63)) v &= ~std::uint64_t(0) << (p0 & 63);
      if (w == w1) {
        const unsigned hi = p1 & 63;
        if (hi != 63) v &= (std::uint64_t(1) << (hi + 1)) - 1;
      }
      if (parity == 0)
        v &= even_mask; // word boundaries are multiples of 64, so bit parity == position parity
      else if (parity == 1)
        v &= ~even_mask;
      count += static_cast<std::size_t>(std::popcount(v));
    }
    return count;
  }

  /// The stream truncated to M fractional digits (same integer part).
  DigitSequence prefix(std::size_t frac) const {
    if (frac > frac_bits_) fail(errc::precision_exceeded, "prefix: not enough digits");
    DigitSequence out(radicand_, int_bits_, frac);
    const std::size_t nwords = out.words_.size();
    for (std::size_t w = 0; w < nwords; ++w) out.words_[w] = words_[w];
    const unsigned tail = out.size() & 63;
    if (tail) out.words_.back() &= (std::uint64_t(1) << tail) - 1;
    return out;
  }

  /// The bits read as one integer (D in the defining inequality).
  mpz_class as_integer() const {
    mpz_class v;
    mpz_realloc2(v.get_mpz_t(), size() + 64);
    const std::size_t total = size();
    for (std::size_t p = 0; p < total; ++p)
      if ((words_[p >> 6] >> (p & 63)) & 1u)
        mpz_setbit(v.get_mpz_t(), static_cast<mp_bitcnt_t>(total - 1 - p));
    return v;
  }

  std::string frac_string() const {
    std::string s(frac_bits_, '0');
    for (std::size_t j = 0; j < frac_bits_; ++j)
      if (bit(int_bits_ + j)) s[j] = '1';
    return s;
  }

  std::string to_string() const {
    std::string s;
    s.reserve(size() + 1);
    for (std::size_t p = 0; p < int_bits_; ++p) s += bit(p) ? '1' : '0';
    s += '.';
    s += frac_string();
    return s;
  }

  bool operator==(const DigitSequence& o) const {
    return radicand_ == o.radicand_ && int_bits_ == o.int_bits_ && frac_bits_ == o.frac_bits_ &&
           words_ == o.words_;
  }

private:
  unsigned long radicand_;
  std::size_t int_bits_;
  std::size_t frac_bits_;
  std::vector<std::uint64_t> words_; // stream position p lives at words_[p/64] bit (p%64)
};

/// Digits of √d to N fractional places via D = ⌊√(d·4^N)⌋.
/// Prefix-stable: the first M fractional digits do not depend on N ≥ M.
inline DigitSequence expand_sqrt(unsigned long d, std::size_t frac_bits) {
  if (d < 1) fail(errc::precondition_violation, "expand_sqrt: radicand must be >= 1");
  mpz_class scaled = mpz_class(d) << (2 * frac_bits);
  const mpz_class root = isqrt(scaled);
  const std::size_t total = mpz_sizeinbase(root.get_mpz_t(), 2); // = ℓ + N since 2^(ℓ−1) ≤ D·2^(−N) < 2^ℓ
  const std::size_t int_bits = total - frac_bits;
  DigitSequence seq(d, int_bits, frac_bits);
  for (std::size_t p = 0; p < total; ++p)
    if (mpz_tstbit(root.get_mpz_t(), static_cast<mp_bitcnt_t>(total - 1 - p))) seq.set_bit(p);
  return seq;
}

namespace detail {
inline void require_unit_layout(const DigitSequence& d, const char* op) {
  if (d.int_bits() != 1)
    fail(errc::layout_unsupported, std::string(op) + ": defined only for one integer digit");
}
} // namespace detail

/// Count of ones among the fractional digits a_1..a_N.
inline std::size_t nz(const DigitSequence& d, std::size_t n) {
  detail::require_unit_layout(d, "nz");
  if (n > d.frac_bits()) fail(errc::precision_exceeded, "nz: N exceeds computed digits");
  if (n == 0) return 0;
  return d.ones_in_positions(1, n);
}

/// Count of ones among a_0..a_N (the pair-set form that includes the integer digit).
inline std::size_t nz_star(const DigitSequence& d, std::size_t n) {
  detail::require_unit_layout(d, "nz_star");
  if (n > d.frac_bits()) fail(errc::precision_exceeded, "nz_star: N exceeds computed digits");
  return d.ones_in_positions(0, n);
}

} // namespace digitlab

#endif // DIGITLAB_DIGITS_HPP
