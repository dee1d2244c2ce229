#ifndef DIGITLAB_CACHE_HPP
#define DIGITLAB_CACHE_HPP

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <unistd.h>

#include "digits.hpp"
#include "error.hpp"

namespace digitlab {

// Digit cache file, bit-exact:
//   bytes 0..3   magic "SQDG"
//   byte  4      version 0x01
//   bytes 5..12  radicand, 8-byte little-endian unsigned
//   byte  13     ℓ (integer digit count)
//   bytes 14..21 N (fractional digit count), 8-byte little-endian unsigned
//   bytes 22..   the ℓ+N digits packed most-significant-bit-first, last byte zero-padded
inline constexpr std::size_t kCacheHeaderBytes = 22;
inline constexpr std::uint8_t kCacheVersion = 0x01;

inline std::vector<std::uint8_t> encode_digit_cache(const DigitSequence& d) {
  const std::size_t nbits = d.size();
  std::vector<std::uint8_t> out(kCacheHeaderBytes + (nbits + 7) / 8, 0);
  out[0] = 'S';
  out[1] = 'Q';
  out[2] = 'D';
  out[3] = 'G';
  out[4] = kCacheVersion;
  const std::uint64_t rad = d.radicand();
  for (int i = 0; i < 8; ++i) out[5 + i] = static_cast<std::uint8_t>(rad >> (8 * i));
  out[13] = static_cast<std::uint8_t>(d.int_bits());
  const std::uint64_t n = d.frac_bits();
  for (int i = 0; i < 8; ++i) out[14 + i] = static_cast<std::uint8_t>(n >> (8 * i));
  for (std::size_t p = 0; p < nbits; ++p)
    if (d.bit(p)) out[kCacheHeaderBytes + (p >> 3)] |= static_cast<std::uint8_t>(0x80u >> (p & 7));
  return out;
}

inline DigitSequence decode_digit_cache(const std::vector<std::uint8_t>& buf) {
  if (buf.size() < kCacheHeaderBytes) fail(errc::cache_format, "digit cache: truncated header");
  if (buf[0] != 'S' || buf[1] != 'Q' || buf[2] != 'D' || buf[3] != 'G')
    fail(errc::cache_format, "digit cache: bad magic");
  if (buf[4] != kCacheVersion) fail(errc::cache_format, "digit cache: unsupported version");
  std::uint64_t rad = 0, frac = 0;
  for (int i = 7; i >= 0; --i) rad = (rad << 8) | buf[5 + i];
  for (int i = 7; i >= 0; --i) frac = (frac << 8) | buf[14 + i];
  const std::size_t int_bits = buf[13];
  if (int_bits == 0) fail(errc::cache_format, "digit cache: zero integer digits");
  const std::size_t nbits = int_bits + static_cast<std::size_t>(frac);
  if (buf.size() != kCacheHeaderBytes + (nbits + 7) / 8)
    fail(errc::cache_format, "digit cache: size does not match header");
  DigitSequence seq(static_cast<unsigned long>(rad), int_bits, static_cast<std::size_t>(frac));
  for (std::size_t p = 0; p < nbits; ++p)
    if (buf[kCacheHeaderBytes + (p >> 3)] & (0x80u >> (p & 7))) seq.set_bit(p);
  return seq;
}

inline std::filesystem::path cache_file_path(const std::filesystem::path& dir,
                                             unsigned long radicand) {
  return dir / ("sqrt_" + std::to_string(radicand) + ".sqdg");
}

/// Atomic write: temp file in the same directory, then rename, so concurrent
/// readers never observe partial data.
inline void write_digit_cache(const std::filesystem::path& file, const DigitSequence& d) {
  const auto bytes = encode_digit_cache(d);
  std::filesystem::path tmp = file;
  tmp += ".tmp" + std::to_string(static_cast<unsigned long>(::getpid()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) fail(errc::cache_format, "digit cache: cannot open " + tmp.string() + " for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) fail(errc::cache_format, "digit cache: short write to " + tmp.string());
  }
  std::filesystem::rename(tmp, file);
}

inline DigitSequence read_digit_cache(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) fail(errc::cache_format, "digit cache: cannot open " + file.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  return decode_digit_cache(bytes);
}

/// Cached digit lookup. Returns exactly frac_bits fractional digits, truncating a
/// longer cached expansion (prefix stability makes that exact) or recomputing and
/// overwriting when the cache is absent or too short. allow_compute=false turns the
/// recompute path into a precision error.
inline DigitSequence load_or_expand(unsigned long d, std::size_t frac_bits,
                                    const std::optional<std::filesystem::path>& cache_dir,
                                    bool allow_compute = true) {
  if (!cache_dir) {
    if (!allow_compute) fail(errc::precision_exceeded, "no cache directory and computing disabled");
    return expand_sqrt(d, frac_bits);
  }
  const auto file = cache_file_path(*cache_dir, d);
  if (std::filesystem::exists(file)) {
    DigitSequence cached = read_digit_cache(file);
    if (cached.radicand() != d) fail(errc::radicand_mismatch, "digit cache: wrong radicand in " + file.string());
    if (cached.frac_bits() >= frac_bits) return cached.prefix(frac_bits);
  }
  if (!allow_compute)
    fail(errc::precision_exceeded, "cached digits for sqrt(" + std::to_string(d) +
                                       ") are shorter than requested and computing is disabled");
  DigitSequence fresh = expand_sqrt(d, frac_bits);
  std::filesystem::create_directories(*cache_dir);
  write_digit_cache(file, fresh);
  return fresh;
}

} // namespace digitlab

#endif // DIGITLAB_CACHE_HPP
