#ifndef DIGITLAB_TAILFN_HPP
#define DIGITLAB_TAILFN_HPP

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "error.hpp"
#include "spectrum.hpp"

namespace digitlab {

/// T(R) = d·2^R − Σ_{n=0}^{R} r(n)·2^(R−n): the exact integer value of the
/// weighted tail Σ_{m≥1} r(R+m)/2^m. r(n) for n ≤ N is exact from N digits,
/// so T(R) for R ≤ N is exact — the infinite series is never summed.
struct TSequence {
  std::size_t R_max = 0;
  std::vector<mpz_class> values; // arbitrary precision: no a-priori size bound is assumed
  unsigned long radicand = 0;

  const mpz_class& at(std::size_t R) const {
    if (R > R_max) fail(errc::range_error, "TSequence::at: index out of range");
    return values[R];
  }
};

/// Production route: the forward update seeded at T(0) = d − r(0), i.e. the
/// closed form with the common factor folded in step by step. Values equal
/// t_sequence_closed_form everywhere (enforced by the verification suite).
inline TSequence t_sequence(const RSequence& r, unsigned long d, std::size_t R_max) {
  if (R_max > r.n_max)
    fail(errc::precision_exceeded, "t_sequence: R_max exceeds the computed r range");
  TSequence t;
  t.R_max = R_max;
  t.radicand = d;
  t.values.resize(R_max + 1);
  mpz_class cur(d);
  cur -= static_cast<unsigned long>(r.values[0]);
  t.values[0] = cur;
  for (std::size_t R = 1; R <= R_max; ++R) {
    cur <<= 1;
    cur -= static_cast<unsigned long>(r.values[R]);
    t.values[R] = cur;
  }
  return t;
}

/// Literal closed form at a single R: d·2^R minus the Horner-accumulated
/// partial sum. Independent data flow from t_sequence's running update.
inline mpz_class t_closed_form(const RSequence& r, unsigned long d, std::size_t R) {
  if (R > r.n_max) fail(errc::precision_exceeded, "t_closed_form: R exceeds the computed r range");
  mpz_class partial = 0;
  for (std::size_t n = 0; n <= R; ++n) {
    partial <<= 1;
    partial += static_cast<unsigned long>(r.values[n]);
  }
  mpz_class scaled(d);
  scaled <<= R;
  return scaled - partial;
}

/// Whole-range literal route: keeps d·2^R and the partial sum as full-width
/// integers and subtracts at every step. Quadratic in R_max; meant for
/// cross-checking t_sequence, not for production scans.
inline TSequence t_sequence_closed_form(const RSequence& r, unsigned long d, std::size_t R_max) {
  if (R_max > r.n_max)
    fail(errc::precision_exceeded, "t_sequence_closed_form: R_max exceeds the computed r range");
  TSequence t;
  t.R_max = R_max;
  t.radicand = d;
  t.values.resize(R_max + 1);
  mpz_class scaled(d);
  mpz_class partial(static_cast<unsigned long>(r.values[0]));
  t.values[0] = scaled - partial;
  for (std::size_t R = 1; R <= R_max; ++R) {
    scaled <<= 1;
    partial <<= 1;
    partial += static_cast<unsigned long>(r.values[R]);
    t.values[R] = scaled - partial;
  }
  return t;
}

/// Σ_{R=a}^{b} T(R), exact.
inline mpz_class sum_t(const TSequence& t, std::size_t a, std::size_t b) {
  if (a > b || b > t.R_max) fail(errc::range_error, "sum_t: need 0 <= a <= b <= R_max");
  mpz_class s = 0;
  for (std::size_t R = a; R <= b; ++R) s += t.values[R];
  return s;
}

} // namespace digitlab

#endif // DIGITLAB_TAILFN_HPP
