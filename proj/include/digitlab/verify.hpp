#ifndef DIGITLAB_VERIFY_HPP
#define DIGITLAB_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "digits.hpp"
#include "error.hpp"
#include "spectrum.hpp"
#include "tailfn.hpp"

namespace digitlab {

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string detail;
};

namespace detail {
inline void finish(std::vector<CheckResult>& out, CheckResult c, std::size_t checked) {
  if (c.pass) c.detail = std::to_string(checked) + " instances";
  out.push_back(std::move(c));
}
} // namespace detail

/// The exact-identity suite for one radicand: every relation a correct (digits,
/// r, T) triple must satisfy, checked as exact integers over the full computed
/// range. closed_form_cap limits the quadratic-cost literal tail evaluation.
inline std::vector<CheckResult> verify_identities(const DigitSequence& d, const RSequence& r,
                                                  const TSequence& t,
                                                  std::size_t closed_form_cap = 100000) {
  std::vector<CheckResult> out;
  const std::size_t R_max = t.R_max;

  // D² ≤ d·4^N < (D+1)²: the digits are the truncation of √d.
  if (d.radicand() != 0) {
    CheckResult c{"digits_defining_inequality"};
    const mpz_class value = d.as_integer();
    const mpz_class target = mpz_class(d.radicand()) << (2 * d.frac_bits());
    if (!(value * value <= target && target < (value + 1) * (value + 1))) {
      c.pass = false;
      c.detail = "truncation inequality violated";
    }
    detail::finish(out, std::move(c), 1);
  }

  {
    CheckResult c{"r_linear_bound"}; // r(n) ≤ n+1
    for (std::size_t n = 0; n <= r.n_max && c.pass; ++n)
      if (r.values[n] > n + 1) {
        c.pass = false;
        c.detail = "r(" + std::to_string(n) + ") = " + std::to_string(r.values[n]);
      }
    detail::finish(out, std::move(c), r.n_max + 1);
  }

  {
    CheckResult c{"r_parity_law"}; // r(n) odd ⇔ n even and a_{n/2} = 1
    for (std::size_t n = 0; n <= r.n_max && c.pass; ++n) {
      const bool odd = (r.values[n] & 1u) != 0;
      const bool expect = (n % 2 == 0) && d.digit(static_cast<long long>(n / 2)) == 1;
      if (odd != expect) {
        c.pass = false;
        c.detail = "parity law fails at n = " + std::to_string(n);
      }
    }
    detail::finish(out, std::move(c), r.n_max + 1);
  }

  {
    CheckResult c{"t_recurrence"}; // 2T(R−1) = T(R) + r(R)
    for (std::size_t R = 1; R <= R_max && c.pass; ++R)
      if (2 * t.values[R - 1] != t.values[R] + static_cast<unsigned long>(r.values[R])) {
        c.pass = false;
        c.detail = "recurrence fails at R = " + std::to_string(R);
      }
    detail::finish(out, std::move(c), R_max);
  }

  {
    CheckResult c{"t_positive"}; // T(R) ≥ 1
    for (std::size_t R = 0; R <= R_max && c.pass; ++R)
      if (t.values[R] < 1) {
        c.pass = false;
        c.detail = "T(" + std::to_string(R) + ") = " + t.values[R].get_str();
      }
    detail::finish(out, std::move(c), R_max + 1);
  }

  {
    CheckResult c{"t_parity"}; // T(R) ≡ r(R) (mod 2) for R ≥ 1
    for (std::size_t R = 1; R <= R_max && c.pass; ++R)
      if (mpz_odd_p(t.values[R].get_mpz_t()) != static_cast<int>(r.values[R] & 1u)) {
        c.pass = false;
        c.detail = "parity differs at R = " + std::to_string(R);
      }
    detail::finish(out, std::move(c), R_max);
  }

  {
    CheckResult c{"t_two_except_parity_indices"}; // T(R) ≥ 2 unless R = 2i with a_i = 1
    for (std::size_t R = 0; R <= R_max && c.pass; ++R) {
      const bool exceptional = (R % 2 == 0) && d.digit(static_cast<long long>(R / 2)) == 1;
      if (!exceptional && t.values[R] < 2) {
        c.pass = false;
        c.detail = "T(" + std::to_string(R) + ") = " + t.values[R].get_str();
      }
    }
    detail::finish(out, std::move(c), R_max + 1);
  }

  {
    CheckResult c{"t_closed_form_agreement"};
    const std::size_t cap = std::min(R_max, closed_form_cap);
    const TSequence literal = t_sequence_closed_form(r, t.radicand, cap);
    for (std::size_t R = 0; R <= cap && c.pass; ++R)
      if (literal.values[R] != t.values[R]) {
        c.pass = false;
        c.detail = "closed form differs at R = " + std::to_string(R);
      }
    detail::finish(out, std::move(c), cap + 1);
  }

  {
    // 0 < d − Σ_{n≤M} r(n)/2^n ≤ (M+3)/2^M, as integers after scaling by 2^M.
    CheckResult c{"normalization_tail"};
    const std::size_t M = r.n_max;
    mpz_class partial = 0;
    for (std::size_t n = 0; n <= M; ++n) {
      partial <<= 1;
      partial += static_cast<unsigned long>(r.values[n]);
    }
    const mpz_class gap = (mpz_class(t.radicand) << M) - partial;
    if (!(gap >= 0 && gap <= mpz_class(M) + 3)) {
      c.pass = false;
      c.detail = "tail gap out of range: " + gap.get_str();
    }
    detail::finish(out, std::move(c), 1);
  }

  {
    CheckResult c{"nz_star_offset"}; // nz_star(N) − nz(N) = a_0
    const std::size_t probe = std::min<std::size_t>(d.frac_bits(), 64);
    for (std::size_t n = 1; n <= probe && c.pass; ++n)
      if (nz_star(d, n) - nz(d, n) != static_cast<std::size_t>(d.digit(0))) {
        c.pass = false;
        c.detail = "offset differs at N = " + std::to_string(n);
      }
    detail::finish(out, std::move(c), probe);
  }

  return out;
}

inline bool all_pass(const std::vector<CheckResult>& results) {
  for (const auto& c : results)
    if (!c.pass) return false;
  return true;
}

} // namespace digitlab

#endif // DIGITLAB_VERIFY_HPP
