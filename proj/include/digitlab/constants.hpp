#ifndef DIGITLAB_CONSTANTS_HPP
#define DIGITLAB_CONSTANTS_HPP

#include <algorithm>
#include <string>

#include <mpfr.h>

namespace digitlab {

/// Small RAII wrapper around mpfr_t for the handful of high-precision real
/// computations (constants, ratio tables). Everything exact in this library
/// stays in GMP integers/rationals; this type is display/\approx only.
class Real {
public:
  explicit Real(mpfr_prec_t prec = 256) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
  Real(unsigned long u, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_ui(v_, u, MPFR_RNDN); }
  Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  Real(Real&& o) noexcept { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_swap(v_, o.v_); }
  Real& operator=(Real o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  mpfr_ptr get() noexcept { return v_; }
  mpfr_srcptr get() const noexcept { return v_; }
  mpfr_prec_t prec() const noexcept { return mpfr_get_prec(v_); }

  static Real pi(mpfr_prec_t prec) {
    Real r(prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
  }

  Real sqrt() const {
    Real r(prec());
    mpfr_sqrt(r.v_, v_, MPFR_RNDN);
    return r;
  }

  friend Real operator+(const Real& a, const Real& b) { return bin(a, b, mpfr_add); }
  friend Real operator-(const Real& a, const Real& b) { return bin(a, b, mpfr_sub); }
  friend Real operator*(const Real& a, const Real& b) { return bin(a, b, mpfr_mul); }
  friend Real operator/(const Real& a, const Real& b) { return bin(a, b, mpfr_div); }

  Real abs() const {
    Real r(prec());
    mpfr_abs(r.v_, v_, MPFR_RNDN);
    return r;
  }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  /// Fixed-point decimal string with the given digit count after the point.
  std::string to_decimal(int digits) const {
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Rf", digits, v_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
  }

private:
  using BinOp = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
  static Real bin(const Real& a, const Real& b, BinOp op) {
    Real r(std::max(mpfr_get_prec(a.v_), mpfr_get_prec(b.v_)));
    op(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }

  mpfr_t v_;
};

/// The three growth constants of the digit-count bounds:
///   c1 = √2                 (the always lower bound coefficient)
///   c2 = 2/√(2√2−1)         (the infinitely-often improvement)
///   c3 = √(8/π)             (the conjectured many-interval limit, reported only)
struct TheoremConstants {
  std::string c1_expr = "sqrt(2)";
  std::string c2_expr = "2/sqrt(2*sqrt(2)-1)";
  std::string c3_expr = "sqrt(8/pi)";
  std::string c1, c2, c3; // decimal strings
  double c1_d = 0, c2_d = 0, c3_d = 0;
};

inline Real growth_constant_c1(mpfr_prec_t prec = 256) { return Real(2, prec).sqrt(); }

inline Real growth_constant_c2(mpfr_prec_t prec = 256) {
  const Real two(2, prec), one(1, prec);
  return two / (two * two.sqrt() - one).sqrt();
}

inline Real growth_constant_c3(mpfr_prec_t prec = 256) {
  return (Real(8, prec) / Real::pi(prec)).sqrt();
}

inline TheoremConstants theorem_constants(int decimal_digits = 30, mpfr_prec_t prec = 256) {
  TheoremConstants c;
  const Real c1 = growth_constant_c1(prec), c2 = growth_constant_c2(prec),
             c3 = growth_constant_c3(prec);
  c.c1 = c1.to_decimal(decimal_digits);
  c.c2 = c2.to_decimal(decimal_digits);
  c.c3 = c3.to_decimal(decimal_digits);
  c.c1_d = c1.to_double();
  c.c2_d = c2.to_double();
  c.c3_d = c3.to_double();
  return c;
}

/// Residual of the contradiction-threshold identity (2√2−1)·λ² = 2 at
/// λ = c2/√2 (the √(2N)-scaled coefficient bound implied by c2).
/// Mathematically zero; returns the high-precision evaluation error.
inline double contradiction_threshold_residual(mpfr_prec_t prec = 256) {
  const Real two(2, prec), one(1, prec);
  const Real lambda = growth_constant_c2(prec) / two.sqrt();
  const Real residual = (two * two.sqrt() - one) * lambda * lambda - two;
  return residual.abs().to_double();
}

} // namespace digitlab

#endif // DIGITLAB_CONSTANTS_HPP
