#pragma once

#include <mpfr.h>

#include <cmath>
#include <cstdint>
#include <string>
#include <utility>

#include <gmpxx.h>

#include "apery/errors.hpp"

namespace apery {

// Requested output accuracy plus working headroom. Every numeric kernel takes
// one of these; work happens at bits() precision and results are trusted to
// roughly `digits` significant decimal digits.
struct PrecisionContext {
  int digits = 20;  // requested significant decimal digits, >= 1
  int guard = 10;   // extra working digits

  int working_digits() const { return digits + guard; }

  mpfr_prec_t bits() const {
    // 1 decimal digit = log2(10) bits, plus a small fixed margin.
    return static_cast<mpfr_prec_t>(
        std::ceil(working_digits() * 3.3219280948873623) + 8);
  }
};

// Arbitrary-precision floating value (MPFR) with value semantics. Binary
// operations run at the max of the operand precisions; rounding is to
// nearest everywhere.
class Real {
 public:
  Real();  // NaN at minimal precision
  explicit Real(mpfr_prec_t prec);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  static Real of(long v, mpfr_prec_t prec);
  static Real of(unsigned long v, mpfr_prec_t prec);
  static Real of(double v, mpfr_prec_t prec);
  static Real of(const mpq_class& q, mpfr_prec_t prec);
  static Real of(const mpz_class& z, mpfr_prec_t prec);
  // Parses decimal ("1.25e-3") or hex-float ("0x1.8p+1") forms.
  static Real parse(const std::string& s, mpfr_prec_t prec);

  static Real pi(mpfr_prec_t prec);
  static Real ln2(mpfr_prec_t prec);
  // 10^-d at the value's own precision; handy as a tolerance.
  static Real pow10(long d, mpfr_prec_t prec);

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  mpfr_srcptr raw() const { return v_; }
  mpfr_ptr raw() { return v_; }

  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  bool is_inf() const { return mpfr_inf_p(v_) != 0; }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

  // Decimal rendering with `digits` significant digits ("%.*Rg").
  std::string str(int digits) const;
  // Exact binary round-trip rendering ("%Ra").
  std::string hex_str() const;

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);
  Real operator-() const;

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);

  friend Real operator+(const Real& a, long b);
  friend Real operator+(long a, const Real& b);
  friend Real operator-(const Real& a, long b);
  friend Real operator-(long a, const Real& b);
  friend Real operator*(const Real& a, long b);
  friend Real operator*(long a, const Real& b);
  friend Real operator/(const Real& a, long b);
  friend Real operator/(long a, const Real& b);

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend bool operator!=(const Real& a, const Real& b) { return !(a == b); }
  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }

  friend bool operator<(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) < 0; }
  friend bool operator>(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) > 0; }
  friend bool operator<=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) <= 0; }
  friend bool operator>=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) >= 0; }
  friend bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) == 0; }

 private:
  mpfr_t v_;
};

// An evaluator could not reach the requested accuracy; carries its best
// estimate and the error bound it could certify.
class AccuracyError : public Error {
 public:
  AccuracyError(const std::string& what, Real best, Real bound)
      : Error(what), best_(std::move(best)), bound_(std::move(bound)) {}

  const Real& best_value() const { return best_; }
  const Real& bound() const { return bound_; }

 private:
  Real best_;
  Real bound_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real log(const Real& x);
Real log1p(const Real& x);
Real exp(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real atan(const Real& x);
Real atanh(const Real& x);
Real sinh(const Real& x);
Real cosh(const Real& x);
Real pow(const Real& x, unsigned long e);
Real pow(const Real& x, const Real& y);
Real ldexp(const Real& x, long e);
Real max(const Real& a, const Real& b);
Real min(const Real& a, const Real& b);

}  // namespace apery
