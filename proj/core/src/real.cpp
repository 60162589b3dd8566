#include "apery/precision.hpp"

#include <algorithm>
#include <cstdlib>

#include "apery/errors.hpp"

namespace apery {

namespace {
mpfr_prec_t join(const Real& a, const Real& b) {
  return std::max(a.prec(), b.prec());
}
}  // namespace

Real::Real() { mpfr_init2(v_, MPFR_PREC_MIN); }

Real::Real(mpfr_prec_t prec) { mpfr_init2(v_, prec); }

Real::Real(const Real& other) {
  mpfr_init2(v_, other.prec());
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, other.v_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(v_, other.prec());
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  if (this != &other) mpfr_swap(v_, other.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::of(long v, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_si(r.v_, v, MPFR_RNDN);
  return r;
}

Real Real::of(unsigned long v, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_ui(r.v_, v, MPFR_RNDN);
  return r;
}

Real Real::of(double v, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_d(r.v_, v, MPFR_RNDN);
  return r;
}

Real Real::of(const mpq_class& q, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
  return r;
}

Real Real::of(const mpz_class& z, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_z(r.v_, z.get_mpz_t(), MPFR_RNDN);
  return r;
}

Real Real::parse(const std::string& s, mpfr_prec_t prec) {
  Real r(prec);
  if (mpfr_set_str(r.v_, s.c_str(), 0, MPFR_RNDN) != 0 && r.is_nan()) {
    throw Error("unparseable numeric literal: " + s);
  }
  return r;
}

Real Real::pi(mpfr_prec_t prec) {
  Real r(prec);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

Real Real::ln2(mpfr_prec_t prec) {
  Real r(prec);
  mpfr_const_log2(r.v_, MPFR_RNDN);
  return r;
}

Real Real::pow10(long d, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_si(r.v_, 10, MPFR_RNDN);
  mpfr_pow_si(r.v_, r.v_, d, MPFR_RNDN);
  return r;
}

std::string Real::str(int digits) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rg", digits, v_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

std::string Real::hex_str() const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%Ra", v_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

Real& Real::operator+=(const Real& o) {
  mpfr_prec_t p = join(*this, o);
  if (p != prec()) {
    Real r(p);
    mpfr_add(r.v_, v_, o.v_, MPFR_RNDN);
    *this = std::move(r);
  } else {
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator-=(const Real& o) {
  mpfr_prec_t p = join(*this, o);
  if (p != prec()) {
    Real r(p);
    mpfr_sub(r.v_, v_, o.v_, MPFR_RNDN);
    *this = std::move(r);
  } else {
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator*=(const Real& o) {
  mpfr_prec_t p = join(*this, o);
  if (p != prec()) {
    Real r(p);
    mpfr_mul(r.v_, v_, o.v_, MPFR_RNDN);
    *this = std::move(r);
  } else {
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator/=(const Real& o) {
  mpfr_prec_t p = join(*this, o);
  if (p != prec()) {
    Real r(p);
    mpfr_div(r.v_, v_, o.v_, MPFR_RNDN);
    *this = std::move(r);
  } else {
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

Real Real::operator-() const {
  Real r(prec());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

Real operator+(const Real& a, const Real& b) {
  Real r(join(a, b));
  mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

Real operator-(const Real& a, const Real& b) {
  Real r(join(a, b));
  mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

Real operator*(const Real& a, const Real& b) {
  Real r(join(a, b));
  mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

Real operator/(const Real& a, const Real& b) {
  Real r(join(a, b));
  mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

Real operator+(const Real& a, long b) {
  Real r(a.prec());
  mpfr_add_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}

Real operator-(const Real& a, long b) {
  Real r(a.prec());
  mpfr_sub_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}

Real operator+(long a, const Real& b) { return b + a; }

Real operator-(long a, const Real& b) {
  Real r(b.prec());
  mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN);
  return r;
}

Real operator*(const Real& a, long b) {
  Real r(a.prec());
  mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}

Real operator*(long a, const Real& b) { return b * a; }

Real operator/(const Real& a, long b) {
  Real r(a.prec());
  mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}

Real operator/(long a, const Real& b) {
  Real r(b.prec());
  mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
  return r;
}

#define APERY_UNARY(name, fn)              \
  Real name(const Real& x) {               \
    Real r(x.prec());                      \
    fn(r.raw(), x.raw(), MPFR_RNDN);       \
    return r;                              \
  }

APERY_UNARY(abs, mpfr_abs)
APERY_UNARY(sqrt, mpfr_sqrt)
APERY_UNARY(log, mpfr_log)
APERY_UNARY(log1p, mpfr_log1p)
APERY_UNARY(exp, mpfr_exp)
APERY_UNARY(sin, mpfr_sin)
APERY_UNARY(cos, mpfr_cos)
APERY_UNARY(atan, mpfr_atan)
APERY_UNARY(atanh, mpfr_atanh)
APERY_UNARY(sinh, mpfr_sinh)
APERY_UNARY(cosh, mpfr_cosh)

#undef APERY_UNARY

Real pow(const Real& x, unsigned long e) {
  Real r(x.prec());
  mpfr_pow_ui(r.raw(), x.raw(), e, MPFR_RNDN);
  return r;
}

Real pow(const Real& x, const Real& y) {
  Real r(std::max(x.prec(), y.prec()));
  mpfr_pow(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
  return r;
}

Real ldexp(const Real& x, long e) {
  Real r(x.prec());
  mpfr_mul_2si(r.raw(), x.raw(), e, MPFR_RNDN);
  return r;
}

Real max(const Real& a, const Real& b) { return a >= b ? a : b; }
Real min(const Real& a, const Real& b) { return a <= b ? a : b; }

}  // namespace apery
