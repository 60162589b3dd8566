#pragma once

#include <map>
#include <string>

#include "apery/precision.hpp"
#include "apery/rational.hpp"

namespace apery {

// Polynomial in pi with rational coefficients: sum c_d * pi^d. The single
// exact value domain of the trigonometric moment calculus; (pi/2)^k is
// stored as (1/2^k) * pi^k. Zero coefficients are never stored, so equality
// is coefficient-wise map equality.
class QPiPoly {
 public:
  QPiPoly() = default;
  explicit QPiPoly(const Rational& constant) { set(0, constant); }

  static QPiPoly pi_power(unsigned degree, const Rational& coeff) {
    QPiPoly p;
    p.set(degree, coeff);
    return p;
  }

  // (pi/2)^k
  static QPiPoly half_pi_power(unsigned k) {
    return pi_power(k, rational(1) / Rational(int_pow(2, k)));
  }

  bool is_zero() const { return coeffs_.empty(); }
  const std::map<unsigned, Rational>& terms() const { return coeffs_; }

  Rational coeff(unsigned degree) const {
    auto it = coeffs_.find(degree);
    return it == coeffs_.end() ? Rational(0) : it->second;
  }

  QPiPoly& operator+=(const QPiPoly& o);
  QPiPoly& operator-=(const QPiPoly& o);
  QPiPoly& operator*=(const QPiPoly& o);
  QPiPoly& operator*=(const Rational& s);

  friend QPiPoly operator+(QPiPoly a, const QPiPoly& b) { return a += b; }
  friend QPiPoly operator-(QPiPoly a, const QPiPoly& b) { return a -= b; }
  friend QPiPoly operator*(const QPiPoly& a, const QPiPoly& b);
  friend QPiPoly operator*(QPiPoly a, const Rational& s) { return a *= s; }
  friend QPiPoly operator*(const Rational& s, QPiPoly a) { return a *= s; }
  friend bool operator==(const QPiPoly& a, const QPiPoly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const QPiPoly& a, const QPiPoly& b) { return !(a == b); }

  // Horner evaluation with pi at ctx working precision.
  Real to_real(const PrecisionContext& ctx) const;

  // Deterministic rendering, ascending degree: "(-1/4)*pi + (1/24)*pi^3".
  std::string str() const;

 private:
  void set(unsigned degree, const Rational& c) {
    if (c == 0) {
      coeffs_.erase(degree);
    } else {
      coeffs_[degree] = c;
    }
  }

  std::map<unsigned, Rational> coeffs_;
};

}  // namespace apery
