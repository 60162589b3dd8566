#include "apery/qpi_poly.hpp"

#include <sstream>

namespace apery {

QPiPoly& QPiPoly::operator+=(const QPiPoly& o) {
  for (const auto& [d, c] : o.coeffs_) {
    auto it = coeffs_.find(d);
    if (it == coeffs_.end()) {
      coeffs_.emplace(d, c);
    } else {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }
  return *this;
}

QPiPoly& QPiPoly::operator-=(const QPiPoly& o) {
  for (const auto& [d, c] : o.coeffs_) {
    auto it = coeffs_.find(d);
    if (it == coeffs_.end()) {
      coeffs_.emplace(d, -c);
    } else {
      it->second -= c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }
  return *this;
}

QPiPoly operator*(const QPiPoly& a, const QPiPoly& b) {
  QPiPoly out;
  for (const auto& [da, ca] : a.coeffs_) {
    for (const auto& [db, cb] : b.coeffs_) {
      out.set(da + db, out.coeff(da + db) + ca * cb);
    }
  }
  return out;
}

QPiPoly& QPiPoly::operator*=(const QPiPoly& o) { return *this = *this * o; }

QPiPoly& QPiPoly::operator*=(const Rational& s) {
  if (s == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [d, c] : coeffs_) c *= s;
  return *this;
}

Real QPiPoly::to_real(const PrecisionContext& ctx) const {
  const mpfr_prec_t p = ctx.bits();
  if (coeffs_.empty()) return Real::of(0L, p);
  const Real pi = Real::pi(p);
  // Horner over degrees present, descending.
  auto it = coeffs_.rbegin();
  unsigned deg = it->first;
  Real acc = Real::of(it->second, p);
  ++it;
  for (; it != coeffs_.rend(); ++it) {
    acc *= pow(pi, deg - it->first);
    acc += Real::of(it->second, p);
    deg = it->first;
  }
  if (deg > 0) acc *= pow(pi, deg);
  return acc;
}

std::string QPiPoly::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, c] : coeffs_) {
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    Rational a = ::abs(c);
    if (d == 0) {
      os << "(" << a.get_str() << ")";
    } else {
      if (a != 1) os << "(" << a.get_str() << ")*";
      os << "pi";
      if (d > 1) os << "^" << d;
    }
  }
  return os.str();
}

}  // namespace apery
