#pragma once

#include <functional>

#include "apery/precision.hpp"

namespace apery {

// Integrand on (0, 1). Both the node t and 1 - t are supplied so kernels
// with endpoint structure can be evaluated without cancellation; near the
// right endpoint t may round to exactly 1 while one_minus_t stays accurate.
using Integrand = std::function<Real(const Real& t, const Real& one_minus_t)>;

struct QuadratureOptions {
  int max_level = 12;
  // successive levels must agree to 10^-(digits + extra_agreement)
  int extra_agreement = 2;
};

struct QuadratureResult {
  Real value;
  Real error_bound;  // |last level - previous level|
  int levels = 0;    // refinement levels evaluated
};

// tanh-sinh (double-exponential) quadrature on (0, 1) with level doubling.
// Handles endpoint singularities of log-power type. Throws AccuracyError
// (carrying the best value and bound) if the level cap is hit before two
// successive levels agree.
QuadratureResult de_quadrature(const Integrand& f, const PrecisionContext& ctx,
                               const QuadratureOptions& opt = {});

// Same transform on (0, b) via scaling, b in (0, 1].
QuadratureResult de_quadrature_upto(const Real& b, const Integrand& f,
                                    const PrecisionContext& ctx,
                                    const QuadratureOptions& opt = {});

}  // namespace apery
