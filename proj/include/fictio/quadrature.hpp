#pragma once

#include <functional>

namespace fictio {

// Definite integral of f over [a, b] to an absolute tolerance, by adaptive
// Simpson subdivision.  An endpoint where f blows up (throws, or returns a
// non-finite value) is handled by insetting it slightly and removing the
// missing sliver with Richardson extrapolation calibrated for
// inverse-square-root blowups -- the kind circle geometry produces.  The
// extrapolation is cross-checked at a finer inset; disagreement raises
// QuadratureError rather than returning a guess.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol = 1e-10);

}  // namespace fictio
