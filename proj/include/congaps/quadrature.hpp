#pragma once

#include <functional>

namespace congaps {

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;  // estimated absolute error
  double l1 = 0.0;     // integral of |f|
};

// Adaptive Gauss-Kronrod (31 points). Throws NumericError when the error
// estimate exceeds max(abs_tol, rel_tol * l1).
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b, double rel_tol = 1e-10,
                           double abs_tol = 1e-10, unsigned max_depth = 30);

}  // namespace congaps
