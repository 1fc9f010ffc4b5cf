#include "congaps/quadrature.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "congaps/error.hpp"
#include "congaps/report.hpp"

namespace congaps {

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b, double rel_tol,
                           double abs_tol, unsigned max_depth) {
  QuadratureResult r;
  if (a == b) return r;
  r.value = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, a, b, max_depth, rel_tol, &r.error, &r.l1);
  const double target = std::max(abs_tol, rel_tol * r.l1);
  // The Gauss/Kronrod difference overstates the true error; accept up to 10x.
  if (!(r.error <= 10.0 * target))
    throw NumericError("quadrature on [" + format_double(a) + ", " + format_double(b) +
                       "] did not converge: error estimate " + format_double(r.error) + " vs target " +
                       format_double(target));
  return r;
}

}  // namespace congaps
