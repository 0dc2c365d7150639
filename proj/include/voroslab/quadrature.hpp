#pragma once

#include <functional>

#include "voroslab/contour.hpp"

namespace voroslab {

struct QuadResult {
  cplx value;
  double error;
  bool converged;
};

/// Adaptive Gauss-Kronrod (G7,K15) on a real parameter interval.
QuadResult integrate_adaptive(const std::function<cplx(double)>& f, double a,
                              double b, double tol, int max_intervals = 4000);

/// Integral of f(z) dz along the contour.  The integrand must be smooth on
/// the contour; singularity clearance is the caller's responsibility (see
/// check_clearance).
QuadResult contour_integrate(const std::function<cplx(cplx)>& f,
                             const Contour& c, double tol);

/// Throws when the contour comes within margin of any of the given points.
void check_clearance(const Contour& c, const std::vector<cplx>& singular,
                     double margin);

}  // namespace voroslab
