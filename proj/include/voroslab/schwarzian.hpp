#pragma once

#include <functional>

#include "voroslab/polynomial.hpp"

namespace voroslab {

/// Numerical Schwarzian derivative (f''/f')' - (1/2)(f''/f')^2 by central
/// differences, O(h^2).  Used in tests of the potential transformation law.
inline cplx schwarzian(const std::function<cplx(cplx)>& f, cplx z,
                       double h = 1e-3) {
  cplx fp4 = f(z + 4 * h), fm4 = f(z - 4 * h);
  cplx fp2 = f(z + 2 * h), fp1 = f(z + h), fm1 = f(z - h), fm2 = f(z - 2 * h);
  cplx f0 = f(z);
  cplx d1 = (8.0 * (fp1 - fm1) - (fp2 - fm2)) / (12.0 * h);
  cplx d2 = (-30.0 * f0 + 16.0 * (fp1 + fm1) - (fp2 + fm2)) / (12.0 * h * h);
  cplx d3h = ((fp2 - fm2) - 2.0 * (fp1 - fm1)) / (2.0 * h * h * h);
  cplx d32h = ((fp4 - fm4) - 2.0 * (fp2 - fm2)) / (16.0 * h * h * h);
  cplx d3 = (4.0 * d3h - d32h) / 3.0;
  if (std::abs(d1) < 1e-8 * std::max(1.0, std::abs(f0)))
    throw VError("critical point of chart", 2);
  cplx u = d2 / d1;
  return d3 / d1 - 1.5 * u * u;
}

}  // namespace voroslab
