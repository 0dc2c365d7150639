#pragma once

#include "voroslab/polynomial.hpp"

namespace voroslab {

struct RootCluster {
  cplx root;
  int multiplicity;
};

/// All roots of p with multiplicities.  Eigenvalues of the companion matrix,
/// polished by Newton steps; roots closer than reltol * max(1, |root|) are
/// merged into one cluster with summed multiplicity.
std::vector<RootCluster> poly_roots(const Polynomial& p, double reltol = 1e-8);

}  // namespace voroslab
