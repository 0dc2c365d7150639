#include "voroslab/roots.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>

namespace voroslab {

std::vector<RootCluster> poly_roots(const Polynomial& p, double reltol) {
  if (p.is_zero()) throw VError("undefined root set of the zero polynomial", 2);
  int n = p.degree();
  if (n == 0) return {};

  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(n, n);
  cplx lead = p.leading();
  for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) comp(i, n - 1) = -p.coeff(i) / lead;

  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
  std::vector<cplx> roots(n);
  for (int i = 0; i < n; ++i) roots[i] = es.eigenvalues()(i);

  // Newton polish (helps isolated roots; multiple roots stay as clusters)
  Polynomial dp = p.derivative();
  for (auto& r : roots) {
    for (int it = 0; it < 3; ++it) {
      cplx f = p.eval(r), df = dp.eval(r);
      if (std::abs(df) < 1e-14 * std::max(1.0, std::abs(f))) break;
      cplx step = f / df;
      if (std::abs(step) > 0.5 * std::max(1.0, std::abs(r))) break;
      r -= step;
    }
  }

  std::sort(roots.begin(), roots.end(), [](cplx a, cplx b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });

  std::vector<RootCluster> out;
  std::vector<bool> used(n, false);
  for (int i = 0; i < n; ++i) {
    if (used[i]) continue;
    cplx sum = roots[i];
    int cnt = 1;
    used[i] = true;
    for (int j = i + 1; j < n; ++j) {
      if (used[j]) continue;
      double tol = reltol * std::max(1.0, std::abs(sum / double(cnt)));
      if (std::abs(roots[j] - sum / double(cnt)) < tol) {
        sum += roots[j];
        ++cnt;
        used[j] = true;
      }
    }
    out.push_back({sum / double(cnt), cnt});
  }
  return out;
}

}  // namespace voroslab
