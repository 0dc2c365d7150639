#include "voroslab/branch.hpp"

#include <cmath>

namespace voroslab {

BranchedSqrt::BranchedSqrt(Rational radicand, cplx z_ref, cplx w_ref)
    : rad_(std::move(radicand)), zref_(z_ref), wref_(w_ref) {
  cplx q = rad_.eval(z_ref);
  if (std::abs(w_ref * w_ref - q) > 1e-12 * std::max(1.0, std::abs(q)))
    throw VError("branch reference value does not square to the radicand", 2);
}

BranchedSqrt BranchedSqrt::principal_at(Rational radicand, cplx z_ref) {
  cplx w = std::sqrt(radicand.eval(z_ref));
  return BranchedSqrt(std::move(radicand), z_ref, w);
}

cplx BranchedSqrt::continue_along(cplx z_from, cplx w_from, cplx z) const {
  // Subdivide [z_from, z] until the radicand's phase turns < pi/2 per step.
  int n = 8;
  const int n_max = 1 << 16;
  while (true) {
    cplx w = w_from;
    cplx qprev = rad_.eval(z_from);
    bool ok = true;
    for (int k = 1; k <= n; ++k) {
      cplx zk = z_from + (z - z_from) * (double(k) / n);
      cplx qk = rad_.eval(zk);
      if (qk == cplx(0) || std::abs(qk) < 1e-280 || std::abs(qk) > 1e280)
        throw VError("branch continuation hits a zero or pole of the radicand",
                     3);
      double dphase = std::abs(std::arg(qk / qprev));
      if (dphase > M_PI / 2) {
        ok = false;
        break;
      }
      cplx s = std::sqrt(qk);
      w = ((s * std::conj(w)).real() >= 0) ? s : -s;
      qprev = qk;
    }
    if (ok) return w;
    n *= 2;
    if (n > n_max)
      throw VError("branch continuation did not stabilise (path too close to "
                   "a branch point?)",
                   3);
  }
}

std::vector<cplx> BranchedSqrt::along_path(const std::vector<cplx>& pts,
                                           cplx w0) const {
  std::vector<cplx> out;
  out.reserve(pts.size());
  if (pts.empty()) return out;
  cplx w = w0;
  out.push_back(w);
  for (size_t i = 1; i < pts.size(); ++i) {
    w = continue_along(pts[i - 1], w, pts[i]);
    out.push_back(w);
  }
  return out;
}

cplx FirstSheet::value(cplx z) const {
  cplx w = sq_.value_from_ref(z);
  int n = cuts_.crossings(sq_.z_ref(), z);
  return (n % 2 == 0) ? w : -w;
}

}  // namespace voroslab
