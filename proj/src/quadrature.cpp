#include "voroslab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace voroslab {

namespace {

// QUADPACK dqk15 nodes and weights on [-1,1].
const double xgk[8] = {0.991455371120813, 0.949107912342759,
                       0.864864423359769, 0.741531185599394,
                       0.586087235467691, 0.405845151377397,
                       0.207784955007898, 0.0};
const double wgk[8] = {0.022935322010529, 0.063092092629979,
                       0.104790010322250, 0.140653259715525,
                       0.169004726639267, 0.190350578064785,
                       0.204432940075298, 0.209482141084728};
const double wg[4] = {0.129484966168870, 0.279705391489277,
                      0.381830050505119, 0.417959183673469};

struct Piece {
  double a, b;
  cplx val;
  double err;
};

Piece gk15(const std::function<cplx(double)>& f, double a, double b) {
  double h = 0.5 * (b - a), c = 0.5 * (a + b);
  cplx fc = f(c);
  cplx kron = wgk[7] * fc;
  cplx gauss = wg[3] * fc;
  for (int j = 0; j < 7; ++j) {
    cplx f1 = f(c - h * xgk[j]);
    cplx f2 = f(c + h * xgk[j]);
    kron += wgk[j] * (f1 + f2);
    if (j % 2 == 1) gauss += wg[j / 2] * (f1 + f2);
  }
  kron *= h;
  gauss *= h;
  return {a, b, kron, std::abs(kron - gauss)};
}

}  // namespace

QuadResult integrate_adaptive(const std::function<cplx(double)>& f, double a,
                              double b, double tol, int max_intervals) {
  std::vector<Piece> heap{gk15(f, a, b)};
  auto total = [&] {
    cplx v(0);
    double e = 0;
    for (auto& p : heap) {
      v += p.val;
      e += p.err;
    }
    return std::pair<cplx, double>(v, e);
  };
  while ((int)heap.size() < max_intervals) {
    auto [v, e] = total();
    if (e <= tol) return {v, e, true};
    size_t worst = 0;
    for (size_t i = 1; i < heap.size(); ++i)
      if (heap[i].err > heap[worst].err) worst = i;
    Piece p = heap[worst];
    double m = 0.5 * (p.a + p.b);
    if (m == p.a || m == p.b) break;  // step underflow
    heap[worst] = gk15(f, p.a, m);
    heap.push_back(gk15(f, m, p.b));
  }
  auto [v, e] = total();
  return {v, e, e <= tol};
}

QuadResult contour_integrate(const std::function<cplx(cplx)>& f,
                             const Contour& c, double tol) {
  cplx value(0);
  double error = 0;
  bool ok = true;
  double L = c.length();
  for (auto& s : c.segments()) {
    double share = tol * std::max(s.length() / std::max(L, 1e-300), 1e-3);
    auto g = [&](double t) { return f(s.point(t)) * s.dpoint(t); };
    QuadResult r = integrate_adaptive(g, 0.0, 1.0, share);
    value += r.value;
    error += r.error;
    ok = ok && r.converged;
  }
  if (!ok)
    throw VError("contour quadrature failed to converge; partial estimate " +
                     std::to_string(value.real()) + "+" +
                     std::to_string(value.imag()) + "i",
                 3);
  return {value, error, ok};
}

void check_clearance(const Contour& c, const std::vector<cplx>& singular,
                     double margin) {
  for (cplx p : singular)
    if (c.distance_to(p) < margin)
      throw VError("contour too close to singularity", 3);
}

}  // namespace voroslab
