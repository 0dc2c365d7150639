#include "voroslab/contour.hpp"

#include <cmath>

namespace voroslab {

Contour::Contour(std::vector<Segment> segs, bool closed)
    : segs_(std::move(segs)), closed_(closed) {
  if (segs_.empty()) return;
  double scale = 0;
  for (auto& s : segs_) scale = std::max({scale, std::abs(s.a), std::abs(s.b)});
  scale = std::max(scale, 1.0);
  for (size_t i = 1; i < segs_.size(); ++i) {
    if (std::abs(segs_[i].point(0) - segs_[i - 1].point(1)) > 1e-12 * scale)
      throw VError("contour segments do not chain", 2);
  }
  if (closed_ &&
      std::abs(segs_.back().point(1) - segs_.front().point(0)) > 1e-12 * scale)
    throw VError("closed contour does not return to start", 2);
}

Contour Contour::circle(cplx center, double radius, bool ccw) {
  std::vector<Segment> s;
  double d = ccw ? 1.0 : -1.0;
  for (int k = 0; k < 4; ++k)
    s.push_back(Segment::arc(center, radius, d * k * M_PI / 2,
                             d * (k + 1) * M_PI / 2));
  return Contour(std::move(s), true);
}

Contour Contour::segment(cplx a, cplx b) {
  return Contour({Segment::line(a, b)}, false);
}

Contour Contour::polyline(const std::vector<cplx>& pts, bool closed) {
  std::vector<Segment> s;
  for (size_t i = 0; i + 1 < pts.size(); ++i)
    s.push_back(Segment::line(pts[i], pts[i + 1]));
  if (closed && !pts.empty()) s.push_back(Segment::line(pts.back(), pts[0]));
  return Contour(std::move(s), closed);
}

Contour Contour::loop_around_polyline(const std::vector<cplx>& pts,
                                      double rho) {
  if (pts.size() < 2) throw VError("polyline needs at least 2 points", 2);
  // Counterclockwise boundary of the rho-neighbourhood: forward pass offset
  // to the right of the walking direction, half-circle cap at the far end,
  // backward pass (again offset right), cap at the start.
  std::vector<Segment> segs;
  auto dir = [](cplx a, cplx b) { return (b - a) / std::abs(b - a); };
  auto right = [&](cplx a, cplx b) { return dir(a, b) * cplx(0, -1); };

  auto wrap_pm_pi = [](double d) {
    while (d <= -M_PI) d += 2 * M_PI;
    while (d > M_PI) d -= 2 * M_PI;
    return d;
  };
  auto add_pass = [&](const std::vector<cplx>& q) {
    for (size_t i = 0; i + 1 < q.size(); ++i) {
      cplx nr = right(q[i], q[i + 1]);
      segs.push_back(Segment::line(q[i] + rho * nr, q[i + 1] + rho * nr));
      if (i + 2 < q.size()) {
        cplx nr2 = right(q[i + 1], q[i + 2]);
        double a0 = std::arg(nr), d = wrap_pm_pi(std::arg(nr2) - std::arg(nr));
        if (std::abs(d) > 1e-14)
          segs.push_back(Segment::arc(q[i + 1], rho, a0, a0 + d));
      }
    }
  };

  std::vector<cplx> fwd(pts.begin(), pts.end());
  std::vector<cplx> bwd(pts.rbegin(), pts.rend());
  add_pass(fwd);
  {  // cap at the far end: from right-of-forward to right-of-backward, ccw
    cplx nr = right(pts[pts.size() - 2], pts.back());
    double a0 = std::arg(nr);
    segs.push_back(Segment::arc(pts.back(), rho, a0, a0 + M_PI));
  }
  add_pass(bwd);
  {  // cap at the start
    cplx nr = right(pts[1], pts[0]);
    double a0 = std::arg(nr);
    segs.push_back(Segment::arc(pts[0], rho, a0, a0 + M_PI));
  }
  return Contour(std::move(segs), true);
}

double Contour::length() const {
  double L = 0;
  for (auto& s : segs_) L += s.length();
  return L;
}

Contour Contour::reversed() const {
  std::vector<Segment> r;
  for (auto it = segs_.rbegin(); it != segs_.rend(); ++it) {
    Segment s = *it;
    if (s.kind == Segment::Line) {
      std::swap(s.a, s.b);
    } else {
      std::swap(s.ang0, s.ang1);
      std::swap(s.a, s.b);
    }
    r.push_back(s);
  }
  return Contour(std::move(r), closed_);
}

Contour Contour::concatenated(const Contour& tail) const {
  std::vector<Segment> s = segs_;
  s.insert(s.end(), tail.segs_.begin(), tail.segs_.end());
  return Contour(std::move(s), false);
}

std::vector<cplx> Contour::sample(int per_segment) const {
  std::vector<cplx> out;
  for (auto& s : segs_)
    for (int k = 0; k < per_segment; ++k)
      out.push_back(s.point(double(k) / per_segment));
  if (!segs_.empty()) out.push_back(segs_.back().point(1));
  return out;
}

double Contour::distance_to(cplx p, int per_segment) const {
  double d = 1e300;
  for (auto& s : segs_)
    for (int k = 0; k <= per_segment; ++k)
      d = std::min(d, std::abs(s.point(double(k) / per_segment) - p));
  return d;
}

static double cross2(cplx u, cplx v) {
  return u.real() * v.imag() - u.imag() * v.real();
}

int segments_cross_signed(cplx a, cplx b, cplx c, cplx d) {
  cplx u = b - a, v = d - c;
  double den = cross2(u, v);
  double scale = std::max({std::abs(u), std::abs(v), 1e-300});
  if (std::abs(den) < 1e-12 * scale * scale) return 0;  // near-parallel
  double t = cross2(c - a, v) / den;
  double s = cross2(c - a, u) / den;
  if (t <= 1e-12 || t >= 1 - 1e-12 || s <= 1e-12 || s >= 1 - 1e-12) return 0;
  return den > 0 ? 1 : -1;
}

int segments_cross(cplx a, cplx b, cplx c, cplx d) {
  return segments_cross_signed(a, b, c, d) != 0 ? 1 : 0;
}

}  // namespace voroslab
