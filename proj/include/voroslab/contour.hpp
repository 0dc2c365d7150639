#pragma once

#include <functional>
#include <vector>

#include "voroslab/polynomial.hpp"

namespace voroslab {

/// One parametric piece of a contour, t in [0,1].
struct Segment {
  enum Kind { Line, Arc } kind = Line;
  // Line: from a to b.  Arc: center c, radius r, angle ang0 -> ang1
  // (ang1 > ang0 counterclockwise, ang1 < ang0 clockwise).
  cplx a, b;
  cplx c;
  double r = 0, ang0 = 0, ang1 = 0;

  static Segment line(cplx a, cplx b) {
    Segment s;
    s.kind = Line;
    s.a = a;
    s.b = b;
    return s;
  }
  static Segment arc(cplx center, double radius, double ang0, double ang1) {
    Segment s;
    s.kind = Arc;
    s.c = center;
    s.r = radius;
    s.ang0 = ang0;
    s.ang1 = ang1;
    s.a = center + radius * std::polar(1.0, ang0);
    s.b = center + radius * std::polar(1.0, ang1);
    return s;
  }

  cplx point(double t) const {
    if (kind == Line) return a + t * (b - a);
    return c + r * std::polar(1.0, ang0 + t * (ang1 - ang0));
  }
  cplx dpoint(double t) const {
    if (kind == Line) return b - a;
    double ang = ang0 + t * (ang1 - ang0);
    return r * (ang1 - ang0) * cplx(0, 1) * std::polar(1.0, ang);
  }
  double length() const {
    if (kind == Line) return std::abs(b - a);
    return r * std::abs(ang1 - ang0);
  }
};

/// Piecewise contour.  Consecutive segments must share endpoints to 1e-12
/// (relative to the contour scale); a closed contour additionally returns to
/// its starting point.
class Contour {
 public:
  Contour() = default;
  explicit Contour(std::vector<Segment> segs, bool closed = false);

  static Contour circle(cplx center, double radius, bool ccw = true);
  static Contour segment(cplx a, cplx b);
  static Contour polyline(const std::vector<cplx>& pts, bool closed = false);
  /// Closed boundary of the rho-neighbourhood of an open polyline (stadium
  /// when the polyline is one segment), counterclockwise.
  static Contour loop_around_polyline(const std::vector<cplx>& pts, double rho);

  const std::vector<Segment>& segments() const { return segs_; }
  bool closed() const { return closed_; }
  bool empty() const { return segs_.empty(); }
  cplx start() const { return segs_.front().point(0); }
  cplx end() const { return segs_.back().point(1); }
  double length() const;

  Contour reversed() const;
  Contour concatenated(const Contour& tail) const;

  /// Uniform-ish sample of the whole contour, n points per segment.
  std::vector<cplx> sample(int per_segment = 32) const;

  /// Minimal distance from the contour to a point (sampled).
  double distance_to(cplx p, int per_segment = 64) const;

 private:
  std::vector<Segment> segs_;
  bool closed_ = false;
};

/// Number of transversal crossings of segment [a,b] with segment [c,d].
/// Returns 0 or 1; near-degenerate configurations count as 0.
int segments_cross(cplx a, cplx b, cplx c, cplx d);

/// Signed crossing: +1 if (b-a, d-c) is positively oriented at a transversal
/// crossing, -1 if negative, 0 if no crossing.
int segments_cross_signed(cplx a, cplx b, cplx c, cplx d);

}  // namespace voroslab
