#pragma once

#include "voroslab/contour.hpp"

namespace voroslab {

/// Branch cuts: polylines joining pairs of branch points of sqrt(radicand).
struct CutSystem {
  std::vector<std::vector<cplx>> cuts;

  /// crossings of the straight segment [a,b] with all cut polylines
  int crossings(cplx a, cplx b) const {
    int n = 0;
    for (auto& cut : cuts)
      for (size_t i = 0; i + 1 < cut.size(); ++i)
        n += segments_cross(a, b, cut[i], cut[i + 1]);
    return n;
  }
  int crossings(const Contour& c, int per_segment = 64) const {
    auto pts = c.sample(per_segment);
    int n = 0;
    for (size_t i = 0; i + 1 < pts.size(); ++i) n += crossings(pts[i], pts[i + 1]);
    return n;
  }
};

/// A square root of a rational radicand with a definite branch fixed by a
/// reference point and value.  Values are produced by stepwise continuation
/// (the root nearer the previous value), with the sampling refined until the
/// radicand turns by less than pi/2 between neighbours.
class BranchedSqrt {
 public:
  BranchedSqrt() = default;
  BranchedSqrt(Rational radicand, cplx z_ref, cplx w_ref);

  /// Branch fixed to the principal square root at z_ref.
  static BranchedSqrt principal_at(Rational radicand, cplx z_ref);

  const Rational& radicand() const { return rad_; }
  cplx z_ref() const { return zref_; }
  cplx w_ref() const { return wref_; }

  /// Continuation from (z_from, w_from) to z along the straight segment.
  /// Throws if the radicand vanishes (or blows up) on the way.
  cplx continue_along(cplx z_from, cplx w_from, cplx z) const;

  /// Value at z continued from the reference point along [z_ref, z].
  cplx value_from_ref(cplx z) const { return continue_along(zref_, wref_, z); }

  /// Values at an ordered list of path samples, continued from w0 at pts[0].
  std::vector<cplx> along_path(const std::vector<cplx>& pts, cplx w0) const;

 private:
  Rational rad_;
  cplx zref_, wref_;
};

/// sqrt(Q0) as a single-valued function off the cuts; "first sheet" of the
/// spectral cover.  value(z) continues from the anchor along a straight path
/// and compensates each cut crossing with a sign flip.
class FirstSheet {
 public:
  FirstSheet() = default;
  FirstSheet(BranchedSqrt sqrt, CutSystem cuts)
      : sq_(std::move(sqrt)), cuts_(std::move(cuts)) {}

  cplx value(cplx z) const;
  const BranchedSqrt& branched() const { return sq_; }
  const CutSystem& cuts() const { return cuts_; }

 private:
  BranchedSqrt sq_;
  CutSystem cuts_;
};

}  // namespace voroslab
