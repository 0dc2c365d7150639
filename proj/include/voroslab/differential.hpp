#pragma once

#include <map>
#include <optional>
#include <string>

#include "voroslab/branch.hpp"
#include "voroslab/quadrature.hpp"

namespace voroslab {

/// Critical point of a quadratic differential phi = q0(z) dz^2 on CP^1.
/// order > 0: pole of that order; order < 0: zero of order -order.
struct CriticalPoint {
  cplx z;           // ignored when at_infinity
  bool at_infinity = false;
  int order = 0;
  std::string id;   // "p0", "p1", ..., "inf"
};

enum class PoleRegime { Circular, Radial, Spiral };

struct DoublePoleData {
  cplx r;        // leading Laurent coefficient: q0 ~ r/(z-p)^2
  cplx residue;  // signing * 4*pi*i*sqrt(r), principal branch
  PoleRegime regime;
};

struct BoundaryComponent {
  std::string pole_id;
  int marked_points;                   // pole order - 2
  std::vector<double> horizontal_angles;  // in the pole's chart, ccw sorted
  std::vector<double> vertical_angles;
};

struct MarkedBorderedSurfaceData {
  std::vector<std::string> punctures;  // pole ids of order <= 2
  std::vector<BoundaryComponent> boundary;
  int total_boundary_marked() const {
    int n = 0;
    for (auto& b : boundary) n += b.marked_points;
    return n;
  }
};

/// Rational quadratic differential with its derived critical-point data.
class QuadraticDifferential {
 public:
  QuadraticDifferential() = default;

  /// classify: derive zeros/poles (including infinity), GMN/complete flags.
  static QuadraticDifferential classify(
      Rational q0, std::map<std::string, int> signing = {});

  const Rational& q0() const { return q0_; }
  const std::vector<CriticalPoint>& zeros() const { return zeros_; }
  const std::vector<CriticalPoint>& poles() const { return poles_; }
  const std::vector<CriticalPoint>& critical_points() const { return crit_; }
  int order_at_infinity() const { return order_inf_; }
  bool gmn() const { return gmn_; }
  bool complete() const { return complete_; }
  const std::map<std::string, int>& signing() const { return signing_; }
  int signing_at(const std::string& pole_id) const;

  const CriticalPoint* find(const std::string& id) const;
  std::vector<cplx> finite_critical_positions() const;
  /// Smallest pairwise distance between finite critical points (1.0 when
  /// fewer than two exist).
  double local_scale() const;
  /// Max |z| over finite critical points (1.0 if none).
  double spread() const;

  DoublePoleData residue_double_pole(const std::string& pole_id) const;

  MarkedBorderedSurfaceData marked_bordered_surface() const;

  /// m-2 horizontal and m-2 vertical asymptotic directions at a pole of
  /// order m >= 3, in that pole's local chart (w = 1/z at infinity).
  std::pair<std::vector<double>, std::vector<double>> asymptotic_directions(
      const std::string& pole_id) const;

  /// Leading Laurent coefficient a0 of q0 at the pole, in its chart.
  cplx leading_coefficient(const std::string& pole_id) const;

  /// q0 rotated: e^{2 i theta} q0 (rotates the horizontal foliation by theta)
  QuadraticDifferential rotated(double theta) const;

 private:
  Rational q0_;
  std::vector<CriticalPoint> zeros_, poles_, crit_;
  int order_inf_ = 0;
  bool gmn_ = false, complete_ = false;
  std::map<std::string, int> signing_;
};

/// Path or cycle on the spectral cover: a plane contour plus sheet labels.
/// The branch anchor pins the first sheet; labels flip at each declared cut
/// crossing.  For a closed cycle the number of crossings must be even.
struct SheetedContour {
  Contour contour;
  std::vector<int> sheet;  // per segment: +1 first sheet, -1 second
  cplx anchor_z;
  cplx anchor_w;

  static SheetedContour on_first_sheet(Contour c, const FirstSheet& fs);
};

/// Branch-tracked integral of sqrt(q0) dz over the (sheeted) contour.
cplx sheeted_sqrt_integral(const QuadraticDifferential& phi,
                           const SheetedContour& gamma, const FirstSheet& fs,
                           double tol);

/// Period Z_gamma with the overall sign normalised to Im Z > 0
/// (Re Z > 0 as tie-break).
cplx period(const QuadraticDifferential& phi, const SheetedContour& gamma,
            const FirstSheet& fs, double tol);

/// Signed same-sheet crossing count of two closed sheeted contours.
int intersection_pairing(const SheetedContour& g1, const SheetedContour& g2,
                         const CutSystem& cuts);

/// Deterministic reference point for branch anchoring, away from the
/// critical set.
cplx default_branch_anchor(const QuadraticDifferential& phi);

/// Cut system: zeros paired through strips when pair data is supplied,
/// otherwise greedy nearest matching of branch points (simple zeros and
/// odd-order poles); an odd leftover is joined to infinity by a ray.
CutSystem make_cut_system(
    const QuadraticDifferential& phi,
    const std::vector<std::vector<cplx>>& preferred_cut_polylines = {});

}  // namespace voroslab
