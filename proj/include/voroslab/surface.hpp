#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "voroslab/polynomial.hpp"

namespace voroslab {

/// Combinatorics of marked bordered surfaces: ideal/signed/tagged
/// triangulations, flips, exchange matrices and cluster X-mutation.
/// Everything here is independent of the analytic modules.

struct MarkedPoint {
  std::string id;
  bool is_puncture = false;
};

/// A triangle side refers either to an internal arc or a boundary segment.
struct TriSide {
  enum Kind { ArcSide, BoundarySide } kind = ArcSide;
  int index = -1;  // arc index or boundary segment index
  bool operator==(const TriSide& o) const {
    return kind == o.kind && index == o.index;
  }
};

struct Triangle {
  // sides in counterclockwise order around the triangle
  std::array<TriSide, 3> sides;
};

struct Arc {
  std::string from, to;  // marked point ids
};

struct BoundarySegment {
  std::string from, to;
};

class IdealTriangulation {
 public:
  std::vector<MarkedPoint> points;
  std::vector<Arc> arcs;
  std::vector<BoundarySegment> boundary;
  std::vector<Triangle> triangles;
  // interior edge j -> encircling loop k
  std::map<int, int> self_folded;

  const MarkedPoint* point(const std::string& id) const {
    for (auto& p : points)
      if (p.id == id) return &p;
    return nullptr;
  }
  int puncture_count() const {
    int n = 0;
    for (auto& p : points)
      if (p.is_puncture) ++n;
    return n;
  }
  int boundary_marked_count() const {
    int n = 0;
    for (auto& p : points)
      if (!p.is_puncture) ++n;
    return n;
  }

  bool is_self_folded_interior(int arc) const {
    return self_folded.count(arc) > 0;
  }
  bool is_self_folded_loop(int arc) const {
    for (auto& [j, k] : self_folded)
      if (k == arc) return true;
    return false;
  }

  /// Triangle indices having the arc as a side (with multiplicity).
  std::vector<int> triangles_with_arc(int arc) const;

  void validate() const;  // incidence and arc-count checks (genus 0)
};

struct ExchangeMatrix {
  // dense skew-symmetric, indexed by internal arcs
  std::vector<std::vector<int>> e;
  int size() const { return (int)e.size(); }
  int at(int j, int k) const { return e[j][k]; }
  void check_skew() const;
  /// standard matrix mutation at k
  ExchangeMatrix mutated(int k) const;
};

ExchangeMatrix exchange_matrix(const IdealTriangulation& T);

/// Quadrilateral of an arc: vertex ids (c1, c2, c3, c4) in counterclockwise
/// order with the arc joining c1 and c3, plus the two flanking triangles.
struct ArcQuadrilateral {
  std::array<std::string, 4> vertices;
  int tri_left = -1, tri_right = -1;
};

ArcQuadrilateral arc_quadrilateral(const IdealTriangulation& T, int arc);

/// Flip of a plain (non-self-folded-interior) arc.  Flipping the encircling
/// loop of a self-folded triangle is only defined at the tagged level; use
/// tagged_flip for that case.
IdealTriangulation flip(const IdealTriangulation& T, int arc);

struct SignedTriangulation {
  IdealTriangulation T;
  std::map<std::string, int> eps;  // puncture id -> +-1
};

/// Tagged triangulation: equivalence class of signed triangulations under
/// resigning at interior punctures of self-folded triangles.  Stored via the
/// canonical representative (eps = +1 at every self-folded interior puncture).
class TaggedTriangulation {
 public:
  explicit TaggedTriangulation(SignedTriangulation s);
  const SignedTriangulation& rep() const { return rep_; }
  bool operator==(const TaggedTriangulation& o) const;

 private:
  SignedTriangulation rep_;
};

/// (Z/2Z)^P action: pointwise multiplication of the signing.
TaggedTriangulation tagged_action(const std::map<std::string, int>& sign,
                                  const TaggedTriangulation& tau);

/// Cluster X-mutation at arc k.  Convention: X'_k = 1/X_k and for j != k
///   X'_j = X_j (1 + X_k)^{e_jk}        if e_jk >= 0
///   X'_j = X_j (1 + 1/X_k)^{e_jk}      if e_jk < 0.
std::vector<cplx> x_mutation(const std::vector<cplx>& X, int k,
                             const ExchangeMatrix& eps);

/// Triangulated disk with n boundary marked points, fan triangulation at v0.
IdealTriangulation disk_fan(int n);

/// Once-punctured digon, symmetric triangulation: arcs v0-p and v1-p.
IdealTriangulation punctured_digon_symmetric();

/// Once-punctured digon, self-folded triangulation at base vertex v0:
/// arc 0 = interior edge v0-p, arc 1 = loop at v0 encircling p.
IdealTriangulation punctured_digon_self_folded();

}  // namespace voroslab
