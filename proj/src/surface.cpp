#include "voroslab/surface.hpp"

#include <algorithm>

namespace voroslab {

std::vector<int> IdealTriangulation::triangles_with_arc(int arc) const {
  std::vector<int> out;
  for (int t = 0; t < (int)triangles.size(); ++t)
    for (auto& s : triangles[t].sides)
      if (s.kind == TriSide::ArcSide && s.index == arc) out.push_back(t);
  return out;
}

namespace {

struct DirectedSide {
  std::string from, to;
};

std::pair<std::string, std::string> side_endpoints(
    const IdealTriangulation& T, const TriSide& s) {
  if (s.kind == TriSide::ArcSide)
    return {T.arcs[s.index].from, T.arcs[s.index].to};
  return {T.boundary[s.index].from, T.boundary[s.index].to};
}

// Directed traversal of the triangle's sides: slot 0 runs from->to by
// convention, the rest chain head-to-tail.
std::array<DirectedSide, 3> chain_cycle(const IdealTriangulation& T,
                                        const Triangle& tri) {
  std::array<DirectedSide, 3> out;
  auto [f0, t0] = side_endpoints(T, tri.sides[0]);
  out[0] = {f0, t0};
  std::string head = t0;
  for (int i = 1; i < 3; ++i) {
    auto [f, t] = side_endpoints(T, tri.sides[i]);
    if (f == head) {
      out[i] = {f, t};
      head = t;
    } else if (t == head) {
      out[i] = {t, f};
      head = f;
    } else {
      throw VError("triangle sides do not chain", 3);
    }
  }
  if (head != f0) throw VError("triangle boundary does not close", 3);
  return out;
}

}  // namespace

void IdealTriangulation::validate() const {
  for (int a = 0; a < (int)arcs.size(); ++a) {
    int slots = 0;
    for (auto& tri : triangles)
      for (auto& s : tri.sides)
        if (s.kind == TriSide::ArcSide && s.index == a) ++slots;
    if (slots != 2)
      throw VError("arc " + std::to_string(a) + " is a side of " +
                       std::to_string(slots) + " slots (want 2)",
                   3);
  }
  for (auto& tri : triangles) (void)chain_cycle(*this, tri);
  int b = boundary_marked_count(), p = puncture_count();
  if (b > 0) {
    int expect = b + 3 * p - 3;
    if ((int)arcs.size() != expect)
      throw VError("arc count " + std::to_string(arcs.size()) +
                       " != b + 3p - 3 = " + std::to_string(expect),
                   3);
  }
}

void ExchangeMatrix::check_skew() const {
  for (int j = 0; j < size(); ++j)
    for (int k = 0; k < size(); ++k) {
      if (e[j][k] != -e[k][j]) throw VError("exchange matrix not skew", 3);
      if (std::abs(e[j][k]) > 2) throw VError("exchange entry out of range", 3);
    }
}

ExchangeMatrix ExchangeMatrix::mutated(int k) const {
  ExchangeMatrix m = *this;
  int n = size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == k || j == k)
        m.e[i][j] = -e[i][j];
      else
        m.e[i][j] = e[i][j] +
                    (std::abs(e[i][k]) * e[k][j] + e[i][k] * std::abs(e[k][j])) /
                        2;
    }
  return m;
}

ExchangeMatrix exchange_matrix(const IdealTriangulation& T) {
  int n = (int)T.arcs.size();
  ExchangeMatrix m;
  m.e.assign(n, std::vector<int>(n, 0));

  // a side contributes to itself, plus to the interior edge when it is the
  // encircling loop of a self-folded triangle
  auto expand = [&](const TriSide& s) {
    std::vector<int> v;
    if (s.kind != TriSide::ArcSide) return v;
    v.push_back(s.index);
    for (auto& [j, k] : T.self_folded)
      if (k == s.index) v.push_back(j);
    return v;
  };

  for (auto& tri : T.triangles) {
    bool selffolded = false;
    for (int i = 0; i < 3; ++i)
      for (int l = i + 1; l < 3; ++l)
        if (tri.sides[i] == tri.sides[l]) selffolded = true;
    if (selffolded) continue;
    for (int i = 0; i < 3; ++i) {
      // convention fixed by the flip-consistency tests:
      // eps[j][k] += 1 when arc j immediately follows arc k counterclockwise
      for (int k : expand(tri.sides[i]))
        for (int j : expand(tri.sides[(i + 1) % 3])) {
          m.e[j][k] += 1;
          m.e[k][j] -= 1;
        }
    }
  }
  m.check_skew();
  return m;
}

namespace {

std::pair<Triangle, std::array<DirectedSide, 3>> rotate_to_front(
    const IdealTriangulation& T, Triangle tri, int arc, int occurrence) {
  auto cyc = chain_cycle(T, tri);
  int hits = 0;
  for (int r = 0; r < 3; ++r) {
    if (tri.sides[0].kind == TriSide::ArcSide && tri.sides[0].index == arc) {
      ++hits;
      if (hits > occurrence) return {tri, cyc};
    }
    std::rotate(tri.sides.begin(), tri.sides.begin() + 1, tri.sides.end());
    std::rotate(cyc.begin(), cyc.begin() + 1, cyc.end());
  }
  throw VError("arc not found in triangle", 3);
}

}  // namespace

ArcQuadrilateral arc_quadrilateral(const IdealTriangulation& T, int arc) {
  if (T.is_self_folded_interior(arc))
    throw VError("quadrilateral of a self-folded interior edge is not plain",
                 2);
  auto ts = T.triangles_with_arc(arc);
  if (ts.size() != 2) throw VError("arc does not bound two triangle slots", 3);
  bool same = (ts[0] == ts[1]);
  auto [t1, c1] = rotate_to_front(T, T.triangles[ts[0]], arc, 0);
  auto [t2, c2] = same ? rotate_to_front(T, T.triangles[ts[0]], arc, 1)
                       : rotate_to_front(T, T.triangles[ts[1]], arc, 0);
  (void)t1;
  (void)t2;
  if (!(c2[0].from == c1[0].to && c2[0].to == c1[0].from))
    throw VError("arc traversed equally in both triangles", 3);
  ArcQuadrilateral q;
  q.tri_left = ts[0];
  q.tri_right = ts[1];
  // t1: (arc: u->v, x1: v->w1, y1: w1->u); t2: (arc: v->u, x2: u->w2, y2: w2->v)
  // ccw quadrilateral (u, w2, v, w1) with the arc joining c1 = u, c3 = v
  q.vertices = {c1[0].from, c2[1].to, c1[0].to, c1[1].to};
  return q;
}

IdealTriangulation flip(const IdealTriangulation& T, int arc) {
  if (T.is_self_folded_interior(arc))
    throw VError("not flippable as plain arc (self-folded interior edge)", 2);
  auto ts = T.triangles_with_arc(arc);
  if (ts.size() != 2 || ts[0] == ts[1])
    throw VError("flip needs the arc to bound two distinct triangles", 3);

  auto [t1, c1] = rotate_to_front(T, T.triangles[ts[0]], arc, 0);
  auto [t2, c2] = rotate_to_front(T, T.triangles[ts[1]], arc, 0);
  std::string u = c1[0].from, v = c1[0].to;
  std::string w1 = c1[1].to, w2 = c2[1].to;
  if (!(c2[0].from == v && c2[0].to == u))
    throw VError("inconsistent arc traversal", 3);

  IdealTriangulation R = T;
  R.arcs[arc] = Arc{w2, w1};
  Triangle d1;  // (u, w2, w1): x2, arc', y1
  d1.sides = {t2.sides[1], TriSide{TriSide::ArcSide, arc}, t1.sides[2]};
  Triangle d2;  // (w2, v, w1): y2, x1, arc'
  d2.sides = {t2.sides[2], t1.sides[1], TriSide{TriSide::ArcSide, arc}};
  R.triangles[ts[0]] = d1;
  R.triangles[ts[1]] = d2;

  // restore the slot-0 direction convention by rotating until the cycle chains
  auto orient = [&](int tidx, const std::string& from, const std::string& to) {
    Triangle& d = R.triangles[tidx];
    for (int r = 0; r < 3; ++r) {
      auto [f, t] = side_endpoints(R, d.sides[0]);
      if (f == from && (t == to || to.empty())) {
        try {
          (void)chain_cycle(R, d);
          return;
        } catch (const VError&) {
        }
      }
      std::rotate(d.sides.begin(), d.sides.begin() + 1, d.sides.end());
    }
    // fall back: reverse the slot-0 record
    TriSide s = d.sides[0];
    if (s.kind == TriSide::ArcSide)
      std::swap(R.arcs[s.index].from, R.arcs[s.index].to);
    else
      std::swap(R.boundary[s.index].from, R.boundary[s.index].to);
    (void)chain_cycle(R, d);
  };
  orient(ts[0], u, w2);
  orient(ts[1], w2, v);

  R.self_folded.clear();
  for (auto& tri : R.triangles) {
    for (int i = 0; i < 3; ++i)
      for (int l = i + 1; l < 3; ++l)
        if (tri.sides[i] == tri.sides[l] &&
            tri.sides[i].kind == TriSide::ArcSide) {
          int interior = tri.sides[i].index;
          for (int m2 = 0; m2 < 3; ++m2)
            if (!(tri.sides[m2] == tri.sides[i]))
              R.self_folded[interior] = tri.sides[m2].index;
        }
  }
  R.validate();
  return R;
}

// ---------------------------------------------------------------------------

TaggedTriangulation::TaggedTriangulation(SignedTriangulation s)
    : rep_(std::move(s)) {
  for (auto& [j, k] : rep_.T.self_folded) {
    const Arc& a = rep_.T.arcs[j];
    for (const std::string& end : {a.from, a.to}) {
      const MarkedPoint* mp = rep_.T.point(end);
      if (mp && mp->is_puncture) rep_.eps[end] = +1;
    }
  }
}

bool TaggedTriangulation::operator==(const TaggedTriangulation& o) const {
  auto& A = rep_;
  auto& B = o.rep_;
  if (A.eps != B.eps) return false;
  if (A.T.arcs.size() != B.T.arcs.size()) return false;
  for (size_t i = 0; i < A.T.arcs.size(); ++i) {
    auto &a = A.T.arcs[i], &b = B.T.arcs[i];
    bool sameArc = (a.from == b.from && a.to == b.to) ||
                   (a.from == b.to && a.to == b.from);
    if (!sameArc) return false;
  }
  return A.T.self_folded == B.T.self_folded;
}

TaggedTriangulation tagged_action(const std::map<std::string, int>& sign,
                                  const TaggedTriangulation& tau) {
  SignedTriangulation s = tau.rep();
  for (auto& [p, v] : sign) {
    if (!s.eps.count(p))
      throw VError("sign action at unknown puncture " + p, 2);
    s.eps[p] *= v;
  }
  return TaggedTriangulation(std::move(s));
}

std::vector<cplx> x_mutation(const std::vector<cplx>& X, int k,
                             const ExchangeMatrix& eps) {
  if (k < 0 || k >= (int)X.size())
    throw VError("mutation index out of range", 2);
  cplx xk = X[k];
  if (xk == cplx(0) || std::abs(xk + cplx(1)) < 1e-300)
    throw VError("mutation pole: X_k in {0, -1}", 2);
  std::vector<cplx> out(X.size());
  out[k] = cplx(1) / xk;
  for (int j = 0; j < (int)X.size(); ++j) {
    if (j == k) continue;
    int e = eps.at(j, k);
    cplx f(1);
    if (e >= 0)
      for (int i = 0; i < e; ++i) f *= (cplx(1) + xk);
    else
      for (int i = 0; i < -e; ++i) f /= (cplx(1) + cplx(1) / xk);
    out[j] = X[j] * f;
  }
  return out;
}

// ---------------------------------------------------------------------------

IdealTriangulation disk_fan(int n) {
  if (n < 3) throw VError("disk needs >= 3 marked points", 2);
  IdealTriangulation T;
  for (int i = 0; i < n; ++i)
    T.points.push_back({"v" + std::to_string(i), false});
  for (int i = 0; i < n; ++i)
    T.boundary.push_back(
        {"v" + std::to_string(i), "v" + std::to_string((i + 1) % n)});
  for (int i = 0; i + 3 < n; ++i)
    T.arcs.push_back({"v0", "v" + std::to_string(i + 2)});
  for (int i = 0; i + 2 < n; ++i) {
    Triangle t;
    TriSide first = i == 0 ? TriSide{TriSide::BoundarySide, 0}
                           : TriSide{TriSide::ArcSide, i - 1};
    TriSide second = TriSide{TriSide::BoundarySide, i + 1};
    TriSide third = (i + 3 == n) ? TriSide{TriSide::BoundarySide, n - 1}
                                 : TriSide{TriSide::ArcSide, i};
    t.sides = {first, second, third};
    T.triangles.push_back(t);
  }
  T.validate();
  return T;
}

IdealTriangulation punctured_digon_symmetric() {
  IdealTriangulation T;
  T.points = {{"v0", false}, {"v1", false}, {"p", true}};
  T.boundary = {{"v1", "v0"}, {"v0", "v1"}};  // upper (ccw), lower
  T.arcs = {{"v0", "p"}, {"v1", "p"}};
  Triangle up;  // v1 -> v0 (s0), v0 -> p (a0), p -> v1 (a1)
  up.sides = {TriSide{TriSide::BoundarySide, 0}, TriSide{TriSide::ArcSide, 0},
              TriSide{TriSide::ArcSide, 1}};
  Triangle lo;  // v0 -> v1 (s1), v1 -> p (a1), p -> v0 (a0)
  lo.sides = {TriSide{TriSide::BoundarySide, 1}, TriSide{TriSide::ArcSide, 1},
              TriSide{TriSide::ArcSide, 0}};
  T.triangles = {up, lo};
  T.validate();
  return T;
}

IdealTriangulation punctured_digon_self_folded() {
  IdealTriangulation T;
  T.points = {{"v0", false}, {"v1", false}, {"p", true}};
  T.boundary = {{"v1", "v0"}, {"v0", "v1"}};
  T.arcs = {{"v1", "p"}, {"v1", "v1"}};  // 0: interior edge j, 1: loop k
  Triangle outer;  // v0 -> v1 (s1), v1 -> v1 (k), v1 -> v0 (s0)
  outer.sides = {TriSide{TriSide::BoundarySide, 1},
                 TriSide{TriSide::ArcSide, 1},
                 TriSide{TriSide::BoundarySide, 0}};
  Triangle self;  // v1 -> p (j), p -> v1 (j), v1 -> v1 (k)
  self.sides = {TriSide{TriSide::ArcSide, 0}, TriSide{TriSide::ArcSide, 0},
                TriSide{TriSide::ArcSide, 1}};
  T.triangles = {outer, self};
  T.self_folded = {{0, 1}};
  T.validate();
  return T;
}

}  // namespace voroslab
