#include "voroslab/differential.hpp"

#include <algorithm>
#include <cmath>

#include "voroslab/roots.hpp"

namespace voroslab {

QuadraticDifferential QuadraticDifferential::classify(
    Rational q0, std::map<std::string, int> signing) {
  if (q0.is_zero()) throw VError("zero differential", 2);
  QuadraticDifferential phi;
  phi.q0_ = q0;

  auto zs = poly_roots(q0.num());
  auto ps = q0.den().degree() > 0 ? poly_roots(q0.den())
                                  : std::vector<RootCluster>{};
  int pid = 0;
  for (auto& p : ps) {
    CriticalPoint c;
    c.z = p.root;
    c.order = p.multiplicity;
    c.id = "p" + std::to_string(pid++);
    phi.poles_.push_back(c);
  }
  for (auto& z : zs) {
    CriticalPoint c;
    c.z = z.root;
    c.order = -z.multiplicity;
    c.id = "z" + std::to_string(&z - zs.data());
    phi.zeros_.push_back(c);
  }
  // chart w = 1/z carries dz^2 -> w^-4 dw^2
  phi.order_inf_ = 4 + q0.deg_diff();
  if (phi.order_inf_ > 0) {
    CriticalPoint c;
    c.at_infinity = true;
    c.order = phi.order_inf_;
    c.id = "inf";
    phi.poles_.push_back(c);
  } else if (phi.order_inf_ < 0) {
    CriticalPoint c;
    c.at_infinity = true;
    c.order = phi.order_inf_;
    c.id = "inf";
    phi.zeros_.push_back(c);
  }

  bool simple = true;
  for (auto& z : phi.zeros_) simple = simple && (z.order == -1);
  bool has_pole = !phi.poles_.empty();
  bool finite_crit = false;
  for (auto& z : phi.zeros_) finite_crit = true, (void)z;
  for (auto& p : phi.poles_)
    if (p.order == 1) finite_crit = true;
  phi.gmn_ = simple && has_pole && finite_crit;
  phi.complete_ = true;
  for (auto& p : phi.poles_)
    if (p.order == 1) phi.complete_ = false;

  phi.crit_ = phi.zeros_;
  phi.crit_.insert(phi.crit_.end(), phi.poles_.begin(), phi.poles_.end());

  // signing must cover exactly the double poles
  for (auto& p : phi.poles_) {
    if (p.order == 2 && !signing.count(p.id)) signing[p.id] = +1;
  }
  for (auto& [id, s] : signing) {
    const CriticalPoint* c = nullptr;
    for (auto& p : phi.poles_)
      if (p.id == id) c = &p;
    if (!c || c->order != 2)
      throw VError("signing assigned to '" + id + "' which is not a double pole",
                   2);
    if (s != 1 && s != -1) throw VError("signing values must be +-1", 2);
  }
  phi.signing_ = std::move(signing);
  return phi;
}

int QuadraticDifferential::signing_at(const std::string& id) const {
  auto it = signing_.find(id);
  if (it == signing_.end()) throw VError("missing signing for " + id, 2);
  return it->second;
}

const CriticalPoint* QuadraticDifferential::find(const std::string& id) const {
  for (auto& c : crit_)
    if (c.id == id) return &c;
  return nullptr;
}

std::vector<cplx> QuadraticDifferential::finite_critical_positions() const {
  std::vector<cplx> v;
  for (auto& c : crit_)
    if (!c.at_infinity) v.push_back(c.z);
  return v;
}

double QuadraticDifferential::local_scale() const {
  auto v = finite_critical_positions();
  if (v.size() < 2) return 1.0;
  double d = 1e300;
  for (size_t i = 0; i < v.size(); ++i)
    for (size_t j = i + 1; j < v.size(); ++j)
      d = std::min(d, std::abs(v[i] - v[j]));
  return d;
}

double QuadraticDifferential::spread() const {
  double m = 0;
  for (auto& c : crit_)
    if (!c.at_infinity) m = std::max(m, std::abs(c.z));
  return std::max(m, 1.0);
}

cplx QuadraticDifferential::leading_coefficient(
    const std::string& pole_id) const {
  const CriticalPoint* p = find(pole_id);
  if (!p || p->order <= 0) throw VError("not a pole: " + pole_id, 2);
  if (p->at_infinity) {
    // q0(1/w)/w^4 ~ a0 w^-m: a0 = lim w^m q0(1/w) w^-4
    Rational qi = q0_.at_inverse_coordinate();  // q0(1/w)
    // multiply by w^{m-4}: evaluate limit via small w
    // exact: a0 = coefficient from degrees
    // q(1/w) = w^{dq-dp} rev(p)/rev(q); at w=0: rev(p)(0)/rev(q)(0) * w^{dq-dp}
    // a0 = [leading of q0 num / leading of q0 den] with m = 4 + dp - dq
    return q0_.num().leading() / q0_.den().leading();
  }
  // a0 = lim (z-p)^m q0
  Polynomial shift({-p->z, cplx(1)});
  Polynomial mono = Polynomial::constant(1);
  for (int i = 0; i < p->order; ++i) mono = mono * shift;
  Rational r = q0_ * Rational(mono, Polynomial::constant(1), false);
  return r.eval(p->z);
}

DoublePoleData QuadraticDifferential::residue_double_pole(
    const std::string& pole_id) const {
  const CriticalPoint* p = find(pole_id);
  if (!p || p->order != 2)
    throw VError("residue_double_pole: '" + pole_id + "' is not a double pole",
                 2);
  DoublePoleData d;
  d.r = leading_coefficient(pole_id);
  double s = signing_at(pole_id);
  d.residue = s * 4.0 * M_PI * cplx(0, 1) * std::sqrt(d.r);
  double re = std::abs(d.residue.real()), im = std::abs(d.residue.imag());
  double mag = std::abs(d.residue);
  if (im < 1e-10 * mag)
    d.regime = PoleRegime::Circular;
  else if (re < 1e-10 * mag)
    d.regime = PoleRegime::Radial;
  else
    d.regime = PoleRegime::Spiral;
  return d;
}

std::pair<std::vector<double>, std::vector<double>>
QuadraticDifferential::asymptotic_directions(const std::string& pole_id) const {
  const CriticalPoint* p = find(pole_id);
  if (!p || p->order < 3)
    throw VError("asymptotic directions need a pole of order >= 3", 2);
  int m = p->order;
  cplx a0 = leading_coefficient(pole_id);
  if (a0 == cplx(0)) throw VError("vanishing leading coefficient", 3);
  // horizontal: a0 z^{2-m} real positive: theta = (arg a0 - 2 pi k)/(m-2)
  std::vector<double> hor, ver;
  double aa = std::arg(a0);
  for (int k = 0; k < m - 2; ++k) {
    double th = (aa - 2 * M_PI * k) / (m - 2);
    double tv = (aa - (2 * k + 1) * M_PI) / (m - 2);
    auto wrap = [](double t) {
      while (t < 0) t += 2 * M_PI;
      while (t >= 2 * M_PI) t -= 2 * M_PI;
      return t;
    };
    hor.push_back(wrap(th));
    ver.push_back(wrap(tv));
  }
  std::sort(hor.begin(), hor.end());
  std::sort(ver.begin(), ver.end());
  return {hor, ver};
}

MarkedBorderedSurfaceData QuadraticDifferential::marked_bordered_surface()
    const {
  if (!gmn_ || !complete_)
    throw VError("marked bordered surface needs a complete GMN differential",
                 2);
  MarkedBorderedSurfaceData m;
  for (auto& p : poles_) {
    if (p.order <= 2) {
      m.punctures.push_back(p.id);
    } else {
      BoundaryComponent b;
      b.pole_id = p.id;
      b.marked_points = p.order - 2;
      auto [hor, ver] = asymptotic_directions(p.id);
      b.horizontal_angles = hor;
      b.vertical_angles = ver;
      m.boundary.push_back(b);
    }
  }
  return m;
}

QuadraticDifferential QuadraticDifferential::rotated(double theta) const {
  cplx c = std::polar(1.0, 2 * theta);
  return classify(q0_ * c, signing_);
}

// ---------------------------------------------------------------------------

cplx default_branch_anchor(const QuadraticDifferential& phi) {
  auto crit = phi.finite_critical_positions();
  cplx centroid(0);
  for (cplx c : crit) centroid += c;
  if (!crit.empty()) centroid /= double(crit.size());
  double R = 3.0 * phi.spread();
  for (int k = 0; k < 32; ++k) {
    cplx z = centroid + R * std::polar(1.0, 0.37 + 0.61 * k);
    bool ok = true;
    for (cplx c : crit) ok = ok && std::abs(z - c) > 0.5 * R;
    if (ok) return z;
  }
  return centroid + cplx(R, R);
}

CutSystem make_cut_system(
    const QuadraticDifferential& phi,
    const std::vector<std::vector<cplx>>& preferred) {
  CutSystem cs;
  // branch points: simple zeros and odd-order poles (finite ones; an odd
  // leftover pairs with infinity, which is a branch point iff its order is odd)
  std::vector<cplx> bp;
  for (auto& c : phi.critical_points())
    if (!c.at_infinity && (std::abs(c.order) % 2 == 1)) bp.push_back(c.z);

  std::vector<bool> used(bp.size(), false);
  auto mark_used = [&](cplx a) {
    for (size_t i = 0; i < bp.size(); ++i)
      if (!used[i] && std::abs(bp[i] - a) < 1e-9 * std::max(1.0, std::abs(a))) {
        used[i] = true;
        return true;
      }
    return false;
  };
  for (auto& poly : preferred) {
    if (poly.size() < 2) continue;
    if (mark_used(poly.front()) && mark_used(poly.back()))
      cs.cuts.push_back(poly);
    else
      throw VError("preferred cut does not join two unmatched branch points", 3);
  }
  // greedy nearest matching of the rest
  while (true) {
    int i0 = -1;
    for (size_t i = 0; i < bp.size(); ++i)
      if (!used[i]) {
        i0 = (int)i;
        break;
      }
    if (i0 < 0) break;
    int j0 = -1;
    double best = 1e300;
    for (size_t j = i0 + 1; j < bp.size(); ++j)
      if (!used[j] && std::abs(bp[j] - bp[i0]) < best) {
        best = std::abs(bp[j] - bp[i0]);
        j0 = (int)j;
      }
    used[i0] = true;
    if (j0 < 0) {
      // odd count: infinity is a branch point; cut = ray to large radius
      double R = 20.0 * phi.spread();
      cplx dir = (bp[i0] == cplx(0)) ? cplx(1) : bp[i0] / std::abs(bp[i0]);
      cs.cuts.push_back({bp[i0], bp[i0] + R * dir});
      break;
    }
    used[j0] = true;
    cs.cuts.push_back({bp[i0], bp[j0]});
  }
  return cs;
}

SheetedContour SheetedContour::on_first_sheet(Contour c, const FirstSheet& fs) {
  SheetedContour sc;
  sc.contour = std::move(c);
  sc.anchor_z = fs.branched().z_ref();
  sc.anchor_w = fs.branched().w_ref();
  int sheet = 1;
  auto& cuts = fs.cuts();
  for (auto& seg : sc.contour.segments()) {
    sc.sheet.push_back(sheet);
    // flips accumulated while walking this segment
    std::vector<cplx> pts;
    for (int k = 0; k <= 64; ++k) pts.push_back(seg.point(k / 64.0));
    for (size_t i = 0; i + 1 < pts.size(); ++i)
      if (cuts.crossings(pts[i], pts[i + 1]) % 2 == 1) sheet = -sheet;
  }
  return sc;
}

cplx sheeted_sqrt_integral(const QuadraticDifferential& phi,
                           const SheetedContour& gamma, const FirstSheet& fs,
                           double tol) {
  check_clearance(gamma.contour, phi.finite_critical_positions(),
                  1e-3 * phi.local_scale());
  // Continuity-track sqrt(q0) along the whole contour; this equals the
  // integral over the lifted path starting on the sheet of the first sample.
  cplx value(0);
  const auto& segs = gamma.contour.segments();
  cplx wprev;
  bool have_w = false;
  for (size_t si = 0; si < segs.size(); ++si) {
    const Segment& s = segs[si];
    if (!have_w) {
      cplx w0 = fs.value(s.point(0));
      if (!gamma.sheet.empty() && gamma.sheet[si] < 0) w0 = -w0;
      wprev = w0;
      have_w = true;
    } else {
      wprev = fs.branched().continue_along(segs[si - 1].point(1), wprev,
                                           s.point(0));
    }
    // integrate with a tracked reference updated along the segment
    cplx wref = wprev;
    cplx zref = s.point(0);
    auto f = [&](double t) -> cplx {
      cplx z = s.point(t);
      cplx w = fs.branched().continue_along(zref, wref, z);
      return w * s.dpoint(t);
    };
    // march in blocks so the tracked reference never lags far behind
    int blocks = std::max(4, (int)std::ceil(s.length() /
                                            (0.25 * phi.local_scale())));
    for (int b = 0; b < blocks; ++b) {
      double t0 = double(b) / blocks, t1 = double(b + 1) / blocks;
      QuadResult r = integrate_adaptive(f, t0, t1, tol / segs.size() / blocks);
      if (!r.converged) throw VError("period quadrature did not converge", 3);
      value += r.value;
      wref = fs.branched().continue_along(zref, wref, s.point(t1));
      zref = s.point(t1);
    }
    wprev = wref;
  }
  return value;
}

cplx period(const QuadraticDifferential& phi, const SheetedContour& gamma,
            const FirstSheet& fs, double tol) {
  if (!gamma.contour.closed()) throw VError("period needs a closed cycle", 2);
  cplx Z = sheeted_sqrt_integral(phi, gamma, fs, tol);
  if (Z.imag() < 0) Z = -Z;
  if (std::abs(Z.imag()) < 1e-12 * std::abs(Z) && Z.real() < 0) Z = -Z;
  return Z;
}

int intersection_pairing(const SheetedContour& g1, const SheetedContour& g2,
                         const CutSystem& cuts) {
  if (!g1.contour.closed() || !g2.contour.closed())
    throw VError("intersection pairing needs closed cycles", 2);
  auto sampled = [&](const SheetedContour& g) {
    std::vector<std::pair<cplx, int>> pts;  // point, sheet at that point
    int sheet = 1;
    const auto& segs = g.contour.segments();
    for (size_t si = 0; si < segs.size(); ++si) {
      int base = g.sheet.empty() ? sheet : g.sheet[si];
      sheet = base;
      cplx prev = segs[si].point(0);
      for (int k = 0; k < 96; ++k) {
        cplx zk = segs[si].point(k / 96.0);
        if (k > 0 && cuts.crossings(prev, zk) % 2 == 1) sheet = -sheet;
        pts.push_back({zk, sheet});
        prev = zk;
      }
    }
    pts.push_back(pts.front());
    return pts;
  };

  for (int attempt = 0; attempt < 4; ++attempt) {
    cplx off = attempt == 0
                   ? cplx(0)
                   : 1e-4 * double(attempt) * std::polar(1.0, 0.7 * attempt);
    auto p1 = sampled(g1);
    auto p2 = sampled(g2);
    for (auto& q : p2) q.first += off;
    int total = 0;
    bool degenerate = false;
    for (size_t i = 0; i + 1 < p1.size(); ++i) {
      for (size_t j = 0; j + 1 < p2.size(); ++j) {
        int s = segments_cross_signed(p1[i].first, p1[i + 1].first,
                                      p2[j].first, p2[j + 1].first);
        if (s == 0) continue;
        // near-endpoint crossings are unreliable: retry perturbed
        if (std::abs(p1[i].first - p2[j].first) < 1e-12) {
          degenerate = true;
          break;
        }
        if (p1[i].second == p2[j].second) total += s;
      }
      if (degenerate) break;
    }
    if (!degenerate) return total;
  }
  throw VError("intersection pairing: non-transverse after perturbation", 3);
}

}  // namespace voroslab
