#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "voroslab/differential.hpp"

using namespace voroslab;

namespace {

Rational rat(std::initializer_list<cplx> num, std::initializer_list<cplx> den) {
  return Rational(Polynomial(num), Polynomial(den));
}

QuadraticDifferential airy() { return QuadraticDifferential::classify(rat({0, 1}, {1})); }
QuadraticDifferential weber() {
  return QuadraticDifferential::classify(rat({-1, 0, 1}, {1}));
}
QuadraticDifferential digon_circular() {
  return QuadraticDifferential::classify(rat({-1, 0, 1}, {0, 0, 1}));
}

FirstSheet weber_first_sheet() {
  auto phi = weber();
  CutSystem cuts = make_cut_system(phi);
  cplx zr = default_branch_anchor(phi);
  return FirstSheet(BranchedSqrt::principal_at(phi.q0(), zr), cuts);
}

}  // namespace

TEST_CASE("classify: Airy, Weber, digon") {
  auto a = airy();
  REQUIRE(a.zeros().size() == 1);
  CHECK(std::abs(a.zeros()[0].z) < 1e-12);
  CHECK(a.order_at_infinity() == 5);
  CHECK(a.gmn());
  CHECK(a.complete());

  auto w = weber();
  REQUIRE(w.zeros().size() == 2);
  CHECK(w.order_at_infinity() == 6);
  CHECK(w.gmn());
  CHECK(w.complete());

  auto d = digon_circular();
  REQUIRE(d.zeros().size() == 2);
  REQUIRE(d.poles().size() == 2);
  int finite_pole_order = 0, inf_order = 0;
  for (auto& p : d.poles())
    (p.at_infinity ? inf_order : finite_pole_order) = p.order;
  CHECK(finite_pole_order == 2);
  CHECK(inf_order == 4);
  CHECK(d.gmn());
  CHECK(d.complete());
}

TEST_CASE("classify: pole-order bookkeeping deg(phi) = -4") {
  for (auto phi : {airy(), weber(), digon_circular()}) {
    int pole_orders = 0, zero_orders = 0;
    for (auto& p : phi.poles()) pole_orders += p.order;
    for (auto& z : phi.zeros()) zero_orders += -z.order;
    CHECK(pole_orders - zero_orders == 4);
  }
}

TEST_CASE("residue_double_pole: local models and trichotomy") {
  // q0 = 1/z^2, signing +1: r = 1, residue 4*pi*i, radial
  auto phi = QuadraticDifferential::classify(rat({1}, {0, 0, 1}), {{"p0", 1}});
  auto d = phi.residue_double_pole("p0");
  CHECK(std::abs(d.r - cplx(1)) < 1e-12);
  CHECK(std::abs(d.residue - cplx(0, 4 * M_PI)) < 1e-10);
  CHECK(d.regime == PoleRegime::Radial);

  // r = -1/4: residue = 4*pi*i*(i/2) = -2*pi, circular
  auto phi2 =
      QuadraticDifferential::classify(rat({-0.25}, {0, 0, 1}), {{"p0", 1}});
  auto d2 = phi2.residue_double_pole("p0");
  CHECK(std::abs(d2.residue - cplx(-2 * M_PI)) < 1e-10);
  CHECK(d2.regime == PoleRegime::Circular);

  // r = e^{i pi/4}: spiral
  auto phi3 = QuadraticDifferential::classify(
      rat({std::polar(1.0, M_PI / 4)}, {0, 0, 1}), {{"p0", 1}});
  CHECK(phi3.residue_double_pole("p0").regime == PoleRegime::Spiral);

  CHECK_THROWS_AS(weber().residue_double_pole("inf"), VError);
}

TEST_CASE("period: Weber loop = i pi after normalisation") {
  auto phi = weber();
  FirstSheet fs = weber_first_sheet();
  auto loop = SheetedContour::on_first_sheet(
      Contour::loop_around_polyline({cplx(-1), cplx(1)}, 0.7), fs);
  cplx Z = period(phi, loop, fs, 1e-10);
  CHECK(std::abs(Z - cplx(0, M_PI)) < 1e-8);
}

TEST_CASE("period: small circle around a double pole") {
  cplx a(0.4, 0.3);
  auto phi = QuadraticDifferential::classify(
      rat({a}, {0, 0, 1}), {{"p0", 1}});
  CutSystem cuts;  // no branch points
  FirstSheet fs(BranchedSqrt::principal_at(phi.q0(), cplx(5)), cuts);
  auto beta = SheetedContour::on_first_sheet(Contour::circle(cplx(0), 0.5), fs);
  cplx I = sheeted_sqrt_integral(phi, beta, fs, 1e-12);
  cplx expected = 2.0 * M_PI * cplx(0, 1) * std::sqrt(a);
  CHECK(std::abs(std::abs(I) - std::abs(expected)) < 1e-10);
  CHECK((std::abs(I - expected) < 1e-10 || std::abs(I + expected) < 1e-10));
}

TEST_CASE("period: homogeneity under q0 -> c^2 q0") {
  auto phi = weber();
  FirstSheet fs = weber_first_sheet();
  auto loop = SheetedContour::on_first_sheet(
      Contour::loop_around_polyline({cplx(-1), cplx(1)}, 0.6), fs);
  cplx Z = sheeted_sqrt_integral(phi, loop, fs, 1e-10);

  cplx c(1.3, 0.4);
  auto phi2 = QuadraticDifferential::classify(phi.q0() * (c * c));
  FirstSheet fs2(
      BranchedSqrt(phi2.q0(), fs.branched().z_ref(),
                   c * fs.branched().w_ref()),
      fs.cuts());
  auto loop2 = SheetedContour::on_first_sheet(loop.contour, fs2);
  cplx Z2 = sheeted_sqrt_integral(phi2, loop2, fs2, 1e-10);
  CHECK(std::abs(Z2 - c * Z) < 1e-8 * std::abs(Z2));
}

TEST_CASE("period: reversal negates; homotopy invariance") {
  auto phi = weber();
  FirstSheet fs = weber_first_sheet();
  auto c1 = Contour::loop_around_polyline({cplx(-1), cplx(1)}, 0.5);
  auto c2 = Contour::loop_around_polyline({cplx(-1, 0.1), cplx(1, -0.05)}, 0.8);
  auto g1 = SheetedContour::on_first_sheet(c1, fs);
  auto g2 = SheetedContour::on_first_sheet(c2, fs);
  cplx I1 = sheeted_sqrt_integral(phi, g1, fs, 1e-10);
  cplx I1r = sheeted_sqrt_integral(
      phi, SheetedContour::on_first_sheet(c1.reversed(), fs), fs, 1e-10);
  CHECK(std::abs(I1 + I1r) < 1e-9);
  cplx I2 = sheeted_sqrt_integral(phi, g2, fs, 1e-10);
  CHECK(std::abs(I1 - I2) < 1e-8);
}

TEST_CASE("residue consistency: signing * 2 * loop integral = +- residue") {
  cplx a(0.7, -0.2);
  auto phi =
      QuadraticDifferential::classify(rat({a}, {0, 0, 1}), {{"p0", -1}});
  CutSystem cuts;
  FirstSheet fs(BranchedSqrt::principal_at(phi.q0(), cplx(4)), cuts);
  auto beta = SheetedContour::on_first_sheet(Contour::circle(cplx(0), 0.4), fs);
  cplx I = sheeted_sqrt_integral(phi, beta, fs, 1e-12);
  auto d = phi.residue_double_pole("p0");
  double sgn = phi.signing_at("p0");
  cplx lhs = sgn * 2.0 * I;
  CHECK((std::abs(lhs - d.residue) < 1e-10 * std::abs(d.residue) ||
         std::abs(lhs + d.residue) < 1e-10 * std::abs(d.residue)));
}

TEST_CASE("marked bordered surface: Airy disk-3, Weber disk-4, digon") {
  auto ma = airy().marked_bordered_surface();
  CHECK(ma.punctures.empty());
  REQUIRE(ma.boundary.size() == 1);
  CHECK(ma.boundary[0].marked_points == 3);

  auto mw = weber().marked_bordered_surface();
  CHECK(mw.punctures.empty());
  REQUIRE(mw.boundary.size() == 1);
  CHECK(mw.boundary[0].marked_points == 4);

  auto md = digon_circular().marked_bordered_surface();
  CHECK(md.punctures.size() == 1);
  REQUIRE(md.boundary.size() == 1);
  CHECK(md.boundary[0].marked_points == 2);

  auto bad = QuadraticDifferential::classify(rat({0, 0, 1}, {1}));  // z^2
  CHECK(bad.gmn() == false);  // double zero
  CHECK_THROWS_AS(bad.marked_bordered_surface(), VError);
}

TEST_CASE("asymptotic directions: Airy and Weber at infinity; rotation") {
  auto [ha, va] = airy().asymptotic_directions("inf");
  REQUIRE(ha.size() == 3);
  for (int k = 0; k < 3; ++k) CHECK(std::abs(ha[k] - 2 * M_PI * k / 3) < 1e-12);
  REQUIRE(va.size() == 3);

  auto [hw, vw] = weber().asymptotic_directions("inf");
  REQUIRE(hw.size() == 4);
  for (int k = 0; k < 4; ++k) CHECK(std::abs(hw[k] - M_PI * k / 2) < 1e-12);

  // e^{i theta} q0 shifts horizontal angles by theta/(m-2) in the pole chart
  // (equivalently by -theta/(m-2) in the z-chart at infinity)
  double theta = 0.3;
  auto rot = QuadraticDifferential::classify(weber().q0() *
                                             std::polar(1.0, theta));
  auto [hr, vr] = rot.asymptotic_directions("inf");
  double shift = theta / 4;  // m - 2 = 4
  for (double h0 : hw) {
    double want = h0 + shift;
    while (want < 0) want += 2 * M_PI;
    double best = 1e300;
    for (double h1 : hr) best = std::min(best, std::abs(h1 - want));
    CHECK(best < 1e-10);
  }

  CHECK_THROWS_AS(digon_circular().asymptotic_directions("p0"), VError);
}

TEST_CASE("intersection pairing: disjoint loops and perturbed copy") {
  auto phi = weber();
  FirstSheet fs = weber_first_sheet();
  auto g1 = SheetedContour::on_first_sheet(Contour::circle(cplx(-1), 0.3), fs);
  auto g2 = SheetedContour::on_first_sheet(Contour::circle(cplx(1), 0.3), fs);
  CHECK(intersection_pairing(g1, g2, fs.cuts()) == 0);
  auto g1b =
      SheetedContour::on_first_sheet(Contour::circle(cplx(-1), 0.31), fs);
  CHECK(intersection_pairing(g1, g1b, fs.cuts()) == 0);
}

TEST_CASE("signing validation") {
  CHECK_THROWS_AS(
      QuadraticDifferential::classify(rat({-1, 0, 1}, {1}), {{"p0", 1}}),
      VError);
  CHECK_THROWS_AS(
      QuadraticDifferential::classify(rat({1}, {0, 0, 1}), {{"p0", 2}}),
      VError);
}
