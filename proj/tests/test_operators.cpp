#include <doctest.h>

#include "harmolift/errors.hpp"
#include "harmolift/forms.hpp"
#include "harmolift/lift.hpp"
#include "harmolift/operators.hpp"

using namespace harmolift;

namespace {

SampledFunction fn(std::function<cplx(const UhpPoint&)> f, double min_y = 0.0) {
  return {std::move(f), 1e-15, min_y};
}

SampledFunction y_power(cplx a) {
  return fn([a](const UhpPoint& z) { return std::pow(cplx(z.y), a); });
}

const std::vector<UhpPoint>& points() {
  static const std::vector<UhpPoint> pts{{0.0, 1.0}, {0.3, 0.6}, {-0.4, 1.7}, {0.1, 2.0}};
  return pts;
}

}  // namespace

TEST_CASE("config validation") {
  CHECK_NOTHROW(validate(DiffConfig{}));
  CHECK_THROWS_AS(validate(DiffConfig{0.0}), std::invalid_argument);
  CHECK_THROWS_AS(validate(DiffConfig{0.5}), std::invalid_argument);
}

TEST_CASE("Wirtinger derivatives") {
  const auto zbar = fn([](const UhpPoint& z) { return std::conj(z.z()); });
  const auto zsq = fn([](const UhpPoint& z) { return z.z() * z.z(); });
  const auto q = fn([](const UhpPoint& z) { return std::exp(2.0 * pi * I * z.z()); });
  const UhpPoint z(1.0, 1.0);
  CHECK(std::abs(d_zbar(zbar, z) - 1.0) < 1e-10);
  CHECK(std::abs(d_z(zsq, z) - cplx(2.0, 2.0)) < 1e-8);
  CHECK(std::abs(d_zbar(q, UhpPoint(0.2, 0.8))) < 1e-8);
}

TEST_CASE("stencil below the accuracy region is refused") {
  const auto f = fn([](const UhpPoint& z) { return cplx(z.y); }, 0.5);
  CHECK_THROWS_AS(d_z(f, UhpPoint(0.0, 0.5)), AccuracyRegionError);
  CHECK_NOTHROW(d_z(f, UhpPoint(0.0, 0.6)));
}

TEST_CASE("xi on simple inputs") {
  const UhpPoint z(0.2, 1.3);
  CHECK(std::abs(xi(2.0, y_power(-1.0), z) - 1.0) < 1e-8);
  const auto h = fn([](const UhpPoint& w) { return std::exp(I * w.z()) * w.z(); });
  CHECK(std::abs(xi(cplx(0.7, 0.3), h, z)) < 1e-8);
}

TEST_CASE("xi of non-holomorphic E2 is 1") {
  const HarmonicExpansion e2 = e2_nonholomorphic(64);
  const SampledFunction F{[e2](const UhpPoint& z) { return assemble(e2, z).value.val; }, 1e-12, 0.2};
  for (double x : {-0.4, -0.2, 0.0, 0.2, 0.4}) {
    for (double y : {0.5, 1.0, 1.5, 2.0}) {
      CHECK(std::abs(xi(2.0, F, UhpPoint(x, y)) - 1.0) < 1e-6);
    }
  }
}

TEST_CASE("Laplacian kernel") {
  const auto h = fn([](const UhpPoint& w) { return std::exp(2.0 * pi * I * w.z()) + w.z(); });
  for (const auto& z : points()) {
    CHECK(std::abs(laplace(cplx(1.5, 0.5), h, z)) < 1e-6);
    CHECK(std::abs(laplace(2.0, y_power(-1.0), z)) < 1e-7);
  }
}

TEST_CASE("Laplacian on y^a") {
  // Delta_p y^a = -a(a-1) y^a - p a y^a, from -y^2 f'' - p y f' for f = y^a
  for (const cplx a : {cplx(0.3, 0.2), cplx(-1.5, 0.0), cplx(2.0, -1.0)}) {
    for (const cplx p : {cplx(2.0), cplx(0.5, 1.0)}) {
      for (const auto& z : points()) {
        const cplx expect = (-a * (a - 1.0) - p * a) * std::pow(cplx(z.y), a);
        CHECK(std::abs(laplace(p, y_power(a), z) - expect) < 1e-7 * std::max(1.0, std::abs(expect)));
      }
    }
  }
}

TEST_CASE("weight shifting kills the lowest and highest weight vectors") {
  const cplx p(1.3, -0.4);
  for (const auto& z : points()) {
    CHECK(std::abs(e_minus(p, y_power(p / 2.0), z)) < 1e-8);
    CHECK(std::abs(e_plus(p, y_power(-p / 2.0), z)) < 1e-8);
  }
}

TEST_CASE("Casimir eigenvalues") {
  const cplx s(0.2, 0.7);
  const SpectralParam sp{s};
  for (const auto& z : points()) {
    const cplx v = std::pow(cplx(z.y), 0.5 + s);
    CHECK(std::abs(casimir(cplx(0.9, 0.1), y_power(0.5 + s), z) - sp.eigenvalue() * v) < 1e-7);
  }
  // y^{p/2} q^n has eigenvalue (p/2)(1 - p/2)
  const cplx p(1.4, 0.3);
  const auto f = fn([p](const UhpPoint& w) { return std::pow(cplx(w.y), p / 2.0) * std::exp(2.0 * pi * I * w.z()); });
  for (const auto& z : points()) {
    CHECK(std::abs(casimir(p, f, z) - (p / 2.0) * (1.0 - p / 2.0) * f(z)) < 1e-6);
  }
}

TEST_CASE("composition of weight shifts") {
  const auto f = fn([](const UhpPoint& z) {
    return std::pow(cplx(z.y), cplx(0.7, 0.2)) * std::exp(cplx(-0.8 * z.y, 2.0 * pi * z.x)) + z.z() * z.z() / (z.y + 1.0);
  });
  const cplx p(0.8, -0.5);
  for (const auto& z : points()) {
    const cplx om = casimir(p, f, z);
    const cplx a = e_plus(p - 2.0, apply(e_minus, p, f), z);
    const cplx b = e_minus(p + 2.0, apply(e_plus, p, f), z);
    CHECK(std::abs(a - (-4.0 * om - (p * p - 2.0 * p) * f(z))) < 1e-4);
    CHECK(std::abs(b - (-4.0 * om - (p * p + 2.0 * p) * f(z))) < 1e-4);
  }
}

TEST_CASE("commuting square between xi and the lowering operator") {
  const HarmonicExpansion e2 = e2_nonholomorphic(64);
  const SampledFunction F{[e2](const UhpPoint& z) { return assemble(e2, z).value.val; }, 1e-12, 0.2};
  for (const auto& z : points()) {
    const cplx lhs = e_minus(2.0, rh_weight(2.0, F), z);
    const cplx rhs = -2.0 * ra_weight(0.0, apply(xi, 2.0, F))(z);
    CHECK(std::abs(lhs - rhs) < 1e-5);
  }
}

TEST_CASE("weight multipliers") {
  const auto f = fn([](const UhpPoint& z) { return std::exp(I * z.z()); });
  const UhpPoint z(0.3, 0.8);
  CHECK(std::abs(ra_weight(1.7, rh_weight(1.7, f))(z) - f(z)) < 1e-15);
  CHECK(rh_weight(0.0, f)(z) == f(z));
}

TEST_CASE("slash actions") {
  const auto f = fn([](const UhpPoint& z) { return std::exp(2.0 * pi * I * z.z()) / (z.z() + 2.0 * I); });
  const UhpPoint z(0.1, 0.9);
  const MultiplierSystem trivial{Jet{0.0}};
  CHECK(std::abs(slash_ra(2.0, trivial, GroupElement(), f)(z) - f(z)) < 1e-15);
  const auto periodic = fn([](const UhpPoint& w) { return std::exp(2.0 * pi * I * w.z()); });
  CHECK(std::abs(slash_hol(4.0, trivial, GroupElement::T(), periodic)(z) - periodic(z)) < 1e-14);
}

TEST_CASE("xi intertwines the holomorphic and antiholomorphic actions") {
  const HarmonicExpansion e2 = e2_nonholomorphic(64);
  const SampledFunction F{[e2](const UhpPoint& z) { return assemble(e2, z).value.val; }, 1e-12, 0.2};
  const MultiplierSystem trivial{Jet{0.0}};
  const UhpPoint z(0.15, 1.2);
  for (const GroupElement& g : {GroupElement::S(), GroupElement::T(), GroupElement(1, 0, 1, 1)}) {
    const cplx lhs = xi(2.0, slash_hol(2.0, trivial, g, F), z);
    const cplx rhs = slash_antihol(0.0, trivial, g, apply(xi, 2.0, F))(z);
    CHECK(std::abs(lhs - rhs) < 1e-5);
  }
}

TEST_CASE("finite difference order") {
  const auto f = fn([](const UhpPoint& z) { return std::exp(I * z.x) * z.y * z.y * z.y; });
  const UhpPoint z(0.2, 1.1);
  const cplx e = std::exp(I * z.x);
  const cplx exact = 0.5 * (I * e * std::pow(z.y, 3) - I * 3.0 * e * z.y * z.y);
  const double coarse = std::abs(d_z(f, z, {0.04, Scheme::central2, false}) - exact);
  const double fine = std::abs(d_z(f, z, {0.02, Scheme::central2, false}) - exact);
  CHECK(coarse / fine == doctest::Approx(4.0).epsilon(0.05));
  const double c4 = std::abs(d_z(f, z, {0.08, Scheme::central4, false}) - exact);
  const double f4 = std::abs(d_z(f, z, {0.04, Scheme::central4, false}) - exact);
  CHECK(c4 / f4 == doctest::Approx(16.0).epsilon(0.1));
}
