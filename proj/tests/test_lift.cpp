#include <doctest.h>

#include "harmolift/errors.hpp"
#include "harmolift/forms.hpp"
#include "harmolift/lift.hpp"
#include "harmolift/operators.hpp"
#include "harmolift/serialize.hpp"
#include "harmolift/specfun.hpp"
#include "oracles.hpp"

using namespace harmolift;

namespace {

const LiftTerm* find_term(const HarmonicExpansion& h, TermKind k, int nu) {
  for (const auto& t : h.terms) {
    if (t.kind == k && t.nu == nu) {
      return &t;
    }
  }
  return nullptr;
}

SampledFunction value_of(const HarmonicExpansion& h) {
  return {[h](const UhpPoint& z) { return assemble(h, z).value.val; }, 1e-12, 0.2};
}

SampledFunction deriv_of(const HarmonicExpansion& h) {
  return {[h](const UhpPoint& z) { return assemble(h, z).value.d1; }, 1e-12, 0.2};
}

}  // namespace

TEST_CASE("single term evaluation") {
  const UhpPoint z(0.3, 0.7);
  const Jet m = term_eval({TermKind::m_type, 0, Jet{1.0}}, 2, Jet{0.0}, z);
  CHECK(std::abs(m.val - (1.0 / z.y - 1.0)) < 1e-14);

  const Jet h = term_eval({TermKind::hol, 1, Jet{8 * pi}}, 2, Jet{0.0}, UhpPoint(0.0, 1.0));
  CHECK(std::abs(h.val - 8 * pi * std::exp(-2 * pi)) < 1e-15);

  const Jet g = term_eval({TermKind::inc_gamma, -1, Jet{1.0}}, 2, Jet{0.0}, z);
  const cplx qinv = std::exp(-2.0 * pi * I * z.z());
  const cplx expect = 4.0 * pi * qinv * oracle::upper_gamma(-1.0, 4 * pi * z.y);
  CHECK(std::abs(g.val - expect) < 1e-12 * std::abs(expect));
}

TEST_CASE("incomplete gamma term is harmonic") {
  const LiftTerm t{TermKind::inc_gamma, -1, Jet{1.0}};
  const SampledFunction F{[t](const UhpPoint& z) { return term_eval(t, 2, Jet{0.0}, z).val; }, 1e-13, 0.05};
  for (const UhpPoint z : {UhpPoint(0.1, 0.5), UhpPoint(-0.3, 1.0), UhpPoint(0.2, 1.6)}) {
    CHECK(std::abs(laplace(2.0, F, z)) < 1e-5 * std::max(1.0, std::abs(F(z))));
  }
}

TEST_CASE("incomplete gamma term stays finite high in the half-plane") {
  const LiftTerm t{TermKind::inc_gamma, -64, Jet{0.0, 1.0}};
  const Jet v = term_eval(t, 2, Jet::variable(0.0), UhpPoint(0.0, 3.0));
  CHECK(std::isfinite(v.d1.real()));
  CHECK(std::abs(v.d1) < 1e-100);
}

TEST_CASE("incomplete gamma term on the branch cut") {
  const LiftTerm t{TermKind::inc_gamma, 0, Jet{1.0}};
  CHECK_THROWS_AS(term_eval(t, 2, Jet{0.0}, UhpPoint(0.0, 1.0)), AccuracyRegionError);
}

TEST_CASE("lift data at r = 0") {
  const HarmonicExpansion h = eta_lift_at_zero(16);
  CHECK(h.ell == 2);
  CHECK(h.M == 1);
  const LiftTerm* b0 = find_term(h, TermKind::hol, 0);
  REQUIRE(b0 != nullptr);
  CHECK(std::abs(b0->coeff.val - (1.0 - pi / 3.0)) < 1e-15);
  const LiftTerm* b5 = find_term(h, TermKind::hol, 5);
  REQUIRE(b5 != nullptr);
  CHECK(std::abs(b5->coeff.val - 48.0 * pi) < 1e-13);
  CHECK(find_term(h, TermKind::m_type, 0) != nullptr);

  double partial = 1.0 - pi / 3.0;
  for (int n = 1; n <= 16; ++n) {
    partial += 8.0 * pi * sigma_d(1, n) * std::exp(-2.0 * pi * n);
  }
  CHECK(std::abs(assemble(h, UhpPoint(0.0, 1.0)).value.val - partial) < 1e-14);
  CHECK(assemble(HarmonicExpansion{}, UhpPoint(0.0, 1.0)).value.val == cplx{});
}

TEST_CASE("derivative data") {
  const Constants k = constants();
  const double b0 = -1.0 + pi / 3.0 * (2.0 * k.euler_gamma - std::log(4.0)) - 4.0 / pi * k.zeta_prime_2;
  CHECK(std::abs(eta_lift_b_prime(0) - b0) < 1e-14);
  const double b1 = -8.0 * pi * (1.0 + k.euler_gamma - std::log(4.0 * pi)) + 2.0 * pi / 3.0;
  CHECK(std::abs(eta_lift_b_prime(1) - b1) < 1e-13);

  const HarmonicExpansion h = eta_lift_derivative_at_zero(16);
  const LiftTerm* a1 = find_term(h, TermKind::inc_gamma, -1);
  REQUIRE(a1 != nullptr);
  CHECK(a1->coeff.val == cplx{});
  CHECK(std::abs(a1->coeff.d1 - 2.0) < 1e-15);
  const LiftTerm* a6 = find_term(h, TermKind::inc_gamma, -6);
  REQUIRE(a6 != nullptr);
  CHECK(std::abs(a6->coeff.d1 - 2.0 * 2.0) < 1e-14);  // 2 sigma_{-1}(6) = 2 * 2
}

TEST_CASE("lift equation and harmonicity") {
  const HarmonicExpansion h = eta_lift_at_zero(64);
  const SampledFunction F = value_of(h);
  for (double x : {-0.4, 0.0, 0.4}) {
    for (double y : {0.5, 1.2, 2.0}) {
      const UhpPoint z(x, y);
      CHECK(std::abs(xi(2.0, F, z) - 1.0) < 1e-6);
      CHECK(std::abs(laplace(2.0, F, z)) < 1e-5);
    }
  }
}

TEST_CASE("differentiated lift equation") {
  const SampledFunction H = deriv_of(eta_lift_derivative_at_zero(64));
  for (const UhpPoint z : {UhpPoint(0.1, 0.9), UhpPoint(-0.3, 0.6), UhpPoint(0.2, 1.7)}) {
    const cplx lhs = xi(2.0, H, z) + std::log(z.y);
    CHECK(std::abs(lhs + 2.0 * std::conj(log_eta_at(z))) < 1e-5);
  }
}

TEST_CASE("differentiated modularity") {
  const HarmonicExpansion h = eta_lift_derivative_at_zero(64);
  for (const GroupElement& g : {GroupElement::S(), GroupElement::T() * GroupElement::S()}) {
    const cplx lambda = pi * I * multiplier_log(g).convert_to<double>();
    for (const UhpPoint z : {UhpPoint(0.1, 0.9), UhpPoint(0.45, 0.6)}) {
      const cplx w = g.factor(z.z());
      const Jet at = assemble(h, z).value;
      const cplx expect = lambda * w * w * at.val + w * w * std::log(w) * at.val + w * w * at.d1;
      CHECK(std::abs(assemble(h, g.apply(z)).value.d1 - expect) < 1e-5);
    }
  }
}

TEST_CASE("H' vanishes at i") {
  const Jet v = assemble(eta_lift_derivative_at_zero(64), UhpPoint(0.0, 1.0)).value;
  CHECK(std::abs(v.d1) < 1e-12);
}

TEST_CASE("xi image") {
  const QExpansion one = xi_image(eta_lift_at_zero(20));
  CHECK(one.orientation() == Orientation::antiholomorphic);
  CHECK(one.coeff(0) == Jet{1.0});
  for (int k = 1; k <= one.hi(); ++k) {
    CHECK(one.coeff(k) == Jet{0.0});
  }
  HarmonicExpansion pure;
  pure.ell = 2;
  pure.trunc = 4;
  pure.terms = {{TermKind::hol, 0, Jet{1.0}}, {TermKind::hol, 2, Jet{3.0}}};
  const QExpansion zero = xi_image(pure);
  for (int k = zero.lo(); k <= zero.hi(); ++k) {
    CHECK(zero.coeff(k) == Jet{0.0});
  }
}

TEST_CASE("xi image matches the numerical operator") {
  const HarmonicExpansion h = eta_lift_derivative_at_zero(64);
  const QExpansion img = xi_image(h);
  const SampledFunction F = value_of(h);
  const SampledFunction H = deriv_of(h);
  for (const UhpPoint z : {UhpPoint(0.1, 0.9), UhpPoint(-0.25, 1.4)}) {
    const Jet im = img.eval(z).value;
    const cplx x0 = xi(2.0, F, z);
    CHECK(std::abs(x0 - im.val) < 1e-6);
    // d/dr of xi_{2+r} also differentiates the weight factor y^{2+r}
    CHECK(std::abs(xi(2.0, H, z) + std::log(z.y) * x0 - im.d1) < 1e-6);
  }
}

TEST_CASE("antiholomorphic family of 1") {
  const QExpansion one = QExpansion::constant(1.0, 8, Orientation::antiholomorphic);
  const QExpansion f = antiholo_family(one, Jet::variable(0.0), 8);
  CHECK(f.coeff(0) == Jet{1.0});
  for (int n = 1; n <= 8; ++n) {
    CHECK(f.coeff(n).val == cplx{});
    CHECK(std::abs(f.coeff(n).d1 - 2.0 * sigma_d(-1, n)) < 1e-12);
  }
}

TEST_CASE("step at r = 0 leaves the value unchanged") {
  const HarmonicExpansion h = eta_lift_at_zero(32);
  const HarmonicExpansion s = step_family(h, j_family(2, 1, Jet{0.0}, 32));
  CHECK(s.M == 2);
  for (const UhpPoint z : {UhpPoint(0.1, 0.9), UhpPoint(0.2, 0.35)}) {
    CHECK(std::abs(assemble(h, z).value.val - assemble(s, z).value.val) < 1e-12);
  }
}

TEST_CASE("step retags the boundary term and keeps the xi image") {
  const HarmonicExpansion h = eta_lift_derivative_at_zero(32);
  const HarmonicExpansion s = step_family(h, j_family(2, 1, Jet::variable(0.0), 32));
  CHECK(find_term(s, TermKind::inc_gamma, -1) == nullptr);
  REQUIRE(find_term(s, TermKind::m_type, -1) != nullptr);
  const QExpansion a = xi_image(h);
  const QExpansion b = xi_image(s);
  CHECK(a.lo() == b.lo());
  CHECK(a.hi() == b.hi());
  for (int k = a.lo(); k <= a.hi(); ++k) {
    CHECK(a.coeff(k) == b.coeff(k));
  }
  CHECK_THROWS(step_family(h, j_family(2, 2, Jet::variable(0.0), 32)));
}

TEST_CASE("step constant") {
  const Jet c = step_constant(2, 1, Jet{0.0});
  CHECK(std::abs(c.val - 4.0 * pi * oracle::upper_gamma(-1.0, 4.0 * pi)) < 1e-14);
}

TEST_CASE("mock split") {
  const MockSplit m = mock_split(eta_lift_at_zero(10));
  CHECK(std::abs(m.mock.coeff(0).val - (1.0 - pi / 3.0)) < 1e-15);
  CHECK(std::abs(m.mock.coeff(3).val - 8.0 * pi * 4.0) < 1e-13);
  REQUIRE(m.completion.size() == 1);
  CHECK(m.completion[0].kind == TermKind::m_type);
  HarmonicExpansion pure;
  pure.ell = 2;
  pure.trunc = 2;
  pure.terms = {{TermKind::hol, 1, Jet{2.0}}};
  CHECK(mock_split(pure).completion.empty());
}

TEST_CASE("range validation") {
  HarmonicExpansion h = eta_lift_at_zero(4);
  h.terms.push_back({TermKind::m_type, -3, Jet{1.0}});
  CHECK_THROWS_AS(h.validate(), std::invalid_argument);
}

TEST_CASE("serialization round trip") {
  const HarmonicExpansion h = eta_lift_derivative_at_zero(6);
  const HarmonicExpansion back = harmonic_from_json(to_json(h));
  CHECK(back.terms.size() == h.terms.size());
  for (std::size_t i = 0; i < h.terms.size(); ++i) {
    CHECK(back.terms[i].coeff == h.terms[i].coeff);
    CHECK(back.terms[i].kind == h.terms[i].kind);
  }
  const QExpansion q = eta_power(Jet::variable(cplx(0.5, 0.1)), 5);
  const QExpansion qb = qexp_from_json(to_json(q));
  CHECK(qb.offset() == q.offset());
  CHECK(qb.coeff(3) == q.coeff(3));
}

TEST_CASE("interior terms") {
  const InteriorTerm one{UhpPoint(0.0, 1.0), 0, Jet{1.0}, InteriorKind::hol};
  CHECK(std::abs(interior_term_eval(one, 0, Jet{0.0}, UhpPoint(0.2, 0.8)).val - 1.0) < 1e-15);

  const InteriorTerm bad{UhpPoint(0.0, 1.0), 1, Jet{1.0}, InteriorKind::inc_beta};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  CHECK_THROWS_AS(interior_term_eval(one, 0, Jet{0.0}, UhpPoint(0.0, 1.0)), AccuracyRegionError);

  for (const auto& [ell, r] : {std::pair{2, cplx(0.0)}, std::pair{0, cplx(-1.5)}}) {
    for (int nu : {-1, -2}) {
      const InteriorTerm t{UhpPoint(0.0, 1.0), nu, Jet{1.0}, InteriorKind::inc_beta};
      const cplx p = static_cast<double>(ell) + r;
      const SampledFunction F{[t, ell, r](const UhpPoint& z) { return interior_term_eval(t, ell, Jet{r}, z).val; },
                              1e-13, 0.0};
      for (const UhpPoint z : {UhpPoint(0.1, 1.2), UhpPoint(-0.25, 0.8)}) {
        CHECK(std::abs(laplace(p, F, z)) < 1e-5);
        CHECK(std::abs(xi(p, F, z) - interior_xi_image(t, ell, Jet{r}, z).val) < 1e-5);
      }
    }
  }
}

TEST_CASE("derivative data needs nu >= 0") {
  CHECK_THROWS(eta_lift_b_prime(-1));
}
