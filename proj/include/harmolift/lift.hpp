#pragma once

#include <array>
#include <vector>

#include "harmolift/forms.hpp"
#include "harmolift/harmonic.hpp"
#include "harmolift/qexp.hpp"

namespace harmolift {

/// Value of the basis function of t (coefficient included) at z.
/// Throws AccuracyRegionError when an inc_gamma term sits on the branch cut.
Jet term_eval(const LiftTerm& t, int ell, const Jet& r, const UhpPoint& z);

/// Sum of all terms; tail is the size of the highest-index term of each kind.
EvalResult assemble(const HarmonicExpansion& h, const UhpPoint& z);

/// Antiholomorphic image under xi_{ell+r}: every non-holomorphic term (nu, c)
/// contributes c qbar^{-nu - r/12}. Offset -r/12; valid up to index
/// max(trunc, largest -nu).
QExpansion xi_image(const HarmonicExpansion& h);

/// etabar^{-2r} F for antiholomorphic F with offset 0.
QExpansion antiholo_family(const QExpansion& F, const Jet& r, int trunc);

/// Sign flips and a coefficient shift injected into the closed-form lift
/// data, for mutation tests of the verification suite. The default is the
/// unmodified data.
struct LiftMutation {
  // b'_nu(0), nu >= 1: convolution, divisor-log sum, sigma_1 term, sigma_{-1} term.
  // b'_0(0): constant -1, the gamma/log 4 term, the zeta'(2) term.
  std::array<double, 7> signs{1, 1, 1, 1, 1, 1, 1};
  double b5_shift{0.0};

  bool is_identity() const;
};

/// The weight-2 lift of 1 at r = 0 (equal to E2 non-holomorphic), with M = 1.
HarmonicExpansion eta_lift_at_zero(int trunc, const LiftMutation& mutation = {});

/// The lift of etabar^{-2r} at r = 0 as a jet in r: values give the r = 0 lift,
/// d1 parts give the first r-derivative.
HarmonicExpansion eta_lift_derivative_at_zero(int trunc, const LiftMutation& mutation = {});

/// b'_nu(0) of the eta-power lift.
double eta_lift_b_prime(int nu, const LiftMutation& mutation = {});

/// (4 pi (M - r/12))^{ell+r-1} Gamma(1-ell-r, 4 pi (M - r/12)) as a jet.
Jet step_constant(int ell, int M, const Jet& r);

/// One step M -> M + 1 of the normalized lift. jf must be j_{ell,M,r}.
HarmonicExpansion step_family(const HarmonicExpansion& h, const QExpansion& jf);

struct MockSplit {
  QExpansion mock;
  std::vector<LiftTerm> completion;
};

/// Holomorphic part as a series with offset r/12; the rest as terms.
MockSplit mock_split(const HarmonicExpansion& h);

enum class InteriorKind { hol, inc_beta };

/// Term of an expansion at an interior point zeta, in w = (z - zeta)/(z - zetabar).
struct InteriorTerm {
  UhpPoint zeta;
  int nu{};
  Jet coeff;
  InteriorKind kind{InteriorKind::hol};

  /// Throws std::invalid_argument if kind does not match the sign of nu.
  void validate() const;
};

/// hol:      c (z - zetabar)^{-p} w^nu
/// inc_beta: c (4 Im zeta)^{p-1} (z - zetabar)^{-p} w^nu B(|w|^2, -nu, 1-p)
/// with p = ell + r. Throws AccuracyRegionError unless 0 < |w| < 1.
Jet interior_term_eval(const InteriorTerm& t, int ell, const Jet& r, const UhpPoint& z);

/// xi_{ell+r} of an inc_beta term: c (zbar - zeta)^{p-2} conj(w)^{-nu-1}; zero for hol.
Jet interior_xi_image(const InteriorTerm& t, int ell, const Jet& r, const UhpPoint& z);

}  // namespace harmolift
