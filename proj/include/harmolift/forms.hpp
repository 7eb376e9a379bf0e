#pragma once

#include <vector>

#include "harmolift/harmonic.hpp"
#include "harmolift/int_series.hpp"
#include "harmolift/qexp.hpp"
#include "harmolift/sampled.hpp"

namespace harmolift {

/// Element (a b; c d) of SL2(Z).
struct GroupElement {
  long a{1}, b{0}, c{0}, d{1};

  GroupElement() = default;
  GroupElement(long a_, long b_, long c_, long d_);

  static GroupElement S() { return {0, -1, 1, 0}; }
  static GroupElement T(long n = 1) { return {1, n, 0, 1}; }

  cplx factor(cplx z) const { return static_cast<double>(c) * z + static_cast<double>(d); }
  UhpPoint apply(const UhpPoint& z) const;
  GroupElement inverse() const { return {d, -b, -c, a}; }

  friend GroupElement operator*(const GroupElement& g, const GroupElement& h);
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

struct MultiplierSystem {
  Jet r;
};

/// log eta(z) = pi i z / 12 - sum_{n>=1} sigma_{-1}(n) q^n.
struct EtaLog {
  cplx linear_coeff;
  std::vector<Rational> exact;  // exact[n-1] = -sigma_{-1}(n)
  QExpansion series;

  Jet eval(const UhpPoint& z) const;
};

/// ell = k - 12 m_ell with k in {0, 4, 6, 8, 10, 14}.
struct WeightData {
  int ell;
  int m_ell;
  int k;

  static WeightData for_weight(int ell);
};

EtaLog log_eta(int trunc);

/// log eta at a point via the product formula, summed until the terms fall
/// below double precision. Usable far closer to the real axis than a fixed
/// truncation; throws AccuracyRegionError for Im z < 1e-4.
cplx log_eta_at(const UhpPoint& z);

/// eta^{2r}: offset r/12, coefficients exp(2r log-eta series).
QExpansion eta_power(const Jet& r, int trunc);

/// eta^{2r}(z) = exp(2 r log eta(z)) at a point, using log_eta_at.
Jet eta_power_at(const Jet& r, const UhpPoint& z);

/// Lambda(g) / (pi i), where v_r(g) = e^{r Lambda(g)}.
Rational multiplier_log(const GroupElement& g);

/// v_r(g) as a jet in r.
Jet multiplier(const MultiplierSystem& ms, const GroupElement& g);

Rational bernoulli(int k);

/// Holomorphic Eisenstein series, constant term 1, k in {4, 6, 8, 10, 14}.
IntSeries eisenstein(int k, int trunc);

/// prod_{n>=1} (1 - q^n)^24 on [0, trunc].
IntSeries delta_over_q(int trunc);

/// Delta = q prod (1 - q^n)^24 on [1, trunc].
IntSeries delta(int trunc);

/// J = E4^3 / Delta = q^{-1} + 744 + 196884 q + ... on [-1, trunc - 1].
IntSeries j_invariant(int trunc);

/// Normalized family j_{ell,a,r}: q^{r/12-a} + sum_{nu >= 1-m_ell} c_nu(r) q^{nu+r/12},
/// valid to index trunc.
QExpansion j_family(int ell, int a, const Jet& r, int trunc);

/// j_{ell,a,0} with exact integer coefficients.
IntSeries j_family_exact(int ell, int a, int trunc);

/// Non-holomorphic E2 = y^{-1} - pi/3 + 8 pi sum sigma_1(n) q^n as a harmonic
/// expansion (one M-type term at nu = 0 plus holomorphic coefficients).
HarmonicExpansion e2_nonholomorphic(int trunc);

/// |F(gz) - v_r(g) (cz+d)^p F(z)|, principal branch of (cz+d)^p.
double slash_transform_check(const SampledFunction& F, cplx p, const MultiplierSystem& ms, const GroupElement& g,
                             const UhpPoint& z);

}  // namespace harmolift
