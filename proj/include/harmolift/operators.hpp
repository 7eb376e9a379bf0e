#pragma once

#include "harmolift/forms.hpp"
#include "harmolift/sampled.hpp"

namespace harmolift {

enum class Scheme { central2, central4 };

/// Finite-difference settings. With scale_with_y the step at z is h * Im z.
struct DiffConfig {
  double h{1e-3};
  Scheme scheme{Scheme::central4};
  bool scale_with_y{true};

  double step_at(const UhpPoint& z) const { return scale_with_y ? h * z.y : h; }
};

struct SpectralParam {
  cplx s;

  /// Eigenvalue 1/4 - s^2 of the Casimir operator.
  cplx eigenvalue() const { return 0.25 - s * s; }
};

/// First and pure second partial derivatives of f at z.
struct Partials {
  cplx fx, fy, fxx, fyy;
};

/// Throws std::invalid_argument unless 0 < h < 0.1.
void validate(const DiffConfig& cfg);

/// First and second partials by the configured central scheme. Throws
/// AccuracyRegionError when the stencil drops below f.min_y.
Partials partials(const SampledFunction& f, const UhpPoint& z, const DiffConfig& cfg = {});

cplx d_z(const SampledFunction& f, const UhpPoint& z, const DiffConfig& cfg = {});
cplx d_zbar(const SampledFunction& f, const UhpPoint& z, const DiffConfig& cfg = {});

/// xi_p f = 2 i y^p d_zbar f.
cplx xi(cplx p, const SampledFunction& f, const UhpPoint& z, const DiffConfig& cfg = {});

/// Delta_p f = -4 y^2 d_z d_zbar f + 2 i p y d_zbar f.
cplx laplace(cplx p, const SampledFunction& f, const UhpPoint& z, const DiffConfig& cfg = {});

cplx e_plus(cplx p, const SampledFunction& f, const UhpPoint& z, const DiffConfig& cfg = {});
cplx e_minus(cplx p, const SampledFunction& f, const UhpPoint& z, const DiffConfig& cfg = {});

/// omega_p f = -y^2 f_yy - y^2 f_xx + i p y f_x.
cplx casimir(cplx p, const SampledFunction& f, const UhpPoint& z, const DiffConfig& cfg = {});

/// Wraps a pointwise operator as a new SampledFunction, so operators compose.
/// The accuracy of the result is not tracked beyond copying min_y.
using PointOperator = cplx (*)(cplx, const SampledFunction&, const UhpPoint&, const DiffConfig&);
SampledFunction apply(PointOperator op, cplx p, const SampledFunction& f, const DiffConfig& cfg = {});

/// R^h_p: multiplication by y^{p/2}.
SampledFunction rh_weight(cplx p, const SampledFunction& f);
/// R^a_p: multiplication by y^{-p/2}.
SampledFunction ra_weight(cplx p, const SampledFunction& f);

/// z -> v(g)^{-1} e^{-i p arg(cz+d)} f(gz), arg in (-pi, pi].
SampledFunction slash_ra(cplx p, const MultiplierSystem& ms, const GroupElement& g, const SampledFunction& f);
/// z -> v(g)^{-1} (cz+d)^{-p} f(gz), arg(cz+d) in (-pi, pi].
SampledFunction slash_hol(cplx p, const MultiplierSystem& ms, const GroupElement& g, const SampledFunction& f);
/// z -> v(g)^{-1} (c zbar+d)^{-p} f(gz), arg(c zbar+d) in [-pi, pi).
SampledFunction slash_antihol(cplx p, const MultiplierSystem& ms, const GroupElement& g, const SampledFunction& f);

}  // namespace harmolift
